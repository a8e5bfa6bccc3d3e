#pragma once

#include <string>
#include <vector>

#include "dpva/rep_algebra.hpp"

namespace dpva {

// degrevlex with variable order x > y iff Var(x) < Var(y)
bool grevlex_less(const CommDiffPoly::Mono& a, const CommDiffPoly::Mono& b);

enum class BasisStatus { Raw, Exact, Truncated };
const char* basis_status_str(BasisStatus s);

struct IdealBasis {
    std::vector<CommDiffPoly> generators;
    std::vector<CommDiffPoly> basis;  // monic Groebner basis once computed
    int degree_cap = 6;
    BasisStatus status = BasisStatus::Raw;
    // generators form a finite slice of a larger (differential) ideal: a nonzero normal form proves nothing
    bool slice = false;
    std::string ordering = "degrevlex";
};

// Buchberger with S-pairs of lcm degree > cap deferred; status Truncated when any was deferred
IdealBasis groebner(IdealBasis b);

enum class Membership { Yes, No, Inconclusive };
const char* membership_str(Membership m);

CommDiffPoly normal_form(const CommDiffPoly& f, const std::vector<CommDiffPoly>& basis);
// computes the basis on demand when b is Raw
Membership ideal_member(const CommDiffPoly& f, const IdealBasis& b);

// entries of X(g)X(g^-1) - P_tail(g) and X(g^-1)X(g) - P_head(g)
std::vector<CommDiffPoly> inverse_relations(const RepSpace& R);

// equality of commutative functions on Rep, i.e. modulo the inverse relations when there are any
class RepEquality {
public:
    explicit RepEquality(const RepSpace& R, int degree_cap = 6);
    bool active() const { return active_; }
    const IdealBasis& basis() const { return basis_; }
    Membership equal(const CommDiffPoly& l, const CommDiffPoly& r) const;
    // records a fail or inconclusive witness when l and r are not shown equal
    void check(CheckReport& part, const std::string& input, const Quiver& q, const CommDiffPoly& l,
               const CommDiffPoly& r) const;

private:
    bool active_ = false;
    IdealBasis basis_;
};

}  // namespace dpva
