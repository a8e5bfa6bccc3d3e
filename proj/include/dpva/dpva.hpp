#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dpva/lpoly.hpp"
#include "dpva/parallel.hpp"
#include "dpva/report.hpp"
#include "dpva/tensor.hpp"

namespace dpva {

using LTensor2 = LPoly<Tensor2>;
using LMTensor3 = LMPoly<Tensor3>;

// A double lambda-bracket on a (jet or plain) path algebra, fixed on pairs of order-0 arrows.
// On a plain quiver the derivation is zero.
class DPVAlgebra {
public:
    using RuleMap = std::map<std::pair<int, int>, LTensor2>;

    DPVAlgebra() = default;
    DPVAlgebra(std::string name, QuiverPtr q, RuleMap rules);

    const std::string& name() const { return name_; }
    const QuiverPtr& quiver() const { return q_; }
    const RuleMap& rules() const { return rules_; }
    bool has_derivation() const { return q_ && q_->jet(); }

    // stored rule, or the skew transform of the reverse one
    LTensor2 rule_value(int g, int h) const;
    // <<g^(k) _lambda h^(l)>> = (-lambda)^k (d+lambda)^l <<g _lambda h>>; memoized, thread-safe
    LTensor2 letter_bracket(Letter g, Letter h) const;

private:
    struct Cache;
    std::string name_;
    QuiverPtr q_;
    RuleMap rules_;
    std::shared_ptr<Cache> cache_;
};

enum class Side { Left, Right };

// (-lambda)^k (d+lambda)^l P, d the full tensor derivation
LTensor2 lb_sesqui(const LTensor2& P, int k, int l);

// right: sum C(n,k) lambda^{n-k} c_n' d^k(b) (x) c_n''; left: c_n' (x) d^k(b) c_n''
LTensor2 lb_shift_inner(const LTensor2& P, const NCPoly& b, Side side);

// -sum_n (-1)^n sum_k C(n,k) lambda^{n-k} d^k(c_n^sigma)
LTensor2 lb_skew_transform(const LTensor2& P);

std::vector<Tensor2> lb_to_products(const LTensor2& P);
LTensor2 products_to_lb(const std::vector<Tensor2>& prods);

LTensor2 lb_eval_words(const DPVAlgebra& V, const Word& u, const Word& v);
LTensor2 lb_eval(const DPVAlgebra& V, const NCPoly& p, const NCPoly& q);

// lambda^i mu^j coefficients of
// <<a_l <<b_m c>>>>_L - <<b_m <<a_l c>>>>_R - <<<<a_l b>>_{l+m} c>>_L
LMTensor3 lb_jacobiator(const DPVAlgebra& V, const NCPoly& a, const NCPoly& b, const NCPoly& c);

// double products a((n))b and their extended maps
Tensor2 nprod(const DPVAlgebra& V, const NCPoly& a, const NCPoly& b, int n);
Tensor3 nprod_ext_left(const DPVAlgebra& V, const NCPoly& a, int n, const Tensor2& t);   // a((n))t' (x) t''
Tensor3 nprod_ext_right(const DPVAlgebra& V, const NCPoly& a, int n, const Tensor2& t);  // t' (x) a((n))t''
Tensor3 nprod_ext_outer(const DPVAlgebra& V, const Tensor2& t, int n, const NCPoly& c);  // sum_j 1/j! ...

// both sides minus right-hand sides of the two product forms of Jacobi
struct AltJacobiDefects {
    Tensor3 plain;  // binomial sum over a((i))b
    Tensor3 equiv;  // binomial sum over (b((j))a)^sigma
};
AltJacobiDefects nprod_jacobi_defects(const DPVAlgebra& V, const NCPoly& a, const NCPoly& b, const NCPoly& c,
                                      int m, int n);

using Triple = std::array<NCPoly, 3>;
std::vector<Triple> generator_triples(const DPVAlgebra& V);

CheckReport nprod_jacobi_alt_check(const DPVAlgebra& V, const std::vector<Triple>& triples, int max_mn = 3,
                                   Exec ex = Exec::Parallel);

CheckReport dpva_check_sesqui(const DPVAlgebra& V, std::uint64_t seed = 0, Exec ex = Exec::Parallel,
                              int samples = 12);
CheckReport dpva_check_skew(const DPVAlgebra& V, std::uint64_t seed = 0, Exec ex = Exec::Parallel,
                            int samples = 12);
CheckReport dpva_check_jacobi(const DPVAlgebra& V, std::uint64_t seed = 0, Exec ex = Exec::Parallel,
                              int samples = 6);
// sesquilinearity, skewsymmetry, Jacobi; one note per axiom verdict
CheckReport dpva_check(const DPVAlgebra& V, std::uint64_t seed = 0, Exec ex = Exec::Parallel);

}  // namespace dpva
