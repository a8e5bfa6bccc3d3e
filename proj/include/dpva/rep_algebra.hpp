#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dpva/double_bracket.hpp"
#include "dpva/dpva.hpp"
#include "dpva/lpoly.hpp"

namespace dpva {

// per-vertex sizes; vertex s owns rows offset(s) .. offset(s)+n_s-1 (0-based)
struct DimVector {
    std::vector<int> n;

    int total() const;
    int offset(int s) const;
    int block_of(int idx) const;
    std::string str() const;
};

DimVector parse_dims(const std::string& text);  // "2,1"

// commutative variable (arrow, jet order, row, col), 0-based indices; numeric order = (arrow, k, i, j)
using Var = std::uint64_t;
constexpr Var make_var(int arrow, int order, int i, int j) {
    return (static_cast<Var>(arrow) << 48) | (static_cast<Var>(order) << 32) | (static_cast<Var>(i) << 16) |
           static_cast<Var>(j);
}
constexpr int var_arrow(Var v) { return static_cast<int>(v >> 48); }
constexpr int var_order(Var v) { return static_cast<int>((v >> 32) & 0xffffu); }
constexpr int var_row(Var v) { return static_cast<int>((v >> 16) & 0xffffu); }
constexpr int var_col(Var v) { return static_cast<int>(v & 0xffffu); }
constexpr Var var_shift(Var v, int by) { return make_var(var_arrow(v), var_order(v) + by, var_row(v), var_col(v)); }

// polynomial in commuting variables with exact coefficients
class CommDiffPoly {
public:
    using Mono = boost::container::small_vector<Var, 4>;  // sorted multiset
    using Map = std::map<Mono, Scalar>;

    CommDiffPoly() = default;
    static CommDiffPoly constant(const Scalar& c);
    static CommDiffPoly var(Var v, const Scalar& c = Scalar(1));

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    std::size_t size() const { return t_.size(); }
    void add(const Mono& m, const Scalar& c);

    CommDiffPoly& operator+=(const CommDiffPoly& o);
    CommDiffPoly& operator-=(const CommDiffPoly& o);
    CommDiffPoly& operator*=(const Scalar& s);
    friend CommDiffPoly operator+(CommDiffPoly a, const CommDiffPoly& b) { return a += b; }
    friend CommDiffPoly operator-(CommDiffPoly a, const CommDiffPoly& b) { return a -= b; }
    friend CommDiffPoly operator-(CommDiffPoly a) { return a *= Scalar(-1); }
    friend CommDiffPoly operator*(const Scalar& s, CommDiffPoly a) { return a *= s; }
    friend CommDiffPoly operator*(CommDiffPoly a, const Scalar& s) { return a *= s; }
    friend CommDiffPoly operator*(const CommDiffPoly& a, const CommDiffPoly& b);
    friend bool operator==(const CommDiffPoly& a, const CommDiffPoly& b) { return a.t_ == b.t_; }

    CommDiffPoly partial(Var x) const;
    std::vector<Var> vars() const;  // sorted, unique
    int max_order() const;          // -1 for constants

private:
    Map t_;
};

using LCPoly = LPoly<CommDiffPoly>;

CommDiffPoly cdel(const CommDiffPoly& p, int k = 1);  // jet shift, a derivation
CommDiffPoly cmono(const CommDiffPoly::Mono& m);
std::string var_str(const Quiver& q, Var v);  // a_1_2, D^2(a)_1_2, b^-1_1_1 (1-based)
std::string cpoly_str(const Quiver& q, const CommDiffPoly& p);
std::string lcpoly_str(const Quiver& q, const LCPoly& p);

// a quiver together with a dimension vector
struct RepSpace {
    QuiverPtr q;
    DimVector dims;

    int N() const { return dims.total(); }
    // all variables X(g^(k))_ij of arrows g, orders 0..max_order (inverse arrows at order 0 only)
    std::vector<Var> vars(int max_order = 0) const;
    bool valid(Var v) const;
};

struct PolyMatrix {
    int N = 0;
    std::vector<CommDiffPoly> a;

    explicit PolyMatrix(int n = 0) : N(n), a(static_cast<std::size_t>(n * n)) {}
    CommDiffPoly& at(int i, int j) { return a[static_cast<std::size_t>(i * N + j)]; }
    const CommDiffPoly& at(int i, int j) const { return a[static_cast<std::size_t>(i * N + j)]; }
    PolyMatrix& operator+=(const PolyMatrix& o);
    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) { return x.a == y.a; }
};

using ScalarMatrix = std::vector<Scalar>;  // row-major N x N

PolyMatrix letter_matrix(const RepSpace& R, Letter l);
PolyMatrix projector(const RepSpace& R, int vertex);
PolyMatrix rep_matrix(const RepSpace& R, const NCPoly& p, int jet_k = 0);
CommDiffPoly trace(const RepSpace& R, const NCPoly& p, int jet_k = 0);

// {X(p)_ij , X(q)_kl} pattern: sum d'_kj d''_il
CommDiffPoly entry_pattern(const RepSpace& R, const Tensor2& d, int i, int j, int k, int l);

// commutative Poisson bracket given on pairs of variables, extended as a biderivation
class CommPA {
public:
    using PairFn = std::function<CommDiffPoly(Var, Var)>;
    CommPA(RepSpace R, PairFn f);

    const RepSpace& space() const { return R_; }
    CommDiffPoly pair(Var x, Var y) const;
    // throws JetVarInPoissonContext on jet variables
    CommDiffPoly eval(const CommDiffPoly& F, const CommDiffPoly& G) const;

private:
    struct Cache;
    RepSpace R_;
    PairFn f_;
    std::shared_ptr<Cache> cache_;
};

// commutative lambda-bracket given on pairs of jet variables, extended by sesquilinearity and Leibniz
class CommPVA {
public:
    using PairFn = std::function<LCPoly(Var, Var)>;
    CommPVA(RepSpace R, PairFn f);

    const RepSpace& space() const { return R_; }
    LCPoly pair(Var x, Var y) const;
    // {F_l G} = sum_{x,y} dG/dy sum_n p_n^{xy} (l + d)^n dF/dx
    LCPoly eval(const CommDiffPoly& F, const CommDiffPoly& G) const;
    CommDiffPoly nprod(const CommDiffPoly& F, const CommDiffPoly& G, int n) const;  // n! [l^n]

private:
    struct Cache;
    RepSpace R_;
    PairFn f_;
    std::shared_ptr<Cache> cache_;
};

// (-l)^k (l + d)^l P on commutative coefficients
LCPoly clam_sesqui(const LCPoly& P, int k, int l);

CommPA rep_pa(const DPAlgebra& A, const DimVector& dims);
CommPVA rep_pva(const DPVAlgebra& V, const DimVector& dims);
CommDiffPoly cpoisson_eval(const DPAlgebra& A, const DimVector& dims, const CommDiffPoly& F, const CommDiffPoly& G);
LCPoly clambda_eval(const DPVAlgebra& V, const DimVector& dims, const CommDiffPoly& F, const CommDiffPoly& G);

// entry-wise induced lambda-bracket of two NC elements: {X(p)_ij _l X(q)_kl}
LCPoly induced_entry_bracket(const DPVAlgebra& V, const RepSpace& R, const NCPoly& p, const NCPoly& q, int i, int j,
                             int k, int l);

// commutative J and Q
CommPVA comm_jet(const CommPA& P);
CommPA comm_quotient(const CommPVA& W);
CommDiffPoly kill_comm_jets(const CommDiffPoly& p);

// infinitesimal gl_N action x_(k) on jet variables, extended as a derivation
CommDiffPoly gl_act(const RepSpace& R, const ScalarMatrix& x, int k, const CommDiffPoly& F);
// elementary block matrices E_uv with u, v in the same vertex block
std::vector<ScalarMatrix> elementary_block_matrices(const DimVector& dims);

CheckReport phi_iso_check(const DPAlgebra& A, const DimVector& dims, int cap);
CheckReport invariance_check(const DPVAlgebra& V, const DimVector& dims);
CheckReport lemma_identities_check(const DPAlgebra& A, const DimVector& dims, int cap, std::uint64_t seed = 0,
                                   int samples = 100, Exec ex = Exec::Parallel);

}  // namespace dpva
