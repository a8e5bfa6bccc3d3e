#include "dpva/rep_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "dpva/errors.hpp"
#include "dpva/jet_functor.hpp"
#include "dpva/random.hpp"

namespace dpva {

// ---------- DimVector ----------

int DimVector::total() const {
    int t = 0;
    for (int x : n) t += x;
    return t;
}

int DimVector::offset(int s) const {
    int o = 0;
    for (int i = 0; i < s; ++i) o += n.at(i);
    return o;
}

int DimVector::block_of(int idx) const {
    int o = 0;
    for (std::size_t s = 0; s < n.size(); ++s) {
        if (idx < o + n[s]) return static_cast<int>(s);
        o += n[s];
    }
    return -1;
}

std::string DimVector::str() const {
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    return s;
}

DimVector parse_dims(const std::string& text) {
    DimVector d;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v < 0) throw Error("bad dimension vector: " + text);
        d.n.push_back(v);
    }
    if (d.n.empty()) throw Error("empty dimension vector");
    return d;
}

// ---------- CommDiffPoly ----------

CommDiffPoly CommDiffPoly::constant(const Scalar& c) {
    CommDiffPoly p;
    p.add({}, c);
    return p;
}

CommDiffPoly CommDiffPoly::var(Var v, const Scalar& c) {
    CommDiffPoly p;
    p.add(Mono{v}, c);
    return p;
}

bool CommDiffPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

Scalar CommDiffPoly::constant_term() const {
    auto it = t_.find(Mono{});
    return it == t_.end() ? Scalar(0) : it->second;
}

void CommDiffPoly::add(const Mono& m, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

CommDiffPoly& CommDiffPoly::operator+=(const CommDiffPoly& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

CommDiffPoly& CommDiffPoly::operator-=(const CommDiffPoly& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

CommDiffPoly& CommDiffPoly::operator*=(const Scalar& s) {
    if (sgn(s) == 0) {
        t_.clear();
        return *this;
    }
    for (auto& kv : t_) kv.second *= s;
    return *this;
}

CommDiffPoly operator*(const CommDiffPoly& a, const CommDiffPoly& b) {
    CommDiffPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            CommDiffPoly::Mono m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add(m, ca * cb);
        }
    return r;
}

CommDiffPoly CommDiffPoly::partial(Var x) const {
    CommDiffPoly r;
    for (const auto& [m, c] : t_) {
        auto lo = std::lower_bound(m.begin(), m.end(), x);
        auto hi = std::upper_bound(lo, m.end(), x);
        long e = hi - lo;
        if (e == 0) continue;
        Mono rest(m.begin(), m.end());
        rest.erase(rest.begin() + (lo - m.begin()));
        r.add(rest, c * e);
    }
    return r;
}

std::vector<Var> CommDiffPoly::vars() const {
    std::vector<Var> v;
    for (const auto& [m, c] : t_) v.insert(v.end(), m.begin(), m.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int CommDiffPoly::max_order() const {
    int o = -1;
    for (const auto& [m, c] : t_)
        for (Var v : m) o = std::max(o, var_order(v));
    return o;
}

CommDiffPoly cmono(const CommDiffPoly::Mono& m) {
    CommDiffPoly p;
    p.add(m, Scalar(1));
    return p;
}

CommDiffPoly cdel(const CommDiffPoly& p, int k) {
    CommDiffPoly cur = p;
    for (int s = 0; s < k && !cur.is_zero(); ++s) {
        CommDiffPoly nxt;
        for (const auto& [m, c] : cur.terms())
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i > 0 && m[i] == m[i - 1]) continue;
                long e = std::count(m.begin(), m.end(), m[i]);
                CommDiffPoly::Mono n(m.begin(), m.end());
                n.erase(n.begin() + static_cast<long>(i));
                n.insert(std::upper_bound(n.begin(), n.end(), var_shift(m[i], 1)), var_shift(m[i], 1));
                nxt.add(n, c * e);
            }
        cur = std::move(nxt);
    }
    return cur;
}

std::string var_str(const Quiver& q, Var v) {
    return q.letter_name(make_letter(var_arrow(v), var_order(v))) + "_" + std::to_string(var_row(v) + 1) + "_" +
           std::to_string(var_col(v) + 1);
}

std::string cpoly_str(const Quiver& q, const CommDiffPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        s += scalar_str(c);
        for (Var v : m) s += " * " + var_str(q, v);
    }
    return s;
}

std::string lcpoly_str(const Quiver& q, const LCPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int n = 0; n <= p.degree(); ++n) {
        if (p.at(n).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + cpoly_str(q, p.at(n)) + ")";
        if (n) s += " l^" + std::to_string(n);
    }
    return s;
}

// ---------- RepSpace, matrices ----------

std::vector<Var> RepSpace::vars(int max_order) const {
    std::vector<Var> out;
    const Quiver& Q = *q;
    for (int a = 0; a < Q.num_arrows(); ++a) {
        const Arrow& A = Q.arrow_at(a);
        int top = A.inverse >= 0 ? 0 : max_order;
        int r0 = dims.offset(A.tail), c0 = dims.offset(A.head);
        for (int k = 0; k <= top; ++k)
            for (int i = 0; i < dims.n.at(A.tail); ++i)
                for (int j = 0; j < dims.n.at(A.head); ++j) out.push_back(make_var(a, k, r0 + i, c0 + j));
    }
    return out;
}

bool RepSpace::valid(Var v) const {
    const Quiver& Q = *q;
    int a = var_arrow(v);
    if (a >= Q.num_arrows()) return false;
    const Arrow& A = Q.arrow_at(a);
    return dims.block_of(var_row(v)) == A.tail && dims.block_of(var_col(v)) == A.head;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix r(x.N);
    for (int i = 0; i < x.N; ++i)
        for (int k = 0; k < x.N; ++k) {
            const CommDiffPoly& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < x.N; ++j) {
                const CommDiffPoly& ykj = y.at(k, j);
                if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
            }
        }
    return r;
}

PolyMatrix letter_matrix(const RepSpace& R, Letter l) {
    const Quiver& Q = *R.q;
    int a = arrow_of(l), k = order_of(l);
    const Arrow& A = Q.arrow_at(a);
    PolyMatrix m(R.N());
    int r0 = R.dims.offset(A.tail), c0 = R.dims.offset(A.head);
    for (int i = 0; i < R.dims.n.at(A.tail); ++i)
        for (int j = 0; j < R.dims.n.at(A.head); ++j)
            m.at(r0 + i, c0 + j) = CommDiffPoly::var(make_var(a, k, r0 + i, c0 + j));
    return m;
}

PolyMatrix projector(const RepSpace& R, int vertex) {
    PolyMatrix m(R.N());
    int o = R.dims.offset(vertex);
    for (int i = 0; i < R.dims.n.at(vertex); ++i) m.at(o + i, o + i) = CommDiffPoly::constant(Scalar(1));
    return m;
}

namespace {

// row r of X(w), as a vector of entries
std::vector<CommDiffPoly> word_row(const RepSpace& R, const Word& w, int r) {
    int N = R.N();
    std::vector<CommDiffPoly> row(N);
    if (R.dims.block_of(r) != w.anchor && w.letters.empty()) return row;
    if (w.letters.empty()) {
        row[r] = CommDiffPoly::constant(Scalar(1));
        return row;
    }
    const Quiver& Q = *R.q;
    row[r] = CommDiffPoly::constant(Scalar(1));
    for (Letter l : w.letters) {
        const Arrow& A = Q.arrow_at(arrow_of(l));
        int r0 = R.dims.offset(A.tail), c0 = R.dims.offset(A.head);
        std::vector<CommDiffPoly> nxt(N);
        for (int i = 0; i < R.dims.n.at(A.tail); ++i) {
            const CommDiffPoly& ri = row[r0 + i];
            if (ri.is_zero()) continue;
            for (int j = 0; j < R.dims.n.at(A.head); ++j)
                nxt[c0 + j] += ri * CommDiffPoly::var(make_var(arrow_of(l), order_of(l), r0 + i, c0 + j));
        }
        row = std::move(nxt);
    }
    return row;
}

CommDiffPoly word_entry(const RepSpace& R, const Word& w, int r, int c) { return word_row(R, w, r)[c]; }

}  // namespace

PolyMatrix rep_matrix(const RepSpace& R, const NCPoly& p, int jet_k) {
    int N = R.N();
    PolyMatrix m(N);
    for (const auto& [k, c] : p.terms())
        for (int r = 0; r < N; ++r) {
            auto row = word_row(R, k[0], r);
            for (int j = 0; j < N; ++j)
                if (!row[j].is_zero()) m.at(r, j) += row[j] * c;
        }
    if (jet_k > 0)
        for (auto& e : m.a) e = cdel(e, jet_k);
    return m;
}

CommDiffPoly trace(const RepSpace& R, const NCPoly& p, int jet_k) {
    CommDiffPoly t;
    for (const auto& [k, c] : p.terms())
        for (int r = 0; r < R.N(); ++r) t += word_entry(R, k[0], r, r) * c;
    return cdel(t, jet_k);
}

CommDiffPoly entry_pattern(const RepSpace& R, const Tensor2& d, int i, int j, int k, int l) {
    CommDiffPoly r;
    for (const auto& [key, c] : d.terms()) {
        CommDiffPoly x = word_entry(R, key[0], k, j);
        if (x.is_zero()) continue;
        CommDiffPoly y = word_entry(R, key[1], i, l);
        if (y.is_zero()) continue;
        r += x * y * c;
    }
    return r;
}

// ---------- CommPA / CommPVA ----------

struct CommPA::Cache {
    std::mutex m;
    std::unordered_map<Var, std::unordered_map<Var, CommDiffPoly>> map;
};

struct CommPVA::Cache {
    std::mutex m;
    std::unordered_map<Var, std::unordered_map<Var, LCPoly>> map;
};

CommPA::CommPA(RepSpace R, PairFn f) : R_(std::move(R)), f_(std::move(f)), cache_(std::make_shared<Cache>()) {}

CommDiffPoly CommPA::pair(Var x, Var y) const {
    {
        std::lock_guard<std::mutex> lk(cache_->m);
        auto it = cache_->map.find(x);
        if (it != cache_->map.end()) {
            auto jt = it->second.find(y);
            if (jt != it->second.end()) return jt->second;
        }
    }
    CommDiffPoly v = f_(x, y);
    std::lock_guard<std::mutex> lk(cache_->m);
    return cache_->map[x].emplace(y, std::move(v)).first->second;
}

CommDiffPoly CommPA::eval(const CommDiffPoly& F, const CommDiffPoly& G) const {
    if (F.max_order() > 0 || G.max_order() > 0) throw JetVarInPoissonContext();
    CommDiffPoly r;
    auto gv = G.vars();
    for (Var x : F.vars()) {
        CommDiffPoly fx = F.partial(x);
        for (Var y : gv) {
            CommDiffPoly p = pair(x, y);
            if (p.is_zero()) continue;
            r += fx * G.partial(y) * p;
        }
    }
    return r;
}

CommPVA::CommPVA(RepSpace R, PairFn f) : R_(std::move(R)), f_(std::move(f)), cache_(std::make_shared<Cache>()) {}

LCPoly CommPVA::pair(Var x, Var y) const {
    {
        std::lock_guard<std::mutex> lk(cache_->m);
        auto it = cache_->map.find(x);
        if (it != cache_->map.end()) {
            auto jt = it->second.find(y);
            if (jt != it->second.end()) return jt->second;
        }
    }
    LCPoly v = f_(x, y);
    std::lock_guard<std::mutex> lk(cache_->m);
    return cache_->map[x].emplace(y, std::move(v)).first->second;
}

LCPoly CommPVA::eval(const CommDiffPoly& F, const CommDiffPoly& G) const {
    LCPoly r;
    auto gv = G.vars();
    for (Var x : F.vars()) {
        CommDiffPoly fx = F.partial(x);
        std::vector<CommDiffPoly> dfx{fx};
        for (Var y : gv) {
            LCPoly p = pair(x, y);
            if (p.is_zero()) continue;
            CommDiffPoly gy = G.partial(y);
            while (static_cast<int>(dfx.size()) <= p.degree()) dfx.push_back(cdel(dfx.back()));
            for (int n = 0; n <= p.degree(); ++n) {
                if (p.at(n).is_zero()) continue;
                CommDiffPoly base = gy * p.at(n);
                for (int t = 0; t <= n; ++t) {
                    if (dfx[t].is_zero()) continue;
                    r.mut(n - t) += base * dfx[t] * binomial(n, t);
                }
            }
        }
    }
    r.trim();
    return r;
}

CommDiffPoly CommPVA::nprod(const CommDiffPoly& F, const CommDiffPoly& G, int n) const {
    if (n < 0) return {};
    return eval(F, G).at(n) * factorial(n);
}

LCPoly clam_sesqui(const LCPoly& P, int k, int l) {
    LCPoly r;
    for (int n = 0; n <= P.degree(); ++n) {
        if (P.at(n).is_zero()) continue;
        for (int t = 0; t <= l; ++t) {
            CommDiffPoly d = cdel(P.at(n), t);
            if (d.is_zero()) continue;
            r.mut(n + l - t + k) += d * (binomial(l, t) * ((k % 2) ? Scalar(-1) : Scalar(1)));
        }
    }
    r.trim();
    return r;
}

CommPA rep_pa(const DPAlgebra& A, const DimVector& dims) {
    RepSpace R{A.quiver(), dims};
    if (static_cast<int>(dims.n.size()) != A.quiver()->num_vertices())
        throw Error("dimension vector length does not match the vertex count");
    return CommPA(R, [A, R](Var x, Var y) {
        const Tensor2& d = A.letter_bracket(make_letter(var_arrow(x)), make_letter(var_arrow(y)));
        return entry_pattern(R, d, var_row(x), var_col(x), var_row(y), var_col(y));
    });
}

CommPVA rep_pva(const DPVAlgebra& V, const DimVector& dims) {
    RepSpace R{V.quiver(), dims};
    if (static_cast<int>(dims.n.size()) != V.quiver()->num_vertices())
        throw Error("dimension vector length does not match the vertex count");
    return CommPVA(R, [V, R](Var x, Var y) {
        LTensor2 P = V.letter_bracket(make_letter(var_arrow(x), var_order(x)), make_letter(var_arrow(y), var_order(y)));
        LCPoly r;
        for (int n = 0; n <= P.degree(); ++n)
            r.mut(n) = entry_pattern(R, P.at(n), var_row(x), var_col(x), var_row(y), var_col(y));
        r.trim();
        return r;
    });
}

CommDiffPoly cpoisson_eval(const DPAlgebra& A, const DimVector& dims, const CommDiffPoly& F, const CommDiffPoly& G) {
    return rep_pa(A, dims).eval(F, G);
}

LCPoly clambda_eval(const DPVAlgebra& V, const DimVector& dims, const CommDiffPoly& F, const CommDiffPoly& G) {
    return rep_pva(V, dims).eval(F, G);
}

LCPoly induced_entry_bracket(const DPVAlgebra& V, const RepSpace& R, const NCPoly& p, const NCPoly& q, int i, int j,
                             int k, int l) {
    LTensor2 P = lb_eval(V, p, q);
    LCPoly r;
    for (int n = 0; n <= P.degree(); ++n) r.mut(n) = entry_pattern(R, P.at(n), i, j, k, l);
    r.trim();
    return r;
}

CommPVA comm_jet(const CommPA& P) {
    return CommPVA(P.space(), [P](Var x, Var y) {
        Var bx = make_var(var_arrow(x), 0, var_row(x), var_col(x));
        Var by = make_var(var_arrow(y), 0, var_row(y), var_col(y));
        return clam_sesqui(LCPoly(P.pair(bx, by)), var_order(x), var_order(y));
    });
}

CommDiffPoly kill_comm_jets(const CommDiffPoly& p) {
    CommDiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        bool ok = true;
        for (Var v : m) ok = ok && var_order(v) == 0;
        if (ok) r.add(m, c);
    }
    return r;
}

CommPA comm_quotient(const CommPVA& W) {
    return CommPA(W.space(), [W](Var x, Var y) { return kill_comm_jets(W.pair(x, y).at(0)); });
}

// ---------- gl action ----------

CommDiffPoly gl_act(const RepSpace& R, const ScalarMatrix& x, int k, const CommDiffPoly& F) {
    if (k < 0) return {};
    const Quiver& Q = *R.q;
    int N = R.N();
    CommDiffPoly r;
    for (Var v : F.vars()) {
        int l = var_order(v);
        if (k > l) continue;
        int a = var_arrow(v), m = l - k, i = var_row(v), j = var_col(v);
        const Arrow& A = Q.arrow_at(a);
        int r0 = R.dims.offset(A.tail), c0 = R.dims.offset(A.head);
        int nr = R.dims.n.at(A.tail), nc = R.dims.n.at(A.head);
        CommDiffPoly act;
        // (X x - x X)_ij with X = X(g^(m))
        for (int t = c0; t < c0 + nc; ++t) {
            const Scalar& xtj = x[static_cast<std::size_t>(t * N + j)];
            if (sgn(xtj) != 0) act += CommDiffPoly::var(make_var(a, m, i, t), xtj);
        }
        for (int t = r0; t < r0 + nr; ++t) {
            const Scalar& xit = x[static_cast<std::size_t>(i * N + t)];
            if (sgn(xit) != 0) act -= CommDiffPoly::var(make_var(a, m, t, j), xit);
        }
        if (act.is_zero()) continue;
        r += F.partial(v) * act * falling(l, k);
    }
    return r;
}

std::vector<ScalarMatrix> elementary_block_matrices(const DimVector& dims) {
    int N = dims.total();
    std::vector<ScalarMatrix> out;
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v) {
            if (dims.block_of(u) != dims.block_of(v)) continue;
            ScalarMatrix m(static_cast<std::size_t>(N * N), Scalar(0));
            m[static_cast<std::size_t>(u * N + v)] = 1;
            out.push_back(std::move(m));
        }
    return out;
}

// ---------- checks ----------

namespace {

std::string vpair(const Quiver& q, Var x, Var y) { return "x=" + var_str(q, x) + "; y=" + var_str(q, y); }

LCPoly lc_map(const LCPoly& P, const std::function<CommDiffPoly(const CommDiffPoly&)>& f) {
    LCPoly r;
    for (int n = 0; n <= P.degree(); ++n) r.mut(n) = f(P.at(n));
    r.trim();
    return r;
}

CommDiffPoly random_cpoly(const std::vector<Var>& vars, Rng& rng, int terms, int max_deg) {
    CommDiffPoly p;
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::uniform_int_distribution<int> deg(1, max_deg);
    for (int t = 0; t < terms; ++t) {
        CommDiffPoly::Mono m;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m.push_back(vars[pick(rng)]);
        std::sort(m.begin(), m.end());
        p.add(m, random_scalar(rng));
    }
    return p;
}

}  // namespace

CheckReport phi_iso_check(const DPAlgebra& A, const DimVector& dims, int cap) {
    Stopwatch sw;
    CheckReport rep("phi_iso_check:" + A.name() + "@" + dims.str());
    const Quiver& q = *A.quiver();
    DPVAlgebra J = jet_of_dpa(A, cap);
    CommPA PA = rep_pa(A, dims);
    CommPVA W1 = comm_jet(PA);
    CommPVA W2 = rep_pva(J, dims);
    RepSpace R{A.quiver(), dims};
    auto vars = R.vars(cap);
    for (Var x : vars)
        for (Var y : vars) {
            ++rep.cases;
            LCPoly a = W1.pair(x, y), b = W2.pair(x, y);
            if (!(a == b)) rep.fail({"back square " + vpair(q, x, y), lcpoly_str(q, a), lcpoly_str(q, b)});
        }
    // left square: commutative Q of the represented jet vs the represented base
    CommPA Q1 = comm_quotient(W2);
    for (Var x : R.vars(0))
        for (Var y : R.vars(0)) {
            ++rep.cases;
            CommDiffPoly a = Q1.pair(x, y), b = PA.pair(x, y);
            if (!(a == b)) rep.fail({"left square " + vpair(q, x, y), cpoly_str(q, a), cpoly_str(q, b)});
        }
    rep.millis = sw.millis();
    return rep;
}

CheckReport invariance_check(const DPVAlgebra& V, const DimVector& dims) {
    Stopwatch sw;
    CheckReport rep("invariance_check:" + V.name() + "@" + dims.str());
    const Quiver& q = *V.quiver();
    CommPVA W = rep_pva(V, dims);
    const RepSpace& R = W.space();
    auto vars = R.vars(V.has_derivation() ? 1 : 0);
    for (const auto& xi : elementary_block_matrices(dims)) {
        auto act = [&](const CommDiffPoly& f) { return gl_act(R, xi, 0, f); };
        for (Var x : vars) {
            CommDiffPoly X = CommDiffPoly::var(x);
            if (V.has_derivation()) {
                ++rep.cases;
                CommDiffPoly l = act(cdel(X)), r = cdel(act(X));
                if (!(l == r)) rep.fail({"xi d = d xi on " + var_str(q, x), cpoly_str(q, l), cpoly_str(q, r)});
            }
            for (Var y : vars) {
                ++rep.cases;
                CommDiffPoly Y = CommDiffPoly::var(y);
                LCPoly lhs = lc_map(W.pair(x, y), act);
                LCPoly rhs = W.eval(act(X), Y) + W.eval(X, act(Y));
                if (!(lhs == rhs)) rep.fail({vpair(q, x, y), lcpoly_str(q, lhs), lcpoly_str(q, rhs)});
            }
        }
    }
    rep.millis = sw.millis();
    return rep;
}

CheckReport lemma_identities_check(const DPAlgebra& A, const DimVector& dims, int cap, std::uint64_t seed,
                                   int samples, Exec ex) {
    Stopwatch sw;
    CheckReport rep("lemma_identities_check:" + A.name() + "@" + dims.str(), seed);
    const Quiver& q = *A.quiver();
    CommPVA W = comm_jet(rep_pa(A, dims));
    const RepSpace& R = W.space();
    auto jet_vars = R.vars(std::max(0, cap - 2));
    auto base_vars = R.vars(0);
    auto xs = elementary_block_matrices(dims);
    std::vector<CheckReport> parts(static_cast<std::size_t>(samples));
    std::vector<int> nontrivial(parts.size(), 0);
    for_each_index(parts.size(), ex, [&](std::size_t s) {
        Rng rng(seed * 1000003u + s);
        CheckReport& part = parts[s];
        part.cases = 1;
        CommDiffPoly a = random_cpoly(jet_vars, rng, 2, 2), b = random_cpoly(jet_vars, rng, 2, 2);
        CommDiffPoly a0 = random_cpoly(base_vars, rng, 2, 2);
        ScalarMatrix x(xs[0].size(), Scalar(0));
        for (const auto& e : xs)
            if (rng() % 3 == 0)
                for (std::size_t t = 0; t < x.size(); ++t) x[t] += e[t] * random_scalar(rng, 3);
        std::uniform_int_distribution<int> small(0, 2);
        int i = small(rng), k = small(rng), n = small(rng);
        auto X = [&](int kk, const CommDiffPoly& f) { return gl_act(R, x, kk, f); };
        std::string tag = "sample " + std::to_string(s) + " (i=" + std::to_string(i) + ", k=" + std::to_string(k) +
                          ", n=" + std::to_string(n) + ")";
        auto cmp = [&](const char* id, const CommDiffPoly& l, const CommDiffPoly& r) {
            if (!(l == r)) part.fail({std::string(id) + " " + tag, cpoly_str(q, l), cpoly_str(q, r)});
            if (!l.is_zero()) ++nontrivial[s];
        };
        Scalar sgn_i = (i % 2) ? Scalar(-1) : Scalar(1);
        // (1)
        {
            CommDiffPoly l = W.nprod(cdel(a, i), b, n);
            CommDiffPoly r = i <= n ? W.nprod(a, b, n - i) * (sgn_i * falling(n, i)) : CommDiffPoly();
            cmp("identity (1)", l, r);
        }
        // (2)
        cmp("identity (2)", X(k, cdel(a)), cdel(X(k, a)) + X(k - 1, a) * Scalar(k));
        // (3)
        {
            CommDiffPoly r = cdel(X(k, a), i);
            for (int l = 1; l <= i; ++l) r += cdel(X(k - l, a), i - l) * (binomial(i, l) * falling(k, l));
            cmp("identity (3)", X(k, cdel(a, i)), r);
        }
        // (4), a0 in A
        {
            CommDiffPoly di = cdel(a0, i);
            CommDiffPoly l = X(k, W.nprod(di, b, n));
            CommDiffPoly r = W.nprod(di, X(k, b), n);
            if (i <= n) r += W.nprod(X(0, a0), b, n - i + k) * (sgn_i * falling(n, i));
            cmp("identity (4)", l, r);
        }
        // induction formula
        {
            CommDiffPoly l = X(k, W.nprod(a, b, n));
            CommDiffPoly r = W.nprod(a, X(k, b), n);
            for (int l2 = 0; l2 <= k; ++l2) r += W.nprod(X(k - l2, a), b, n + l2) * binomial(k, l2);
            cmp("induction formula", l, r);
        }
    });
    for (const auto& p : parts) rep.absorb(p);
    int nz = 0;
    for (int v : nontrivial) nz += v;
    rep.note(std::to_string(nz) + " of " + std::to_string(5 * samples) + " identity instances have a nonzero side");
    rep.millis = sw.millis();
    return rep;
}

}  // namespace dpva
