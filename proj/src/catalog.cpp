#include "dpva/catalog.hpp"

#include <memory>

namespace dpva {

namespace {

std::shared_ptr<Quiver> one_vertex(std::initializer_list<const char*> names) {
    auto q = std::make_shared<Quiver>();
    q->add_vertex("1");
    for (const char* n : names) q->add_arrow(n, 0, 0);
    return q;
}

}  // namespace

DPAlgebra make_ku(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    QuiverPtr q = one_vertex({"a"});
    NCPoly a = nc_letter(q, make_letter(0)), u = nc_one(q), a2 = a * a;
    Tensor2 d = alpha * (t2_pure(a, u) - t2_pure(u, a));
    d += beta * (t2_pure(a2, u) - t2_pure(u, a2));
    d += gamma * (t2_pure(a2, a) - t2_pure(a, a2));
    std::string name = "ku(" + scalar_str(alpha) + "," + scalar_str(beta) + "," + scalar_str(gamma) + ")";
    return DPAlgebra(name, q, {{{0, 0}, d}});
}

DPAlgebra make_symp() {
    QuiverPtr q = one_vertex({"a", "b"});
    NCPoly u = nc_one(q);
    return DPAlgebra("Symp", q, {{{1, 0}, t2_pure(u, u)}});
}

DPAlgebra make_symp_gl() {
    auto m = one_vertex({"a", "b"});
    m->make_invertible(1);
    QuiverPtr q = m;
    NCPoly a = nc_letter(q, make_letter(0)), b = nc_letter(q, make_letter(1)), u = nc_one(q);
    DPAlgebra::RuleMap r;
    r[{1, 1}] = Tensor2(q);
    r[{0, 1}] = t2_pure(b, u);
    r[{0, 0}] = t2_pure(a, u) - t2_pure(u, a);
    return DPAlgebra("SympGL", q, r);
}

DPAlgebra make_qpq(int p, int qn, int c) {
    auto m = std::make_shared<Quiver>();
    m->add_vertex("1");
    m->add_vertex("2");
    for (int i = 1; i <= p; ++i) m->add_arrow("v" + std::to_string(i), 0, 1);
    for (int j = 1; j <= qn; ++j) m->add_arrow("w" + std::to_string(j), 1, 0);
    // the double quiver of a single arrow type when every v_i has its w_i
    if (p == qn && qn == c)
        for (int i = 0; i < p; ++i) m->set_star(i, p + i);
    QuiverPtr q = m;
    DPAlgebra::RuleMap r;
    for (int i = 1; i <= std::min({p, qn, c}); ++i)
        r[{i - 1, p + i - 1}] = t2_pure(q, Word::idem(1), Word::idem(0));
    return DPAlgebra("Q" + std::to_string(p) + std::to_string(qn) + std::to_string(c), q, r);
}

DPAlgebra make_zero(int loops) {
    auto m = std::make_shared<Quiver>();
    m->add_vertex("1");
    for (int i = 0; i < loops; ++i) m->add_arrow("x" + std::to_string(i + 1), 0, 0);
    return DPAlgebra("zero", m, {});
}

DPVAlgebra make_kupva(const Scalar& eps, int cap) {
    auto m = one_vertex({"u"});
    m->set_jet(cap);
    QuiverPtr q = m;
    NCPoly u = nc_letter(q, make_letter(0)), one = nc_one(q);
    LTensor2 P;
    P.mut(0) = t2_pure(one, u) - t2_pure(u, one);
    P.mut(1) = eps * t2_pure(one, one);
    P.trim();
    return DPVAlgebra("kuPVA(" + scalar_str(eps) + ")", q, {{{0, 0}, P}});
}

}  // namespace dpva
