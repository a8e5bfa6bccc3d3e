#include "dpva/jet_functor.hpp"

#include "dpva/errors.hpp"

namespace dpva {

namespace {

bool jet_free(const Word& w) {
    for (Letter l : w.letters)
        if (order_of(l) != 0) return false;
    return true;
}

}  // namespace

DPVAlgebra jet_of_dpa(const DPAlgebra& A, int cap) {
    const Quiver& base = *A.quiver();
    if (base.has_inverses()) throw InversesNotJettable();
    QuiverPtr jq = jet_quiver(base, cap);
    DPVAlgebra::RuleMap rules;
    for (const auto& [gh, d] : A.rules()) rules[gh] = LTensor2(rehome(d, jq));
    return DPVAlgebra("J(" + A.name() + ")", jq, std::move(rules));
}

NCPoly kill_jets(const NCPoly& p, const QuiverPtr& q) {
    NCPoly r(q);
    for (const auto& [k, c] : p.terms())
        if (jet_free(k[0])) r.add(k, c);
    return r;
}

Tensor2 kill_jets(const Tensor2& t, const QuiverPtr& q) {
    Tensor2 r(q);
    for (const auto& [k, c] : t.terms())
        if (jet_free(k[0]) && jet_free(k[1])) r.add(k, c);
    return r;
}

DPAlgebra quotient_Q(const DPVAlgebra& V) {
    QuiverPtr bq = base_quiver(*V.quiver());
    DPAlgebra::RuleMap rules;
    for (const auto& [gh, P] : V.rules()) rules[gh] = kill_jets(P.at(0), bq);
    std::string name = V.name();
    if (name.size() > 3 && name.rfind("J(", 0) == 0 && name.back() == ')') name = name.substr(2, name.size() - 3);
    else name = "Q(" + name + ")";
    return DPAlgebra(name, bq, std::move(rules));
}

CheckReport check_QJ_roundtrip(const DPAlgebra& A, int cap) {
    Stopwatch sw;
    CheckReport rep("check_QJ_roundtrip:" + A.name());
    DPAlgebra B = quotient_Q(jet_of_dpa(A, cap));
    const Quiver& qa = *A.quiver();
    const Quiver& qb = *B.quiver();
    if (qa.num_vertices() != qb.num_vertices() || qa.num_arrows() != qb.num_arrows() || qb.jet())
        rep.fail({"quiver", std::to_string(qb.num_vertices()) + " vertices, " + std::to_string(qb.num_arrows()) + " arrows",
                  std::to_string(qa.num_vertices()) + " vertices, " + std::to_string(qa.num_arrows()) + " arrows"});
    for (int g = 0; g < qa.num_arrows(); ++g)
        for (int h = 0; h < qa.num_arrows(); ++h) {
            ++rep.cases;
            Tensor2 x = B.rule_value(g, h), y = A.rule_value(g, h);
            if (!(x == y))
                rep.fail({"<<" + qa.arrow_at(g).name + "," + qa.arrow_at(h).name + ">>", tensor_str(x), tensor_str(y)});
        }
    rep.millis = sw.millis();
    return rep;
}

}  // namespace dpva
