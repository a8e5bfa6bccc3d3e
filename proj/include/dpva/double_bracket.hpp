#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dpva/parallel.hpp"
#include "dpva/report.hpp"
#include "dpva/tensor.hpp"

namespace dpva {

// A double bracket on a path algebra, fixed by its values on pairs of arrows.
class DPAlgebra {
public:
    using RuleMap = std::map<std::pair<int, int>, Tensor2>;  // (arrow, arrow) -> value

    DPAlgebra() = default;
    DPAlgebra(std::string name, QuiverPtr q, RuleMap rules);

    const std::string& name() const { return name_; }
    const QuiverPtr& quiver() const { return q_; }
    const RuleMap& rules() const { return rules_; }

    // value on two order-0 letters (inverse arrows included), with skew completion
    const Tensor2& letter_bracket(Letter g, Letter h) const;
    // the value a generator pair gets from its stored rule(s) alone
    Tensor2 rule_value(int g, int h) const;

private:
    std::string name_;
    QuiverPtr q_;
    RuleMap rules_;
    std::vector<Tensor2> table_;
    int n_ = 0;
};

// Van den Bergh bracket of a double quiver: <<a,a*>> = eps(a) e_h(a) (x) e_t(a)
DPAlgebra::RuleMap double_quiver_rules(const QuiverPtr& q);

Tensor2 db_eval(const DPAlgebra& A, const NCPoly& p, const NCPoly& q);
Tensor2 db_eval_words(const DPAlgebra& A, const Word& u, const Word& v);

// extended maps on tensors
Tensor3 db_ext_left(const DPAlgebra& A, const NCPoly& a, const Tensor2& t);   // <<a,t'>> (x) t''
Tensor3 db_ext_right(const DPAlgebra& A, const NCPoly& a, const Tensor2& t);  // t' (x) <<a,t''>>
Tensor3 db_ext_outer(const DPAlgebra& A, const Tensor2& t, const NCPoly& c);  // <<t',c>> (x)_1 t''

Tensor3 db_jacobiator(const DPAlgebra& A, const NCPoly& a, const NCPoly& b, const NCPoly& c);

CheckReport db_check_skew(const DPAlgebra& A, int sample_len = 3, std::uint64_t seed = 0,
                          Exec ex = Exec::Parallel, int samples = 40);
CheckReport db_check_jacobi(const DPAlgebra& A, std::uint64_t seed = 0, Exec ex = Exec::Parallel,
                            int samples = 12);

}  // namespace dpva
