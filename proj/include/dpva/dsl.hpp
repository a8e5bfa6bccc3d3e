#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpva/double_bracket.hpp"
#include "dpva/dpva.hpp"
#include "dpva/reduction.hpp"

namespace dpva {

// Parsed algebra description. Declarations are resolved; rule values are normalized.
struct AlgebraFile {
    struct Rule {
        int g = 0;
        int h = 0;
        LTensor2 value;  // lambda^0 only for dbracket
        int line = 0;
    };

    std::string name;
    std::shared_ptr<Quiver> quiver;
    std::vector<std::pair<std::string, Scalar>> params;
    bool lambda = false;  // lbracket rules on a jet quiver
    int jets = 8;
    std::vector<Rule> rules;  // explicit rules in file order
    std::optional<NCPoly> moment;
    std::map<int, Scalar> zeta;

    bool has_star() const;
};

// line-oriented grammar; throws ParseError (1-based line:col) on syntax and semantic errors
AlgebraFile parse_algebra_file(std::string_view text, const std::map<std::string, Scalar>& overrides = {});
AlgebraFile load_algebra_file(const std::string& path, const std::map<std::string, Scalar>& overrides = {});
std::string serialize_algebra_file(const AlgebraFile& f);

AlgebraFile file_of(const DPAlgebra& A);
AlgebraFile file_of(const DPVAlgebra& V);

DPAlgebra to_dpa(const AlgebraFile& f);
// the file's own lambda-bracket, or the jet algebra of its double bracket
DPVAlgebra to_dpva(const AlgebraFile& f, int jet_cap = 8);
// the declared moment with its zeta, or the quiver moment map of a double quiver
std::optional<MomentDatum> moment_of(const AlgebraFile& f, const QuiverPtr& q);

// expressions against a declared quiver
NCPoly parse_nc_expr(const QuiverPtr& q, std::string_view text, const std::map<std::string, Scalar>& params = {});
Tensor2 parse_tensor_expr(const QuiverPtr& q, std::string_view text, const std::map<std::string, Scalar>& params = {});
LTensor2 parse_ltensor_expr(const QuiverPtr& q, std::string_view text,
                            const std::map<std::string, Scalar>& params = {});
std::string ltensor_str(const LTensor2& P);

// bundled files reach a serialization fixed point; malformed fixtures fail at their "# expect L:C" position
CheckReport parser_roundtrip_check(const std::string& catalog_dir);

}  // namespace dpva
