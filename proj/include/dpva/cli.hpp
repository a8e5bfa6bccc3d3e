#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dpva/report.hpp"

namespace dpva {

enum class ReportFormat { Human, Json };

// json: {check, verdict, witnesses:[{input, lhs, rhs}], seed, millis, notes} on one line
std::string serialize_report(const CheckReport& r, ReportFormat f);

// 0 all pass, 1 any fail, 2 inconclusive only
int exit_code(const std::vector<CheckReport>& reports);

// args exclude the program name; 3 on usage and parse errors
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpva
