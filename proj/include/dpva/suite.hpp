#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dpva/parallel.hpp"
#include "dpva/report.hpp"

namespace dpva {

struct SuiteItem {
    std::string id;
    std::string title;
    double budget_ms = 0;  // 0: unbounded
    std::function<CheckReport(std::uint64_t seed, Exec ex)> run;
};

// "paper": acceptance criteria 1-11; "catalog": axiom checks on every bundled file
std::vector<std::string> suite_names();
// throws Error on an unknown suite name
std::vector<SuiteItem> suite_items(const std::string& name, const std::string& catalog_dir);
// runs one item; a report over its budget fails with a timing witness
CheckReport run_suite_item(const SuiteItem& item, std::uint64_t seed, Exec ex);

}  // namespace dpva
