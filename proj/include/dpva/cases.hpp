#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dpva/errors.hpp"
#include "dpva/parallel.hpp"
#include "dpva/report.hpp"

namespace dpva {

// runs f on every case into per-case reports, turning CapExceeded into an inconclusive witness
template <class F>
CheckReport run_cases(const std::string& id, std::uint64_t seed, std::size_t count, Exec ex,
                      const std::function<std::string(std::size_t)>& label, F&& f) {
    Stopwatch sw;
    CheckReport rep(id, seed);
    std::vector<CheckReport> parts(count);
    for_each_index(count, ex, [&](std::size_t i) {
        parts[i].cases = 1;
        try {
            f(i, parts[i]);
        } catch (const CapExceeded& e) {
            parts[i].inconclusive({label(i), std::string("jet cap reached: ") + e.what(), ""});
        }
    });
    for (const auto& p : parts) rep.absorb(p);
    rep.millis = sw.millis();
    return rep;
}

}  // namespace dpva
