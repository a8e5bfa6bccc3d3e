#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace dpva {

enum class Verdict { Pass, Fail, Inconclusive };

const char* verdict_str(Verdict v);

struct Witness {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string check;
    Verdict verdict = Verdict::Pass;
    std::vector<Witness> witnesses;
    std::uint64_t seed = 0;
    double millis = 0;
    std::vector<std::string> notes;
    std::size_t cases = 0;

    explicit CheckReport(std::string id = {}, std::uint64_t s = 0) : check(std::move(id)), seed(s) {}

    bool passed() const { return verdict == Verdict::Pass; }
    void fail(Witness w);
    void inconclusive(Witness w);
    void note(std::string n) { notes.push_back(std::move(n)); }
    // fold another report's verdict, witnesses, notes and case count into this one
    void absorb(const CheckReport& other);
};

// worst of the two: Fail > Inconclusive > Pass
Verdict combine(Verdict a, Verdict b);

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace dpva
