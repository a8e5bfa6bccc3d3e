#include "dpva/report.hpp"

namespace dpva {

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
}

void CheckReport::fail(Witness w) {
    verdict = Verdict::Fail;
    witnesses.push_back(std::move(w));
}

void CheckReport::inconclusive(Witness w) {
    verdict = combine(verdict, Verdict::Inconclusive);
    witnesses.push_back(std::move(w));
}

void CheckReport::absorb(const CheckReport& o) {
    verdict = combine(verdict, o.verdict);
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    cases += o.cases;
}

}  // namespace dpva
