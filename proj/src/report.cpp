#include "classtower/report.hpp"

#include <algorithm>

namespace classtower {

const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skip";
    }
}

static int count(const std::vector<CheckResult>& cs, CheckStatus st) {
    return static_cast<int>(std::count_if(cs.begin(), cs.end(),
        [st](const CheckResult& c) { return c.status == st; }));
}

int Report::passed() const { return count(checks, CheckStatus::pass); }
int Report::failed() const { return count(checks, CheckStatus::fail); }
int Report::skipped() const { return count(checks, CheckStatus::skip); }

} // namespace classtower
