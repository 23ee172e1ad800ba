#pragma once

#include <string>
#include <vector>

namespace classtower {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

/* One verified statement with the values that back the verdict. */
struct CheckResult {
    std::string id;         // stable across versions
    std::string statement;  // what was checked, in plain words
    CheckStatus status = CheckStatus::skip;
    std::string witness;    // computed values
    std::string reason;     // skip reason code, empty otherwise
    std::string assumption; // id of a consumed assumption, empty otherwise
};

/* Cited fact consumed without being re-proved. */
struct Assumption {
    std::string id;
    std::string statement;
};

struct Report {
    std::vector<CheckResult> checks;
    std::vector<Assumption> assumptions;

    int passed() const;
    int failed() const;
    int skipped() const;
    void add(CheckResult r) { checks.push_back(std::move(r)); }
};

} // namespace classtower
