#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "classtower/common.hpp"
#include "classtower/numcore.hpp"
#include "classtower/report.hpp"
#include "classtower/represent.hpp"

namespace classtower {

/* Sign pattern of the pair ((2/p)_4, (p/2)_4). */
enum class CaseLabel { both_plus, both_minus, mixed };

const char* to_string(CaseLabel c);

/* Outcome of the group-theoretic checks for one prime. */
struct GroupVerdict {
    int n = 0;               // v2 of h(Q(sqrt(-p)))
    i64 group_order = 0;     // 2^(n+2)
    // Kernel orders at the named subgroups, in the order
    // H12, H22, H32, H14, H24, H34.
    std::array<i64, 6> kernel_orders{};
    bool type3_nonmodular = false;
    bool kernel_at_h32_is_b2 = false; // kernel cosets are {G', b^2 G'}
    i64 control_kernel_h32 = 0;       // same kernel for the q = -1 control group
};

/* Everything the verifier derives for a single prime p = 1 mod 8.
 * Class-number fields are absent when the class-group checks were not
 * requested; every CSV/JSON cell then renders as "-". */
struct PrimeCase {
    u64 p = 0;
    Sign sym_2p4 = Sign::plus; // (2/p)_4
    Sign sym_p24 = Sign::plus; // (p/2)_4
    CaseLabel label = CaseLabel::mixed;

    u64 e = 0, f = 0;                 // p = e^2 + 16 f^2
    std::optional<DefiniteRep> x32;   // p = x^2 + 32 y^2, when solvable
    u64 c = 0, d = 0;                 // p = c^2 - 32 d^2, d minimal

    std::optional<i64> h_minus_p;     // h of Q(sqrt(-p))
    std::optional<int> n;             // v2(h_minus_p)
    std::optional<i64> h_2p, h2_2p;   // h of Q(sqrt(2p)) and its 2-part value
    std::optional<i64> h_m2p, h2_m2p; // same for Q(sqrt(-2p))
    std::optional<i64> h_k;           // h(k) from the quartic formula

    int norm_eps2p = 0;               // norm of the fundamental unit of Q(sqrt(2p))
    i64 q_k = 0;                      // unit index [E_k : W_k E_F]
    bool tower_continues = false;     // second step differs from the first

    std::optional<GroupVerdict> group;
};

struct PrimeAnalysis {
    PrimeCase data;
    Report report;
};

/* Which check families to run. */
struct AnalyzeOptions {
    bool symbols = true;
    bool classgroups = true;
    bool group = true;
    bool units = true;
};

/* Runs every enabled check for one prime.  Throws NotPrime unless p is an
 * odd prime = 1 mod 8.  Individual check failures are recorded, never
 * thrown. */
PrimeAnalysis analyze_prime(OddPrime p, const AnalyzeOptions& opt = {});

/* Group-theoretic portion alone.  Requires both quartic symbols -1 and
 * h(k) = 8; throws HypothesisNotMet otherwise. */
struct GroupCheckOutcome {
    GroupVerdict verdict;
    std::vector<CheckResult> checks;
};
GroupCheckOutcome verify_group(const PrimeCase& pc);

struct SweepOptions {
    u64 min = 0, max = 0;
    std::optional<CaseLabel> case_filter;
    AnalyzeOptions checks;
    int jobs = 1;
};

struct SweepResult {
    u64 min = 0, max = 0;
    std::vector<PrimeAnalysis> cases; // ascending by p
    i64 passed = 0, failed = 0, skipped = 0;
};

/* Analyzes every prime = 1 mod 8 in [min, max], ascending.  Throws
 * UsageError unless 17 <= min <= max <= 10^8.  An empty range is a
 * success with zero cases. */
SweepResult sweep(const SweepOptions& opt);

/* Byte-deterministic table, one row per prime, fixed column set. */
std::string to_csv(const SweepResult& r);

/* Full detail plus run metadata (version, range, timestamp). */
std::string to_json(const SweepResult& r);

/* 0 when every executed check passed, 1 otherwise. */
int exit_code(const SweepResult& r);

} // namespace classtower
