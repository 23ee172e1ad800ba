#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "classtower/errors.hpp"
#include "classtower/verifier.hpp"

using namespace classtower;

namespace {

const PrimeAnalysis* find_case(const SweepResult& r, u64 p) {
    for (const auto& a : r.cases)
        if (a.data.p == p) return &a;
    return nullptr;
}

const CheckResult* find_check(const Report& rep, const std::string& id) {
    for (const auto& c : rep.checks)
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("analyze_prime p=41: the fully verified both-minus anchor") {
    const PrimeAnalysis a = analyze_prime(OddPrime::one_mod_8(41));
    const PrimeCase& pc = a.data;
    CHECK(pc.sym_2p4 == Sign::minus);
    CHECK(pc.sym_p24 == Sign::minus);
    CHECK(pc.label == CaseLabel::both_minus);
    CHECK(pc.tower_continues);
    CHECK(pc.e == 5);
    CHECK(pc.f == 1);
    REQUIRE(pc.x32);
    CHECK(pc.x32->x == 3);
    CHECK(pc.x32->y == 1);
    CHECK(pc.c == 13);
    CHECK(pc.d == 2);
    CHECK(pc.h_minus_p == 8);
    CHECK(pc.n == 3);
    CHECK(pc.h_2p == 4);
    CHECK(pc.h2_2p == 4);
    CHECK(pc.h_m2p == 4);
    CHECK(pc.h2_m2p == 4);
    CHECK(pc.norm_eps2p == -1);
    CHECK(pc.q_k == 1);
    CHECK(pc.h_k == 8);
    REQUIRE(pc.group);
    CHECK(pc.group->n == 3);
    CHECK(pc.group->group_order == 32);
    CHECK(pc.group->kernel_orders == std::array<i64, 6>{2, 2, 2, 8, 8, 8});
    CHECK(pc.group->type3_nonmodular);
    CHECK(pc.group->kernel_at_h32_is_b2);
    CHECK(pc.group->control_kernel_h32 == 4);
    CHECK(a.report.passed() == 17);
    CHECK(a.report.failed() == 0);
    CHECK(a.report.skipped() == 0);
    CHECK(!a.report.assumptions.empty());
}

TEST_CASE("analyze_prime p=17: mixed case stops the tower and skips the group") {
    const PrimeAnalysis a = analyze_prime(OddPrime::one_mod_8(17));
    const PrimeCase& pc = a.data;
    CHECK(pc.label == CaseLabel::mixed);
    CHECK(!pc.tower_continues);
    CHECK(!pc.x32);
    CHECK(pc.h_minus_p == 4);
    CHECK(pc.n == 2);
    CHECK(pc.h_k == 8);
    CHECK(pc.norm_eps2p == 1);
    CHECK(pc.q_k == 2);
    CHECK(!pc.group);
    CHECK(a.report.failed() == 0);
    CHECK(a.report.skipped() == 7); // kstar chain plus the six group checks
    const CheckResult* chain = find_check(a.report, "kstar_class_number_chain");
    REQUIRE(chain);
    CHECK(chain->status == CheckStatus::skip);
    CHECK(chain->reason == "hypothesis-not-met");
}

TEST_CASE("analyze_prime p=113: both-plus rank 3, group hypothesis not met") {
    const PrimeAnalysis a = analyze_prime(OddPrime::one_mod_8(113));
    const PrimeCase& pc = a.data;
    CHECK(pc.label == CaseLabel::both_plus);
    CHECK(pc.tower_continues);
    REQUIRE(pc.x32);
    CHECK(pc.x32->x == 9);
    CHECK(pc.x32->y == 1);
    CHECK(pc.c == 25);
    CHECK(pc.d == 4);
    CHECK(!pc.group);
    CHECK(a.report.failed() == 0);
    const CheckResult* rank = find_check(a.report, "kstar_rank");
    REQUIRE(rank);
    CHECK(rank->status == CheckStatus::pass);
    CHECK(rank->witness.find("rank=3") != std::string::npos);
    CHECK(pc.h_k);
    CHECK(*pc.h_k != 8); // both-plus sits outside the h(k) = 8 table
}

TEST_CASE("analyze_prime rejects primes outside the regime") {
    CHECK_THROWS_AS(analyze_prime(OddPrime(13)), NotPrime);
}

TEST_CASE("verify_group refuses wrong hypotheses") {
    PrimeCase pc;
    pc.p = 17;
    pc.label = CaseLabel::mixed;
    pc.h_k = 8;
    pc.n = 2;
    CHECK_THROWS_AS(verify_group(pc), HypothesisNotMet);
    pc.label = CaseLabel::both_minus;
    CHECK_THROWS_AS(verify_group(pc), HypothesisNotMet); // n = 2 < 3
}

TEST_CASE("sweep argument validation and empty ranges") {
    SweepOptions opt;
    opt.min = 16;
    opt.max = 100;
    CHECK_THROWS_AS(sweep(opt), UsageError);
    opt.min = 50;
    opt.max = 40;
    CHECK_THROWS_AS(sweep(opt), UsageError);
    opt.min = 18;
    opt.max = 20;
    const SweepResult r = sweep(opt);
    CHECK(r.cases.empty());
    CHECK(exit_code(r) == 0);
    CHECK(to_csv(r).find("\n") == to_csv(r).size() - 1); // header only
}

TEST_CASE("sweep is deterministic, ordered, and filterable") {
    SweepOptions opt;
    opt.min = 17;
    opt.max = 300;
    opt.jobs = 3;
    const SweepResult r = sweep(opt);
    REQUIRE(!r.cases.empty());
    for (size_t i = 1; i < r.cases.size(); ++i) CHECK(r.cases[i - 1].data.p < r.cases[i].data.p);
    CHECK(r.failed == 0);
    CHECK(find_case(r, 41));
    CHECK(find_case(r, 113));

    SweepOptions seq = opt;
    seq.jobs = 1;
    CHECK(to_csv(sweep(seq)) == to_csv(r));

    SweepOptions flt = opt;
    flt.case_filter = CaseLabel::both_minus;
    const SweepResult rb = sweep(flt);
    for (const auto& c : rb.cases) CHECK(c.data.label == CaseLabel::both_minus);
    CHECK(find_case(rb, 41));
    CHECK(!find_case(rb, 113));
}

TEST_CASE("check filters limit the executed families") {
    AnalyzeOptions only_symbols{true, false, false, false};
    const PrimeAnalysis a = analyze_prime(OddPrime::one_mod_8(41), only_symbols);
    CHECK(a.report.checks.size() == 5);
    CHECK(!a.data.h_minus_p); // class data not computed
    CHECK(!a.data.group);

    AnalyzeOptions only_group{false, false, true, false};
    const PrimeAnalysis g = analyze_prime(OddPrime::one_mod_8(41), only_group);
    CHECK(g.report.checks.size() == 6);
    CHECK(g.data.h_minus_p == 8); // group checks pull in the class data they need
    REQUIRE(g.data.group);
    CHECK(g.report.failed() == 0);
}

TEST_CASE("csv rendering is byte-stable and matches the frozen golden row") {
    SweepOptions opt;
    opt.min = 41;
    opt.max = 41;
    const std::string csv = to_csv(sweep(opt));
    const std::string expected =
        "p,sym_2p4,sym_p24,e,f,x,y,c,d,h_minus_p,n,h2_2p,h2_m2p,norm_eps2p,Q_k,h_k,"
        "case,tower,group_order,ker_H12,ker_H22,ker_H32,ker_H14,ker_H24,ker_H34,"
        "checks_passed,checks_failed,skips\n"
        "41,-1,-1,5,1,3,1,13,2,8,3,4,4,-1,1,8,both-1,continues,32,2,2,2,8,8,8,17,0,0\n";
    CHECK(csv == expected);
    CHECK(to_csv(sweep(opt)) == csv);
}

TEST_CASE("json rendering carries metadata, details, and assumptions") {
    SweepOptions opt;
    opt.min = 17;
    opt.max = 41;
    const SweepResult r = sweep(opt);
    const nlohmann::json j = nlohmann::json::parse(to_json(r));
    CHECK(j["version"] == kVersion);
    CHECK(j["range"]["min"] == 17);
    CHECK(j["range"]["max"] == 41);
    CHECK(j.contains("timestamp"));
    CHECK(j["assumptions"].size() == 3);
    REQUIRE(j["cases"].size() == 2);
    CHECK(j["cases"][0]["p"] == 17);
    CHECK(j["cases"][1]["p"] == 41);
    CHECK(j["cases"][1]["class_numbers"]["h_k_via_formula"] == 8);
    CHECK(j["cases"][1]["group"]["order"] == 32);
    CHECK(j["cases"][0]["group"] == "-");
    CHECK(j["cases"][1]["checks"].size() == 17);
}

TEST_CASE("exit_code reflects failures") {
    SweepResult r;
    CHECK(exit_code(r) == 0);
    r.failed = 1;
    CHECK(exit_code(r) == 1);
}
