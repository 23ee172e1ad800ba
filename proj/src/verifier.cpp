#include "classtower/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "classtower/errors.hpp"
#include "classtower/metacyclic.hpp"
#include "classtower/multiquad.hpp"
#include "classtower/quadfield.hpp"
#include "classtower/symbols.hpp"

namespace classtower {

namespace {

const Assumption kAssumptionTable[] = {
    {"A1", "the 2-class group of k has 2-rank 2 throughout the range (cited input)"},
    {"A2", "the unit index q(k*/Q) equals 4 (cited input)"},
    {"A3", "the chosen unit system of the degree-4 subfield stays fundamental upstairs (cited input)"},
};

const Assumption* find_assumption(const std::string& id) {
    for (const auto& a : kAssumptionTable)
        if (a.id == id) return &a;
    return nullptr;
}

std::string sign_str(Sign s) { return s == Sign::plus ? "1" : "-1"; }

/* Runs one check body; an exception becomes a recorded failure, never a
 * throw out of the verifier. */
struct Runner {
    std::vector<CheckResult>& sink;

    void run(const char* id, const char* statement, const char* assumption,
             const std::function<bool(std::string&)>& body) {
        CheckResult r;
        r.id = id;
        r.statement = statement;
        if (assumption) r.assumption = assumption;
        try {
            std::string w;
            r.status = body(w) ? CheckStatus::pass : CheckStatus::fail;
            r.witness = std::move(w);
        } catch (const std::exception& e) {
            r.status = CheckStatus::fail;
            r.witness = std::string("exception: ") + e.what();
        }
        sink.push_back(std::move(r));
    }

    void skip(const char* id, const char* statement, const char* reason,
              std::string witness, const char* assumption = nullptr) {
        CheckResult r;
        r.id = id;
        r.statement = statement;
        r.status = CheckStatus::skip;
        r.reason = reason;
        r.witness = std::move(witness);
        if (assumption) r.assumption = assumption;
        sink.push_back(std::move(r));
    }
};

constexpr const char* kGroupCheckIds[6] = {
    "group_order",          "group_type",          "transfer_kernel_sizes",
    "kernel_coset_b2",      "type1_discrimination", "capitulation_kernel_match",
};
constexpr const char* kGroupCheckStatements[6] = {
    "the constructed 2-group has order 2^(n+2)",
    "the presentation classifies as the nonsplit type and is not modular",
    "transfer kernels have orders (2,2,2) at index 2 and (8,8,8) at index 4",
    "the kernel at the third index-2 subgroup is generated by b^2 modulo the derived subgroup",
    "the order-4 kernel of the split control presentation separates it from the computed type",
    "the capitulation count equals the transfer-kernel order at the matching index-2 subgroup",
};

void collect_assumptions(Report& rep) {
    for (const auto& c : rep.checks) {
        if (c.assumption.empty()) continue;
        bool seen = false;
        for (const auto& a : rep.assumptions) seen = seen || a.id == c.assumption;
        if (!seen)
            if (const Assumption* a = find_assumption(c.assumption)) rep.assumptions.push_back(*a);
    }
}

} // namespace

const char* to_string(CaseLabel c) {
    switch (c) {
    case CaseLabel::both_plus: return "both+1";
    case CaseLabel::both_minus: return "both-1";
    default: return "mixed";
    }
}

GroupCheckOutcome verify_group(const PrimeCase& pc) {
    if (pc.label != CaseLabel::both_minus || !pc.h_k || *pc.h_k != 8)
        throw HypothesisNotMet("verify_group: needs both quartic symbols -1 and h(k) = 8");
    if (!pc.n || *pc.n < 3)
        throw HypothesisNotMet("verify_group: needs v2(h(-p)) >= 3");

    const int n = *pc.n;
    GroupCheckOutcome out;
    GroupVerdict& v = out.verdict;
    v.n = n;
    Runner rn{out.checks};

    const Presentation pres(n, 2, n - 1, 1);

    rn.run(kGroupCheckIds[0], kGroupCheckStatements[0], "A1", [&](std::string& w) {
        const u64 want = u64(1) << (n + 2);
        const u64 counted = all_elements(pres).size();
        v.group_order = static_cast<i64>(want);
        std::ostringstream os;
        os << "n=" << n << " order=" << pres.group_order() << " enumerated=" << counted;
        w = os.str();
        return pres.group_order() == static_cast<i64>(want) && counted == want;
    });

    rn.run(kGroupCheckIds[1], kGroupCheckStatements[1], nullptr, [&](std::string& w) {
        const Classification cls = classify(pres);
        v.type3_nonmodular = cls.type == GroupType::type3 && !cls.modular;
        std::ostringstream os;
        os << "type=" << static_cast<int>(cls.type) + 1 << " modular=" << (cls.modular ? "yes" : "no");
        w = os.str();
        return v.type3_nonmodular;
    });

    rn.run(kGroupCheckIds[2], kGroupCheckStatements[2], nullptr, [&](std::string& w) {
        static constexpr SubgroupTag tags[6] = {SubgroupTag::H12, SubgroupTag::H22,
                                                SubgroupTag::H32, SubgroupTag::H14,
                                                SubgroupTag::H24, SubgroupTag::H34};
        static constexpr i64 want[6] = {2, 2, 2, 8, 8, 8};
        bool ok = true;
        std::ostringstream os;
        os << "orders=(";
        for (int i = 0; i < 6; ++i) {
            const TransferKernel k = transfer_kernel(pres, named_subgroup(pres, tags[i]));
            v.kernel_orders[i] = k.order;
            ok = ok && k.order == want[i];
            os << (i ? "," : "") << k.order;
        }
        os << ")";
        w = os.str();
        return ok;
    });

    rn.run(kGroupCheckIds[3], kGroupCheckStatements[3], nullptr, [&](std::string& w) {
        const TransferKernel k = transfer_kernel(pres, named_subgroup(pres, SubgroupTag::H32));
        const bool ok = k.order == 2 && k.coset_reps.size() == 2 &&
                        k.coset_reps[0] == identity(pres) &&
                        k.coset_reps[1] == make_element(pres, 0, 2);
        v.kernel_at_h32_is_b2 = ok;
        std::ostringstream os;
        os << "reps={";
        for (size_t i = 0; i < k.coset_reps.size(); ++i)
            os << (i ? "," : "") << "a^" << k.coset_reps[i].i << " b^" << k.coset_reps[i].j;
        os << "}";
        w = os.str();
        return ok;
    });

    rn.run(kGroupCheckIds[4], kGroupCheckStatements[4], nullptr, [&](std::string& w) {
        const Presentation ctrl(n, 2, n, 1); // q = -1 mod 2^n
        const Classification cls = classify(ctrl);
        const TransferKernel k = transfer_kernel(ctrl, named_subgroup(ctrl, SubgroupTag::H32));
        v.control_kernel_h32 = k.order;
        std::ostringstream os;
        os << "control type=" << static_cast<int>(cls.type) + 1 << " kernel=" << k.order
           << " vs " << v.kernel_orders[2];
        w = os.str();
        return cls.type == GroupType::type1 && k.order == 4 && k.order != v.kernel_orders[2];
    });

    rn.run(kGroupCheckIds[5], kGroupCheckStatements[5], "A2", [&](std::string& w) {
        const i64 cap = capitulation_count_kstar(OddPrime::one_mod_8(pc.p));
        std::ostringstream os;
        os << "capitulation=" << cap << " kernel(H32)=" << v.kernel_orders[2];
        w = os.str();
        return cap == 2 && v.kernel_orders[2] == 2;
    });

    return out;
}

PrimeAnalysis analyze_prime(OddPrime p, const AnalyzeOptions& opt) {
    if (p.value % 8 != 1) throw NotPrime("analyze_prime: p must be 1 (mod 8)");

    PrimeAnalysis out;
    PrimeCase& pc = out.data;
    Report& rep = out.report;
    Runner rn{rep.checks};

    pc.p = p.value;
    pc.sym_2p4 = quartic_2_over_p(p);
    pc.sym_p24 = quartic_p_over_2(p);
    pc.label = pc.sym_2p4 == pc.sym_p24
                   ? (pc.sym_2p4 == Sign::plus ? CaseLabel::both_plus : CaseLabel::both_minus)
                   : CaseLabel::mixed;
    pc.tower_continues = pc.sym_2p4 == pc.sym_p24;

    const auto ef = cornacchia(p, 16);
    if (!ef) throw NoRepresentation("p = e^2 + 16 f^2 must be solvable for p = 1 (mod 8)");
    pc.e = ef->x;
    pc.f = ef->y;
    pc.x32 = cornacchia(p, 32);
    const PellRep cd = pell_rep(p);
    pc.c = cd.c;
    pc.d = cd.d;

    pc.norm_eps2p = fundamental_unit_norm(2 * pc.p);
    pc.q_k = pc.norm_eps2p == 1 ? 2 : 1;

    if (opt.classgroups || opt.group) {
        const i64 hmp = reduced_form_count(-4 * static_cast<i64>(pc.p));
        pc.h_minus_p = hmp;
        pc.n = two_part(hmp);
        const i64 h2p = class_number_real(2 * pc.p);
        pc.h_2p = h2p;
        pc.h2_2p = i64(1) << two_part(h2p);
        const i64 hm2p = reduced_form_count(-8 * static_cast<i64>(pc.p));
        pc.h_m2p = hm2p;
        pc.h2_m2p = i64(1) << two_part(hm2p);
        pc.h_k = pc.q_k * *pc.h2_2p * *pc.h2_m2p / 2;
    }

    if (opt.symbols) {
        rn.run("kaplan_identity",
               "product of the two quartic symbols equals (-1)^(b/2) for p = a^2 + 2 b^2",
               nullptr, [&](std::string& w) {
                   const auto ab = cornacchia(p, 2);
                   if (!ab) throw NoRepresentation("p = a^2 + 2 b^2 must be solvable");
                   const Sign lhs = pc.sym_2p4 * pc.sym_p24;
                   const Sign rhs = (ab->y / 2) % 2 == 0 ? Sign::plus : Sign::minus;
                   std::ostringstream os;
                   os << "a=" << ab->x << " b=" << ab->y << " lhs=" << sign_str(lhs)
                      << " rhs=" << sign_str(rhs);
                   w = os.str();
                   return lhs == rhs;
               });

        rn.run("rep32_symbol_equiv",
               "p = x^2 + 32 y^2 is solvable exactly when the two quartic symbols agree",
               nullptr, [&](std::string& w) {
                   std::ostringstream os;
                   if (pc.x32)
                       os << "x=" << pc.x32->x << " y=" << pc.x32->y;
                   else
                       os << "no representation";
                   os << " symbols " << (pc.sym_2p4 == pc.sym_p24 ? "agree" : "differ");
                   w = os.str();
                   return pc.x32.has_value() == (pc.sym_2p4 == pc.sym_p24);
               });

        rn.run("sqrt2_symbol_identities",
               "quadratic symbols of the fundamental units over Z[sqrt(2)] reproduce the quartic symbols",
               nullptr, [&](std::string& w) {
                   const UnitSymbolRecord r = lemma6_check(p);
                   std::ostringstream os;
                   os << "unit=" << r.unit_identity << " two_plus_sqrt2=" << r.two_plus_sqrt2
                      << " product=" << r.product_formula << " decomposition=" << r.decomposition;
                   w = os.str();
                   return r.all();
               });

        rn.run("zeta8_unit_table",
               "cyclotomic unit symbols agree with the quartic-symbol table for every primitive eighth root",
               nullptr, [&](std::string& w) {
                   const Cyclo8Result r = cyclo8_unit_symbols(p);
                   std::ostringstream os;
                   os << "expected=(" << sign_str(r.expected[0]) << "," << sign_str(r.expected[1])
                      << "," << sign_str(r.expected[2]) << ") uniform=" << r.uniform;
                   w = os.str();
                   return r.uniform && r.matches;
               });

        rn.run("kstar_rank",
               "the 2-class group upstairs has rank 3 exactly in the both-plus case, rank 2 otherwise",
               nullptr, [&](std::string& w) {
                   const NormGroupUnits u = norm_group_units(p);
                   std::ostringstream os;
                   os << "norm_subgroup=" << u.norm_subgroup << " |Am|=" << u.am_order
                      << " rank=" << u.rank;
                   w = os.str();
                   const bool rank_ok = (u.rank == 3) == (pc.label == CaseLabel::both_plus);
                   return rank_ok && u.am_order == (i64(1) << u.rank);
               });
    }

    if (opt.classgroups) {
        rn.run("barruccand_cohn",
               "v2(h(-p)) = 2 exactly when x^2 + 32 y^2 = p has no solution, and >= 3 otherwise",
               nullptr, [&](std::string& w) {
                   std::ostringstream os;
                   os << "h(-p)=" << *pc.h_minus_p << " n=" << *pc.n << " rep32="
                      << (pc.x32 ? "yes" : "no");
                   w = os.str();
                   return pc.x32 ? *pc.n >= 3 : *pc.n == 2;
               });

        rn.run("wada_class_number",
               "h(k) = Q * h2(2p) * h2(-2p) / 2 is a 2-power and matches the quartic class-number formula",
               nullptr, [&](std::string& w) {
                   const i64 prod = pc.q_k * *pc.h2_2p * *pc.h2_m2p;
                   const i64 hk = *pc.h_k;
                   const bool pow2 = hk >= 1 && (hk & (hk - 1)) == 0;
                   const mpq_class rhs = kuroda_rhs(2, 1, 0, pc.q_k, 1, *pc.h2_2p, *pc.h2_m2p, 1);
                   std::ostringstream os;
                   os << "Q=" << pc.q_k << " h2(2p)=" << *pc.h2_2p << " h2(-2p)=" << *pc.h2_m2p
                      << " h(k)=" << hk << " rhs=" << rhs.get_str();
                   w = os.str();
                   return prod % 2 == 0 && pow2 && rhs == mpq_class(static_cast<long>(hk));
               });

        rn.run("scholz_case_table",
               "h(k) = 8 exactly when both symbols are -1 or (2/p)_4 = -1 with (p/2)_4 = +1",
               nullptr, [&](std::string& w) {
                   const bool predicted = pc.label == CaseLabel::both_minus ||
                                          (pc.sym_2p4 == Sign::minus && pc.sym_p24 == Sign::plus);
                   std::ostringstream os;
                   os << "case=" << to_string(pc.label) << " h(k)=" << *pc.h_k
                      << " predicted8=" << (predicted ? "yes" : "no");
                   w = os.str();
                   return (*pc.h_k == 8) == predicted;
               });

        if (pc.label != CaseLabel::both_minus) {
            rn.skip("kstar_class_number_chain",
                    "h(k*) = 2 * h2(-p) and 16 divides h(k*) under the both-minus hypothesis",
                    "hypothesis-not-met", std::string("case=") + to_string(pc.label), "A2");
        } else {
            rn.run("kstar_class_number_chain",
                   "h(k*) = 2 * h2(-p) and 16 divides h(k*) under the both-minus hypothesis",
                   "A2", [&](std::string& w) {
                       const i64 hkstar = i64(2) << *pc.n; // 2 * 2^n
                       std::ostringstream os;
                       os << "h(k*)=" << hkstar << " Q*h(k)=" << pc.q_k * *pc.h_k;
                       w = os.str();
                       return pc.q_k * *pc.h_k == 8 && *pc.n >= 3 && hkstar % 16 == 0;
                   });
        }
    }

    if (opt.units) {
        rn.run("capitulation_count_pred",
               "capitulation count is 2 for unit norm -1 and 4 for unit norm +1",
               "A2", [&](std::string& w) {
                   const i64 cap = capitulation_count_kstar(p);
                   const i64 q = q_index_k(p);
                   std::ostringstream os;
                   os << "norm=" << pc.norm_eps2p << " Q=" << q << " count=" << cap;
                   w = os.str();
                   return q == pc.q_k && cap == (pc.norm_eps2p == -1 ? 2 : 4) &&
                          (cap == 2) == (q == 1);
               });

        {
            CheckResult r;
            r.id = "sfu_square_confirmation";
            r.statement = "the predicted member of the unit system is a square and the alternative is not";
            r.assumption = "A3";
            try {
                const SfuCase sc = sfu_case(p);
                std::ostringstream os;
                os << "norm=" << sc.norm_eps2p << " sfu={" << sc.sfu[0] << "," << sc.sfu[1]
                   << "," << sc.sfu[2] << "}";
                if (sc.norm_only) {
                    r.status = CheckStatus::skip;
                    r.reason = "precision-cap";
                    os << " unit height exceeds the working cap";
                } else {
                    r.status = sc.square_confirmed && sc.exclusivity_ok ? CheckStatus::pass
                                                                        : CheckStatus::fail;
                    os << " confirmed=" << sc.square_confirmed
                       << " exclusive=" << sc.exclusivity_ok;
                }
                r.witness = os.str();
            } catch (const std::exception& e) {
                r.status = CheckStatus::fail;
                r.witness = std::string("exception: ") + e.what();
            }
            rep.checks.push_back(std::move(r));
        }
    }

    if (opt.group) {
        const bool eligible =
            pc.label == CaseLabel::both_minus && pc.h_k && *pc.h_k == 8 && pc.n && *pc.n >= 3;
        if (!eligible) {
            std::ostringstream os;
            os << "case=" << to_string(pc.label);
            if (pc.h_k) os << " h(k)=" << *pc.h_k;
            for (int i = 0; i < 6; ++i)
                rn.skip(kGroupCheckIds[i], kGroupCheckStatements[i], "hypothesis-not-met",
                        os.str(), i == 0 ? "A1" : nullptr);
        } else {
            try {
                GroupCheckOutcome g = verify_group(pc);
                pc.group = g.verdict;
                for (auto& c : g.checks) rep.checks.push_back(std::move(c));
            } catch (const std::exception& e) {
                for (int i = 0; i < 6; ++i)
                    rn.skip(kGroupCheckIds[i], kGroupCheckStatements[i], "hypothesis-not-met",
                            std::string("exception: ") + e.what(), i == 0 ? "A1" : nullptr);
            }
        }
    }

    collect_assumptions(rep);
    return out;
}

SweepResult sweep(const SweepOptions& opt) {
    constexpr u64 kMaxSupported = 100'000'000ULL;
    if (opt.min < 17 || opt.min > opt.max || opt.max > kMaxSupported)
        throw UsageError("sweep: range must satisfy 17 <= min <= max <= 1e8");

    std::vector<u64> primes;
    u64 start = opt.min + ((8 + 1 - static_cast<i64>(opt.min % 8)) % 8);
    for (u64 q = start; q <= opt.max; q += 8)
        if (is_prime(q)) primes.push_back(q);

    SweepResult res;
    res.min = opt.min;
    res.max = opt.max;

    std::vector<std::optional<PrimeAnalysis>> slots(primes.size());
    if (!primes.empty()) {
        const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(primes.size())));
        std::atomic<size_t> next{0};
        std::exception_ptr first_error;
        std::mutex err_mu;
        auto work = [&]() {
            for (size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1)) {
                try {
                    slots[i] = analyze_prime(OddPrime::one_mod_8(primes[i]), opt.checks);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        if (jobs == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);
    }

    for (auto& s : slots) {
        if (!s) continue; // only possible after a worker error, rethrown above
        if (opt.case_filter && s->data.label != *opt.case_filter) continue;
        res.passed += s->report.passed();
        res.failed += s->report.failed();
        res.skipped += s->report.skipped();
        res.cases.push_back(std::move(*s));
    }
    return res;
}

namespace {

std::string cell(const std::optional<i64>& v) { return v ? std::to_string(*v) : "-"; }
std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string csv_row(const PrimeAnalysis& a) {
    const PrimeCase& pc = a.data;
    std::ostringstream os;
    os << pc.p << ',' << sign_str(pc.sym_2p4) << ',' << sign_str(pc.sym_p24) << ',' << pc.e << ','
       << pc.f << ',';
    if (pc.x32)
        os << pc.x32->x << ',' << pc.x32->y;
    else
        os << "-,-";
    os << ',' << pc.c << ',' << pc.d << ',' << cell(pc.h_minus_p) << ',' << cell(pc.n) << ','
       << cell(pc.h2_2p) << ',' << cell(pc.h2_m2p) << ',' << pc.norm_eps2p << ',' << pc.q_k << ','
       << cell(pc.h_k) << ',' << to_string(pc.label) << ','
       << (pc.tower_continues ? "continues" : "stops") << ',';
    if (pc.group) {
        os << pc.group->group_order;
        for (const i64 k : pc.group->kernel_orders) os << ',' << k;
    } else {
        os << "-,-,-,-,-,-,-";
    }
    os << ',' << a.report.passed() << ',' << a.report.failed() << ',' << a.report.skipped();
    return os.str();
}

std::string iso_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string to_csv(const SweepResult& r) {
    std::string out =
        "p,sym_2p4,sym_p24,e,f,x,y,c,d,h_minus_p,n,h2_2p,h2_m2p,norm_eps2p,Q_k,h_k,"
        "case,tower,group_order,ker_H12,ker_H22,ker_H32,ker_H14,ker_H24,ker_H34,"
        "checks_passed,checks_failed,skips\n";
    for (const auto& a : r.cases) {
        out += csv_row(a);
        out += '\n';
    }
    return out;
}

std::string to_json(const SweepResult& r) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["range"] = {{"min", r.min}, {"max", r.max}};
    j["timestamp"] = iso_timestamp();
    j["counts"] = {{"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped}};

    nlohmann::json all_assumptions = nlohmann::json::array();
    for (const auto& a : kAssumptionTable)
        all_assumptions.push_back({{"id", a.id}, {"statement", a.statement}});
    j["assumptions"] = all_assumptions;

    nlohmann::json cases = nlohmann::json::array();
    for (const auto& an : r.cases) {
        const PrimeCase& pc = an.data;
        nlohmann::json c;
        c["p"] = pc.p;
        c["symbols"] = {{"sym_2p4", sign_str(pc.sym_2p4)},
                        {"sym_p24", sign_str(pc.sym_p24)},
                        {"case", to_string(pc.label)}};
        nlohmann::json reps;
        reps["e"] = pc.e;
        reps["f"] = pc.f;
        if (pc.x32) {
            reps["x"] = pc.x32->x;
            reps["y"] = pc.x32->y;
        } else {
            reps["x"] = "-";
            reps["y"] = "-";
        }
        reps["c"] = pc.c;
        reps["d"] = pc.d;
        c["representations"] = reps;

        nlohmann::json cn;
        auto put = [&cn](const char* key, const std::optional<i64>& v) {
            if (v)
                cn[key] = *v;
            else
                cn[key] = "-";
        };
        put("h_minus_p", pc.h_minus_p);
        if (pc.n)
            cn["n"] = *pc.n;
        else
            cn["n"] = "-";
        put("h_2p", pc.h_2p);
        put("h2_2p", pc.h2_2p);
        put("h_m2p", pc.h_m2p);
        put("h2_m2p", pc.h2_m2p);
        put("h_k_via_formula", pc.h_k);
        if (pc.label == CaseLabel::both_minus && pc.n)
            cn["h_kstar_via_formula"] = i64(2) << *pc.n;
        else
            cn["h_kstar_via_formula"] = "-";
        c["class_numbers"] = cn;

        c["units"] = {{"norm_eps2p", pc.norm_eps2p},
                      {"Q_k", pc.q_k},
                      {"capitulation_count", pc.q_k == 1 ? 2 : 4}};
        c["tower"] = pc.tower_continues ? "continues" : "stops";

        if (pc.group) {
            nlohmann::json g;
            g["n"] = pc.group->n;
            g["order"] = pc.group->group_order;
            g["kernel_orders"] = pc.group->kernel_orders;
            g["type3_nonmodular"] = pc.group->type3_nonmodular;
            g["kernel_at_h32_is_b2"] = pc.group->kernel_at_h32_is_b2;
            g["control_kernel_h32"] = pc.group->control_kernel_h32;
            c["group"] = g;
        } else {
            c["group"] = "-";
        }

        nlohmann::json checks = nlohmann::json::array();
        for (const auto& ch : an.report.checks) {
            nlohmann::json e;
            e["id"] = ch.id;
            e["statement"] = ch.statement;
            e["status"] = to_string(ch.status);
            if (!ch.witness.empty()) e["witness"] = ch.witness;
            if (!ch.reason.empty()) e["reason"] = ch.reason;
            if (!ch.assumption.empty()) e["assumption"] = ch.assumption;
            checks.push_back(std::move(e));
        }
        c["checks"] = std::move(checks);

        nlohmann::json used = nlohmann::json::array();
        for (const auto& a : an.report.assumptions)
            used.push_back({{"id", a.id}, {"statement", a.statement}});
        c["assumptions"] = std::move(used);

        cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    return j.dump(2) + "\n";
}

int exit_code(const SweepResult& r) { return r.failed > 0 ? 1 : 0; }

} // namespace classtower
