#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "classtower/numcore.hpp"
#include "classtower/represent.hpp"

using namespace classtower;

namespace {

/* Exhaustive search oracles. */
std::vector<DefiniteRep> all_definite_reps(u64 p, u64 n) {
    std::vector<DefiniteRep> out;
    for (u64 y = 1; n * y * y < p; ++y) {
        const u64 rest = p - n * y * y;
        u64 x = 0;
        while (x * x < rest) ++x;
        if (x * x == rest && x > 0) out.push_back({x, y});
    }
    return out;
}

std::optional<PellRep> brute_pell(u64 p) {
    for (u64 d = 1; 32 * d * d <= 33 * p; ++d) {
        const u64 t = p + 32 * d * d;
        u64 c = 0;
        while (c * c < t) ++c;
        if (c * c == t) return PellRep{c, d};
    }
    return std::nullopt;
}

std::vector<u64> primes_1_mod_8(u64 hi) {
    std::vector<u64> out;
    for (u64 p = 17; p <= hi; p += 8)
        if (is_prime(p)) out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("cornacchia anchors") {
    const OddPrime p41 = OddPrime::one_mod_8(41);
    auto r = cornacchia(p41, 2);
    REQUIRE(r);
    CHECK(r->x == 3);
    CHECK(r->y == 4);
    r = cornacchia(p41, 16);
    REQUIRE(r);
    CHECK(r->x == 5);
    CHECK(r->y == 1);
    r = cornacchia(p41, 32);
    REQUIRE(r);
    CHECK(r->x == 3);
    CHECK(r->y == 1);
    CHECK(!cornacchia(OddPrime::one_mod_8(17), 32));
}

TEST_CASE("cornacchia against exhaustive search") {
    for (u64 pv : primes_1_mod_8(3000)) {
        const OddPrime p(pv);
        for (u64 n : {2ULL, 16ULL, 32ULL}) {
            const auto brute = all_definite_reps(pv, n);
            const auto fast = cornacchia(p, n);
            CHECK(fast.has_value() == !brute.empty());
            if (fast) {
                CHECK(fast->x * fast->x + n * fast->y * fast->y == pv);
                bool found = false;
                for (const auto& b : brute) found = found || (b.x == fast->x && b.y == fast->y);
                CHECK(found);
            }
        }
    }
}

TEST_CASE("representations p = e^2 + 16 f^2 and p = a^2 + 2 b^2 always exist") {
    for (u64 pv : primes_1_mod_8(3000)) {
        const OddPrime p(pv);
        CHECK(cornacchia(p, 2).has_value());
        CHECK(cornacchia(p, 16).has_value());
    }
}

TEST_CASE("pell_rep anchors") {
    const PellRep r41 = pell_rep(OddPrime::one_mod_8(41));
    CHECK(r41.c == 13);
    CHECK(r41.d == 2);
    const PellRep r113 = pell_rep(OddPrime::one_mod_8(113));
    CHECK(r113.c == 25);
    CHECK(r113.d == 4);
}

TEST_CASE("pell_rep against exhaustive search, minimal d, stated bound") {
    for (u64 pv : primes_1_mod_8(3000)) {
        const auto brute = brute_pell(pv);
        REQUIRE(brute); // solvable throughout the regime
        const PellRep fast = pell_rep(OddPrime(pv));
        CHECK(fast.c == brute->c);
        CHECK(fast.d == brute->d);
        CHECK(fast.c * fast.c - 32 * fast.d * fast.d == pv);
        CHECK(32 * fast.d * fast.d <= 33 * pv);
    }
}

TEST_CASE("gaussian_split") {
    const auto [g, gbar] = gaussian_split(OddPrime::one_mod_8(41));
    CHECK(g.re * g.re + g.im * g.im == 41);
    CHECK(gbar == GaussInt{g.re, -g.im});
    CHECK(g.im % 4 == 0);
    for (u64 pv : primes_1_mod_8(2000)) {
        const auto [v, vbar] = gaussian_split(OddPrime(pv));
        CHECK(v.re * v.re + v.im * v.im == static_cast<i64>(pv));
        CHECK(vbar.im == -v.im);
        CHECK(v.im % 4 == 0);
    }
}
