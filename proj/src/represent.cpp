#include "classtower/represent.hpp"

#include <cmath>

namespace classtower {

namespace {

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool perfect_square(u64 n, u64* root) {
    u64 r = isqrt_u64(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

} // namespace

std::optional<DefiniteRep> cornacchia(OddPrime p, u64 n) {
    const u64 pv = p.value;
    if (n == 0) throw ZeroInput("cornacchia: n must be positive");
    if (n >= pv) return std::nullopt; // x^2 + n y^2 = p forces n y^2 < p

    i64 neg_n = -static_cast<i64>(n % pv);
    u64 t0;
    try {
        t0 = sqrt_mod(neg_n, p);
    } catch (const NoRoot&) {
        return std::nullopt;
    }

    const u64 limit = isqrt_u64(pv);
    for (u64 t : {t0, pv - t0}) {
        u64 a = pv, b = t;
        while (b > limit) {
            u64 r = a % b;
            a = b;
            b = r;
        }
        if (b == 0) continue;
        u64 m = pv - b * b;
        if (m % n != 0) continue;
        u64 y;
        if (!perfect_square(m / n, &y) || y == 0) continue;
        return DefiniteRep{b, y};
    }
    return std::nullopt;
}

PellRep pell_rep(OddPrime p) {
    const u64 pv = p.value;
    if (pv % 8 != 1) throw NoRepresentation("pell_rep: p != 1 (mod 8)");
    // c^2 = p + 32 d^2 <= (17 + 12 sqrt 2) p < 34 p bounds the search.
    for (u64 d = 0; static_cast<u128>(32) * d * d <= static_cast<u128>(33) * pv; ++d) {
        u64 c;
        if (perfect_square(pv + 32 * d * d, &c)) {
            if (d == 0) continue; // p itself is never a square
            return PellRep{c, d};
        }
    }
    throw NoRepresentation("pell_rep: no c^2 - 32 d^2 = p within the unit bound");
}

std::pair<GaussInt, GaussInt> gaussian_split(OddPrime p) {
    auto rep = cornacchia(p, 16);
    if (!rep) throw NoRepresentation("gaussian_split: p != e^2 + 16 f^2");
    i64 e = static_cast<i64>(rep->x);
    i64 f4 = 4 * static_cast<i64>(rep->y);
    return {GaussInt{e, f4}, GaussInt{e, -f4}};
}

} // namespace classtower
