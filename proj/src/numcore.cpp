#include "classtower/numcore.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace classtower {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 mod_pow(i64 base, u64 exp, u64 m) {
    if (m < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
    i64 r = base % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    u64 b = static_cast<u64>(r);
    u64 acc = 1 % m;
    while (exp) {
        if (exp & 1) acc = mul_mod(acc, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return acc;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
    a %= n;
    if (a == 0) return false; // a multiple of n tells us nothing
    u64 x = mod_pow(static_cast<i64>(a), d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true; // composite witnessed
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // Sinclair's base set: deterministic for all n < 2^64.
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
        if (miller_rabin_witness(n, a, d, r)) return false;
    return true;
}

int jacobi(i64 a, u64 n) {
    if (n == 0 || (n & 1) == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
    i64 r = a % static_cast<i64>(n);
    if (r < 0) r += static_cast<i64>(n);
    u64 x = static_cast<u64>(r);
    u64 y = n;
    int s = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            u64 m8 = y & 7;
            if (m8 == 3 || m8 == 5) s = -s;
        }
        std::swap(x, y);
        if ((x & 3) == 3 && (y & 3) == 3) s = -s;
        x %= y;
    }
    return y == 1 ? s : 0;
}

u64 inv_mod(u64 a, u64 m) {
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    if (t < 0) t += static_cast<i64>(m);
    return static_cast<u64>(t);
}

OddPrime::OddPrime(u64 p) : value(p) {
    if (p < 3 || (p & 1) == 0 || !is_prime(p))
        throw NotPrime("OddPrime: " + std::to_string(p) + " is not an odd prime");
}

OddPrime OddPrime::one_mod_8(u64 p) {
    OddPrime q(p);
    if (p % 8 != 1)
        throw NotPrime("OddPrime::one_mod_8: " + std::to_string(p) + " != 1 (mod 8)");
    return q;
}

Sign quartic_2_over_p(OddPrime p) {
    if (p.value % 8 != 1) throw NotPrime("quartic_2_over_p: p != 1 (mod 8)");
    u64 r = mod_pow(2, (p.value - 1) / 4, p.value);
    if (r == 1) return Sign::plus;
    if (r == p.value - 1) return Sign::minus;
    throw InconsistentSymbols("quartic_2_over_p: 2^((p-1)/4) not a fourth-power sign");
}

Sign quartic_p_over_2(OddPrime p) {
    if (p.value % 8 != 1) throw NotPrime("quartic_p_over_2: p != 1 (mod 8)");
    return ((p.value - 1) / 8) % 2 == 0 ? Sign::plus : Sign::minus;
}

u64 sqrt_mod(i64 a, OddPrime p) {
    const u64 pv = p.value;
    i64 rr = a % static_cast<i64>(pv);
    if (rr < 0) rr += static_cast<i64>(pv);
    u64 n = static_cast<u64>(rr);
    if (jacobi(static_cast<i64>(n), pv) != 1)
        throw NoRoot("sqrt_mod: argument is not a nonzero square residue");

    // p = 3 (mod 4): direct exponent.
    if (pv % 4 == 3) {
        u64 r = mod_pow(static_cast<i64>(n), (pv + 1) / 4, pv);
        return std::min(r, pv - r);
    }

    u64 q = pv - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    // Smallest quadratic non-residue; deterministic so results are reproducible.
    u64 z = 2;
    while (jacobi(static_cast<i64>(z), pv) != -1) ++z;

    u64 m = static_cast<u64>(s);
    u64 c = mod_pow(static_cast<i64>(z), q, pv);
    u64 t = mod_pow(static_cast<i64>(n), q, pv);
    u64 r = mod_pow(static_cast<i64>(n), (q + 1) / 2, pv);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, pv);
            ++i;
            if (i == m) throw NoRoot("sqrt_mod: internal order overflow");
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, pv);
        m = i;
        c = mul_mod(b, b, pv);
        t = mul_mod(t, c, pv);
        r = mul_mod(r, b, pv);
    }
    return std::min(r, pv - r);
}

std::array<u64, 4> primitive_eighth_roots(OddPrime p) {
    const u64 pv = p.value;
    if (pv % 8 != 1) throw NotPrime("primitive_eighth_roots: p != 1 (mod 8)");
    u64 x = 2;
    while (jacobi(static_cast<i64>(x), pv) != -1) ++x;
    u64 z = mod_pow(static_cast<i64>(x), (pv - 1) / 8, pv);
    // z^4 = x^((p-1)/2) = -1, so z has exact order 8.
    u64 z2 = mul_mod(z, z, pv);
    u64 z4 = mul_mod(z2, z2, pv);
    if (z4 != pv - 1) throw InconsistentSymbols("primitive_eighth_roots: order-8 construction failed");
    std::array<u64, 4> roots{z, mul_mod(z, z2, pv), mul_mod(z, z4, pv), mul_mod(mul_mod(z, z2, pv), z4, pv)};
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace classtower
