#pragma once

#include <array>

#include "classtower/common.hpp"
#include "classtower/errors.hpp"

namespace classtower {

u64 mul_mod(u64 a, u64 b, u64 m);

/* base^exp mod m, m >= 2.  Negative bases are reduced first. */
u64 mod_pow(i64 base, u64 exp, u64 m);

/* Deterministic Miller-Rabin, valid for the full 64-bit range. */
bool is_prime(u64 n);

/* Jacobi symbol (a/n) for odd n >= 1; 0 when gcd(a,n) > 1. */
int jacobi(i64 a, u64 n);

u64 inv_mod(u64 a, u64 m);

/* Checked odd prime; the one_mod_8 factory additionally demands p = 1 (mod 8),
 * the regime every higher-level computation in this project lives in. */
struct OddPrime {
    u64 value;

    explicit OddPrime(u64 p);
    static OddPrime one_mod_8(u64 p);
};

/* (2/p)_4 for p = 1 (mod 8): sign of 2^((p-1)/4) mod p. */
Sign quartic_2_over_p(OddPrime p);

/* (p/2)_4 for p = 1 (mod 8): (-1)^((p-1)/8). */
Sign quartic_p_over_2(OddPrime p);

/* Tonelli-Shanks square root; returns the smaller of the two roots.
 * Throws NoRoot unless jacobi(a, p) == 1. */
u64 sqrt_mod(i64 a, OddPrime p);

/* The four residues of multiplicative order 8 mod p (p = 1 mod 8), ascending. */
std::array<u64, 4> primitive_eighth_roots(OddPrime p);

} // namespace classtower
