#pragma once

#include <optional>
#include <utility>

#include "classtower/numcore.hpp"

namespace classtower {

/* Primitive representation p = x^2 + n*y^2 with x, y > 0. */
struct DefiniteRep {
    u64 x = 0, y = 0;

    bool operator==(const DefiniteRep&) const = default;
};

/* Cornacchia descent from a square root of -n mod p.  Returns nothing when p
 * is not represented by x^2 + n y^2 (for n = 32 that happens exactly when the
 * two quartic symbols attached to p disagree). */
std::optional<DefiniteRep> cornacchia(OddPrime p, u64 n);

/* Minimal-d solution of c^2 - 32 d^2 = p, c, d > 0.  Exists for every
 * p = 1 (mod 8): p splits in Z[sqrt 2] and some associate of a generator
 * has sqrt-2 coefficient divisible by 4. */
struct PellRep {
    u64 c = 0, d = 0;

    bool operator==(const PellRep&) const = default;
};

PellRep pell_rep(OddPrime p);

struct GaussInt {
    i64 re = 0, im = 0;

    bool operator==(const GaussInt&) const = default;
};

/* The conjugate pair (e + 4f i, e - 4f i) of Gaussian primes over p,
 * normalized from p = e^2 + 16 f^2. */
std::pair<GaussInt, GaussInt> gaussian_split(OddPrime p);

} // namespace classtower
