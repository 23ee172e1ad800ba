#pragma once

#include <array>
#include <string>
#include <utility>

#include "classtower/common.hpp"
#include "classtower/errors.hpp"
#include "classtower/numcore.hpp"

namespace classtower {

/* Element a + b*sqrt(2) of Z[sqrt(2)]. */
struct QuadInt2 {
    i64 a = 0;
    i64 b = 0;

    bool operator==(const QuadInt2&) const = default;
    QuadInt2 conj() const { return {a, -b}; }
    i64 norm() const; // a^2 - 2 b^2, overflow-checked
};

/* Reduction of Z[sqrt(2)] modulo a degree-one prime above p: sqrt(2) -> t. */
struct ResidueEmbedding {
    u64 p = 0;
    u64 t = 0; // t^2 = 2 (mod p)

    u64 map(const QuadInt2& alpha) const;
};

// pi = c + 4d*sqrt(2) of norm p, from the Pell representation p = c^2 - 32 d^2;
// requires 2 to be a square mod p
QuadInt2 split_in_zsqrt2(OddPrime p);

// embedding determined by pi: t = -a * b^{-1} mod p where N(pi) = +-p
ResidueEmbedding embedding_for(const QuadInt2& pi);

// quadratic residue symbol [alpha / pi] for pi of odd prime norm
Sign residue_symbol_sqrt2(const QuadInt2& alpha, const QuadInt2& pi);

// Hilbert symbol at an odd prime l of Z[sqrt(2)] for a = l^{v_a} u, b = l^{v_b} v:
// [-1/l]^{v_a v_b} [u/l]^{v_b} [v/l]^{v_a}; u, v passed already coprime to l.
// l is either degree one (norm an odd rational prime) or an inert rational prime.
Sign hilbert_symbol_odd(const QuadInt2& u, const QuadInt2& v, const QuadInt2& l,
                        int v_a, int v_b);

// signs of u under the two real embeddings sqrt(2) -> +-sqrt(2), exactly
std::pair<Sign, Sign> infinite_place_signs(const QuadInt2& u);

/* Identities tying [./pi] symbols over Z[sqrt(2)] to the two quartic symbols mod p. */
struct UnitSymbolRecord {
    bool unit_identity = false;        // [eps0/pi] = (2/p)4 (p/2)4
    bool two_plus_sqrt2 = false;       // [(2+sqrt2)/pi] = (p/2)4
    bool product_formula = false;      // conjugate-symbol + real-place sign bookkeeping
    bool decomposition = false;        // [eps0/pi] = (d/p)(4d-c/p)
    bool all() const { return unit_identity && two_plus_sqrt2 && product_formula && decomposition; }
};

UnitSymbolRecord lemma6_check(OddPrime p);

/* Symbols of the units zeta8, eps0, eps0*zeta8 at each prime above p in Q(zeta8). */
struct Cyclo8Result {
    std::array<u64, 4> roots{};                  // the four primitive eighth roots mod p
    std::array<std::array<Sign, 3>, 4> triples{}; // ([zeta8], [eps0], [eps0 zeta8]) per root
    std::array<Sign, 3> expected{};               // ((p/2)4, (p/2)4(2/p)4, (2/p)4)
    bool uniform = false;                         // identical across the four roots
    bool matches = false;                         // equal to the expected triple
};

Cyclo8Result cyclo8_unit_symbols(OddPrime p);

/* Units of Q(zeta8) that are norms from Q(zeta8, sqrt p), with ambiguous-class data. */
struct NormGroupUnits {
    std::string norm_subgroup; // generators of E_F meet the norm group
    i64 am_order = 0;          // number of ambiguous classes, 4 or 8
    int rank = 0;              // 2-rank of the class group upstairs, 2 or 3
};

NormGroupUnits norm_group_units(OddPrime p);

} // namespace classtower
