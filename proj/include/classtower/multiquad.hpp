#pragma once

#include <array>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "classtower/common.hpp"
#include "classtower/errors.hpp"
#include "classtower/numcore.hpp"

namespace classtower {

/* Element of F = Q(sqrt 2, sqrt p) as c0 + c1 sqrt2 + c2 sqrtp + c3 sqrt2p. */
struct MultiQuadElem {
    u64 p = 0;
    std::array<mpq_class, 4> c{};

    bool operator==(const MultiQuadElem& o) const { return p == o.p && c == o.c; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
};

// denominators of the coordinates must divide 4
MultiQuadElem make_mq(u64 p, mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3);

MultiQuadElem mq_add(const MultiQuadElem& a, const MultiQuadElem& b);
MultiQuadElem mq_mul(const MultiQuadElem& a, const MultiQuadElem& b);
MultiQuadElem mq_neg(const MultiQuadElem& a);

// signs at the four real embeddings (sqrt2, sqrtp) -> (+,+), (+,-), (-,+), (-,-)
std::array<int, 4> embedding_signs(const MultiQuadElem& u);

struct SquareTestResult {
    bool is_square = false;
    std::optional<MultiQuadElem> root; // positive at the first embedding
};

// exact square test; positivity filter first, then sign-pattern root recovery at
// growing fixed-point precision with exact verification of every candidate
SquareTestResult is_square_in_F(const MultiQuadElem& u);

/* Fundamental-unit system of F for p = 1 mod 8, split by norm(eps_2p). */
struct SfuCase {
    int norm_eps2p = 0;                  // -1 or +1
    std::array<std::string, 3> sfu{};    // generator descriptions
    bool square_confirmed = false;       // the case's square test succeeded
    bool exclusivity_ok = false;         // the other case's square test failed
    bool norm_only = false;              // height cap hit, norm criterion alone used
};

SfuCase sfu_case(OddPrime p);

// unit index Q_k = [E_k : W_k E_F']: 2 iff norm(eps_2p) = +1
i64 q_index_k(OddPrime p);

// classes of C_{k,2} that capitulate in the genus field: 2 iff norm(eps_2p) = -1
i64 capitulation_count_kstar(OddPrime p);

} // namespace classtower
