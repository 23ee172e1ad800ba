#pragma once

#include <gmpxx.h>

#include <vector>

#include "classtower/numcore.hpp"

namespace classtower {

/* Integral binary quadratic form a x^2 + b xy + c y^2. */
struct BQF {
    i64 a = 0, b = 0, c = 0;

    bool operator==(const BQF&) const = default;
    i64 disc() const;
};

/* Gauss reduction for D < 0; for D > 0 applies the cycle step until the form
 * satisfies the indefinite reduction condition. */
BQF reduce(BQF f);

bool is_reduced(const BQF& f);

BQF principal_form(i64 D);

BQF inverse(const BQF& f);

/* Dirichlet composition via concordant representatives; result is reduced.
 * Both forms must be primitive with equal discriminant. */
BQF compose(const BQF& f, const BQF& g);

BQF power(const BQF& f, u64 e);

/* All reduced primitive forms of a fundamental discriminant D < 0. */
std::vector<BQF> reduced_forms_imag(i64 D);

/* Class number by reduced-form enumeration (route one). */
i64 reduced_form_count(i64 D);

struct ImagClassGroup {
    i64 h = 0;
    AbelianStructure structure;
};

/* h by enumeration plus invariant factors assembled from element orders
 * under composition. */
ImagClassGroup class_group_imag(i64 D);

/* Class number by the weighted Kronecker character sum (route two,
 * independent of form enumeration).  Exact integer arithmetic throughout. */
i64 class_number_imag_analytic(i64 D);

bool is_fundamental_discriminant(i64 D);

bool is_squarefree(u64 m);

/* Fundamental unit x + y sqrt(m) of the maximal order of Q(sqrt m);
 * x, y are half-integers when m = 1 (mod 4).  norm = x^2 - m y^2 = +-1. */
struct FundUnit {
    mpq_class x, y;
    int norm = 0;
};

FundUnit fundamental_unit(u64 m);

/* Norm of the fundamental unit from the continued-fraction period parity
 * alone (no convergent accumulation). */
int fundamental_unit_norm(u64 m);

/* Narrow class number h+ = number of cycles of reduced indefinite forms. */
i64 narrow_class_number_real(u64 m);

/* h = h+ when the fundamental unit has norm -1, h+/2 otherwise. */
i64 class_number_real(u64 m);

/* Floating log-sin estimate of class_number_real, used as a cross-check. */
double class_number_real_analytic_estimate(u64 m);

/* Exponent of the 2-part: largest n with 2^n | h. */
int two_part(i64 h);

/* 2^(d - kappa - 2 - v) * q * h1 h2 h3 / hk^2 for a (2,2)-extension. */
mpq_class kuroda_rhs(int d, int kappa, int v, i64 q, i64 h1, i64 h2, i64 h3, i64 hk);

} // namespace classtower
