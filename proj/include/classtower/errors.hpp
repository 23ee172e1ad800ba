#pragma once

#include <stdexcept>

namespace classtower {

#define CLASSTOWER_ERROR(Name)                          \
    struct Name : std::runtime_error {                  \
        using std::runtime_error::runtime_error;        \
    }

CLASSTOWER_ERROR(NotPrime);
CLASSTOWER_ERROR(NoRoot);
CLASSTOWER_ERROR(NoRepresentation);
CLASSTOWER_ERROR(InvalidDiscriminant);
CLASSTOWER_ERROR(NotSquarefree);
CLASSTOWER_ERROR(MismatchedDiscriminant);
CLASSTOWER_ERROR(NotPrimitive);
CLASSTOWER_ERROR(PeriodOverflow);
CLASSTOWER_ERROR(MixedPresentations);
CLASSTOWER_ERROR(BadTag);
CLASSTOWER_ERROR(NotNormal);
CLASSTOWER_ERROR(TooLarge);
CLASSTOWER_ERROR(NotMetacyclic);
CLASSTOWER_ERROR(Abelian);
CLASSTOWER_ERROR(PrecisionExhausted);
CLASSTOWER_ERROR(HypothesisNotMet);
CLASSTOWER_ERROR(InconsistentSymbols);
CLASSTOWER_ERROR(DivisibleByPi);
CLASSTOWER_ERROR(BadFactorization);
CLASSTOWER_ERROR(ZeroInput);
CLASSTOWER_ERROR(UsageError);

#undef CLASSTOWER_ERROR

} // namespace classtower
