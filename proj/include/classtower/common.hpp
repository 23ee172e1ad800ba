#pragma once

#include <cstdint>
#include <vector>

namespace classtower {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr const char* kVersion = "1.0.0";

/* Value of a quadratic/quartic residue character. */
enum class Sign : int { plus = +1, minus = -1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) {
    return (a == b) ? Sign::plus : Sign::minus;
}

constexpr Sign sign_from_int(int v) {
    return v >= 0 ? Sign::plus : Sign::minus;
}

/* Invariant factor decomposition d1 | d2 | ... | dr of a finite abelian group. */
struct AbelianStructure {
    std::vector<i64> divisors;

    bool operator==(const AbelianStructure&) const = default;

    i64 order() const {
        i64 n = 1;
        for (i64 d : divisors) n *= d;
        return n;
    }
};

} // namespace classtower
