#pragma once

#include <vector>

#include "classtower/common.hpp"
#include "classtower/errors.hpp"

namespace classtower {

/* Split metacyclic 2-group <a, b : a^(2^n) = b^(2^m) = 1, b^-1 a b = a^q>
   with q = -1 + k 2^s mod 2^n. */
struct Presentation {
    int n = 0;
    int m = 0;
    int s = 0;
    i64 k = 0; // odd, normalized mod 2^(n-s)
    i64 q = 0; // in [0, 2^n)

    Presentation() = default;
    Presentation(int n_, int m_, int s_, i64 k_);
    bool operator==(const Presentation& o) const {
        return n == o.n && m == o.m && s == o.s && k == o.k;
    }
    i64 a_order() const { return i64(1) << n; }
    i64 b_order() const { return i64(1) << m; }
    i64 group_order() const { return i64(1) << (n + m); }
};

/* Normal form a^i b^j. */
struct GroupElement {
    i64 i = 0;
    i64 j = 0;
    Presentation pres;

    bool operator==(const GroupElement& o) const {
        return i == o.i && j == o.j && pres == o.pres;
    }
    bool operator<(const GroupElement& o) const {
        return i != o.i ? i < o.i : j < o.j;
    }
};

GroupElement make_element(const Presentation& pres, i64 i, i64 j);
GroupElement identity(const Presentation& pres);
GroupElement gen_a(const Presentation& pres);
GroupElement gen_b(const Presentation& pres);

GroupElement mul(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement pow(const GroupElement& x, i64 e);
i64 element_order(const GroupElement& x);
std::vector<GroupElement> all_elements(const Presentation& pres); // sorted

enum class SubgroupTag { H12, H22, H32, H14, H24, H34, custom };

struct Subgroup {
    Presentation pres;
    SubgroupTag tag = SubgroupTag::custom;
    std::vector<GroupElement> generators;
    std::vector<GroupElement> elements; // sorted closure

    i64 order() const { return static_cast<i64>(elements.size()); }
    bool contains(const GroupElement& x) const;
};

Subgroup subgroup_from_generators(const Presentation& pres,
                                  std::vector<GroupElement> gens,
                                  SubgroupTag tag = SubgroupTag::custom);
Subgroup derived_subgroup(const Presentation& pres);
AbelianStructure abelianization(const Presentation& pres);
Subgroup named_subgroup(const Presentation& pres, SubgroupTag tag);
bool is_normal(const Presentation& pres, const Subgroup& h);

/* Value of an Artin transfer: a coset of H' inside H. */
struct TransferImage {
    GroupElement rep;
    std::vector<GroupElement> coset; // rep * H', sorted
    bool trivial = false;            // contains the identity
};

TransferImage transfer(const Presentation& pres, const Subgroup& h, const GroupElement& g);

/* Kernel of the transfer as a set of cosets of G' (lex-least representatives). */
struct TransferKernel {
    std::vector<GroupElement> coset_reps;
    i64 order = 0;
};

TransferKernel transfer_kernel(const Presentation& pres, const Subgroup& h);

enum class GroupType { type1, type2, type3, type4 };

struct Classification {
    GroupType type;
    bool modular = false;
};

Classification classify(const Presentation& pres);

/* Independent engine: b-left words b^j a^i multiplied by one-letter rewriting
   ab -> b a^q only; every group quantity is recomputed from the Cayley table. */
class BruteForceOracle {
public:
    explicit BruteForceOracle(const Presentation& pres); // TooLarge beyond 2^12 elements

    i64 size() const { return size_; }
    const Presentation& presentation() const { return pres_; }

    i64 mul_idx(i64 x, i64 y) const { return table_[static_cast<size_t>(x * size_ + y)]; }
    i64 inv_idx(i64 x) const { return inv_[static_cast<size_t>(x)]; }
    i64 pow_idx(i64 x, i64 e) const;

    i64 idx_from_normal_form(const GroupElement& e) const;
    GroupElement normal_form_from_idx(i64 idx) const;

    bool is_latin_square() const;
    std::vector<i64> closure_idx(std::vector<i64> seed) const;
    std::vector<i64> derived_idx() const;                       // whole-group commutator closure
    std::vector<i64> derived_within_idx(const std::vector<i64>& h) const;
    AbelianStructure abelianization() const;
    std::vector<i64> transfer_coset_idx(const std::vector<i64>& h, i64 g) const;
    i64 transfer_kernel_order(const std::vector<i64>& h) const;

private:
    Presentation pres_;
    i64 mask_;  // 2^n - 1
    i64 jmod_;  // 2^m
    i64 size_ = 0;
    std::vector<u32> table_;
    std::vector<u32> inv_;
};

} // namespace classtower
