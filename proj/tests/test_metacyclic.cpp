#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "classtower/metacyclic.hpp"

using namespace classtower;

namespace {

std::vector<i64> to_idx(const BruteForceOracle& o, const std::vector<GroupElement>& es) {
    std::vector<i64> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(o.idx_from_normal_form(e));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("hand-checked multiplication law for n=3, q=3") {
    const Presentation pres(3, 2, 2, 1);
    CHECK(pres.q == 3);
    const GroupElement a = gen_a(pres), b = gen_b(pres);
    CHECK(mul(b, a) == make_element(pres, 3, 1));      // b a = a^3 b
    CHECK(mul(a, b) == make_element(pres, 1, 1));
    const GroupElement ab = mul(a, b);
    CHECK(mul(ab, ab) == make_element(pres, 4, 2));    // (ab)^2 = a^4 b^2
    CHECK(element_order(a) == 8);
    CHECK(element_order(b) == 4);
    CHECK(element_order(ab) == 4);
    CHECK(pow(a, 8) == identity(pres));
    CHECK(inverse(ab) == pow(ab, 3));
    CHECK(mul(inverse(b), mul(a, b)) == pow(a, 3));    // b^-1 a b = a^q
}

TEST_CASE("derived subgroup, abelianization, named subgroups for n=3") {
    const Presentation pres(3, 2, 2, 1);
    const Subgroup g1 = derived_subgroup(pres);
    CHECK(g1.order() == 4); // <a^2>
    for (const auto& e : g1.elements) {
        CHECK(e.j == 0);
        CHECK(e.i % 2 == 0);
    }
    CHECK(abelianization(pres) == AbelianStructure{{2, 4}});

    const i64 expected_order[6] = {16, 16, 16, 8, 8, 8};
    const SubgroupTag tags[6] = {SubgroupTag::H12, SubgroupTag::H22, SubgroupTag::H32,
                                 SubgroupTag::H14, SubgroupTag::H24, SubgroupTag::H34};
    for (int i = 0; i < 6; ++i) {
        const Subgroup h = named_subgroup(pres, tags[i]);
        CHECK(h.order() == expected_order[i]);
        CHECK(is_normal(pres, h));
        for (const auto& e : derived_subgroup(pres).elements) CHECK(h.contains(e));
    }
    CHECK_THROWS_AS(named_subgroup(Presentation(3, 3, 2, 1), SubgroupTag::H12), BadTag);
}

TEST_CASE("presentation guards") {
    CHECK_THROWS_AS(Presentation(3, 2, 2, 2), NotMetacyclic);  // even k
    CHECK_THROWS_AS(Presentation(3, 2, 4, 1), NotMetacyclic);  // s > n
    CHECK_THROWS_AS(Presentation(0, 2, 1, 1), NotMetacyclic);
    CHECK_THROWS_AS(all_elements(Presentation(19, 2, 18, 1)), TooLarge);
    const Presentation norm(4, 2, 1, 5); // k reduced mod 2^(n-s)
    CHECK(norm.k == 5 % 8);
    const Presentation snorm(4, 2, 4, 7); // s = n forces k = 1
    CHECK(snorm.k == 1);
}

TEST_CASE("classification across templates") {
    Classification c = classify(Presentation(3, 2, 2, 1));
    CHECK(c.type == GroupType::type3);
    CHECK(!c.modular);
    c = classify(Presentation(3, 2, 3, 1)); // q = -1 mod 8
    CHECK(c.type == GroupType::type1);
    CHECK(!c.modular);
    c = classify(Presentation(2, 2, 2, 1)); // q = -1 mod 4, n = 2
    CHECK(c.type == GroupType::type1);
    CHECK(c.modular);
    c = classify(Presentation(6, 2, 4, 1)); // v2(q+1) = 4, strictly between 1 and n
    CHECK(c.type == GroupType::type3);
    CHECK(!c.modular);
    CHECK_THROWS_AS(classify(Presentation(1, 2, 1, 1)), Abelian); // q = 1
    CHECK_THROWS_AS(classify(Presentation(3, 1, 2, 1)), NotMetacyclic);
}

TEST_CASE("transfer of a to the cyclic index-4 subgroup has the closed form") {
    // V(a) = a^(1 + q + q^2 + q^3); for the tower family s = n - 1 this is
    // a^(k 2^(s+1)) = identity.
    // b has order 4, so conjugation by b must have order dividing 4: s >= n - 2.
    for (int n = 3; n <= 6; ++n)
        for (int s = std::max(2, n - 2); s < n; ++s) {
            const Presentation pres(n, 2, s, 1);
            const i64 mask = (i64(1) << n) - 1;
            i64 e = 0, qp = 1;
            for (int t = 0; t < 4; ++t) {
                e = (e + qp) & mask;
                qp = (qp * pres.q) & mask;
            }
            const Subgroup h14 = named_subgroup(pres, SubgroupTag::H14);
            const TransferImage img = transfer(pres, h14, gen_a(pres));
            CHECK(img.rep == make_element(pres, e, 0));
            CHECK(img.coset.size() == 1); // cyclic subgroup, trivial derived part
            CHECK(img.trivial == (e == 0));
            if (s == n - 1) {
                CHECK(((i64(1) << (s + 1)) & mask) == e); // k 2^(s+1) = 0 mod 2^n
                CHECK(img.trivial);
            }
        }
}

TEST_CASE("transfers and kernels agree with the brute-force oracle") {
    const Presentation cand[] = {
        Presentation(3, 2, 2, 1), Presentation(4, 2, 3, 1), Presentation(4, 2, 2, 1),
        Presentation(4, 2, 4, 1), Presentation(5, 2, 4, 1), Presentation(4, 2, 2, 3),
    };
    const SubgroupTag tags[6] = {SubgroupTag::H12, SubgroupTag::H22, SubgroupTag::H32,
                                 SubgroupTag::H14, SubgroupTag::H24, SubgroupTag::H34};
    for (const Presentation& pres : cand) {
        const BruteForceOracle oracle(pres);
        REQUIRE(oracle.is_latin_square());
        REQUIRE(oracle.size() == pres.group_order());

        CHECK(oracle.abelianization() == abelianization(pres));
        CHECK(static_cast<i64>(oracle.derived_idx().size()) == derived_subgroup(pres).order());

        const GroupElement probes[] = {gen_a(pres), gen_b(pres),
                                       mul(gen_a(pres), gen_b(pres)),
                                       make_element(pres, 3, 2)};
        for (const SubgroupTag tag : tags) {
            const Subgroup h = named_subgroup(pres, tag);
            const std::vector<i64> hidx = to_idx(oracle, h.elements);
            for (const GroupElement& g : probes) {
                const TransferImage img = transfer(pres, h, g);
                std::vector<i64> coset = to_idx(oracle, img.coset);
                std::vector<i64> expected =
                    oracle.transfer_coset_idx(hidx, oracle.idx_from_normal_form(g));
                std::sort(expected.begin(), expected.end());
                CHECK(coset == expected);
            }
            const TransferKernel ker = transfer_kernel(pres, h);
            CHECK(ker.order == oracle.transfer_kernel_order(hidx));
        }
    }
}

TEST_CASE("kernel anchors for the tower family and the q = -1 control") {
    const SubgroupTag tags[6] = {SubgroupTag::H12, SubgroupTag::H22, SubgroupTag::H32,
                                 SubgroupTag::H14, SubgroupTag::H24, SubgroupTag::H34};
    for (int n = 3; n <= 6; ++n) {
        const Presentation pres(n, 2, n - 1, 1);
        const i64 want[6] = {2, 2, 2, 8, 8, 8};
        for (int i = 0; i < 6; ++i)
            CHECK(transfer_kernel(pres, named_subgroup(pres, tags[i])).order == want[i]);
        const TransferKernel k32 = transfer_kernel(pres, named_subgroup(pres, SubgroupTag::H32));
        REQUIRE(k32.coset_reps.size() == 2);
        CHECK(k32.coset_reps[0] == identity(pres));
        CHECK(k32.coset_reps[1] == make_element(pres, 0, 2));

        const Presentation ctrl(n, 2, n, 1); // q = -1
        CHECK(classify(ctrl).type == GroupType::type1);
        CHECK(transfer_kernel(ctrl, named_subgroup(ctrl, SubgroupTag::H32)).order == 4);
    }
}

TEST_CASE("transfer refuses non-normal subgroups") {
    const Presentation pres(3, 2, 2, 1);
    const Subgroup hb = subgroup_from_generators(pres, {gen_b(pres)});
    CHECK(hb.order() == 4);
    CHECK(!is_normal(pres, hb));
    CHECK_THROWS_AS(transfer(pres, hb, gen_a(pres)), NotNormal);
}

TEST_CASE("oracle guards and index round-trip") {
    CHECK_THROWS_AS(BruteForceOracle(Presentation(11, 2, 10, 1)), TooLarge);
    const Presentation pres(4, 2, 3, 1);
    const BruteForceOracle oracle(pres);
    for (i64 idx = 0; idx < oracle.size(); ++idx)
        CHECK(oracle.idx_from_normal_form(oracle.normal_form_from_idx(idx)) == idx);
    for (const GroupElement& x : all_elements(pres))
        for (const GroupElement& y : all_elements(pres))
            CHECK(oracle.normal_form_from_idx(
                      oracle.mul_idx(oracle.idx_from_normal_form(x),
                                     oracle.idx_from_normal_form(y))) == mul(x, y));
}
