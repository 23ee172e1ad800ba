#include "classtower/metacyclic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace classtower {

namespace {

/* Inverse of an odd residue mod 2^bits by Newton lifting. */
i64 inv_odd_pow2(i64 q, int bits) {
    u64 mask = (bits >= 64) ? ~u64{0} : ((u64{1} << bits) - 1);
    u64 x = static_cast<u64>(q); // correct mod 8 already
    for (int it = 0; it < 6; ++it) x = x * (2 - static_cast<u64>(q) * x);
    return static_cast<i64>(x & mask);
}

i64 pow_mask(i64 base, i64 e, u64 mask) {
    u64 acc = 1, b = static_cast<u64>(base);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return static_cast<i64>(acc & mask);
}

u64 mask_of(int n) { return (u64{1} << n) - 1; }

void require_same(const Presentation& a, const Presentation& b, const char* who) {
    if (!(a == b)) throw MixedPresentations(std::string(who) + ": elements from different presentations");
}

std::vector<GroupElement> sorted_closure(const Presentation& pres,
                                         const std::vector<GroupElement>& gens) {
    std::set<GroupElement> seen;
    seen.insert(identity(pres));
    std::vector<GroupElement> frontier(seen.begin(), seen.end());
    for (const auto& g : gens)
        if (seen.insert(g).second) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                GroupElement y = mul(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

/* Derived subgroup of an explicitly listed subgroup, by all-pairs commutators. */
std::vector<GroupElement> derived_of_elements(const Presentation& pres,
                                              const std::vector<GroupElement>& elems) {
    if (elems.size() > (1u << 12))
        throw TooLarge("derived subgroup: element set too large for all-pairs closure");
    std::set<GroupElement> comms;
    for (const auto& x : elems)
        for (const auto& y : elems)
            comms.insert(mul(mul(inverse(x), inverse(y)), mul(x, y)));
    return sorted_closure(pres, {comms.begin(), comms.end()});
}

/* Invariant factors of an abelian 2-group given by its element orders. */
std::vector<i64> divisors_from_orders(const std::vector<i64>& orders) {
    size_t total = orders.size();
    int emax = 0;
    while ((size_t{1} << emax) < total) ++emax;
    std::vector<int> c(emax + 1, 0); // c[t] = log2 #{x : x^(2^t) = 1}
    for (int t = 0; t <= emax; ++t) {
        i64 cnt = 0;
        for (i64 o : orders)
            if (o <= (i64{1} << t)) ++cnt;
        int lg = 0;
        while ((i64{1} << lg) < cnt) ++lg;
        if ((i64{1} << lg) != cnt)
            throw NotMetacyclic("abelianization: torsion count is not a 2-power");
        c[t] = lg;
    }
    std::vector<i64> divisors;
    for (int t = 1; t <= emax; ++t) {
        int rt = c[t] - c[t - 1];
        int rt1 = (t < emax) ? c[t + 1] - c[t] : 0;
        for (int i = 0; i < rt - rt1; ++i) divisors.push_back(i64{1} << t);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

u64 splitmix(u64& state) {
    state += 0x9e3779b97f4a7c15ull;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Presentation::Presentation(int n_, int m_, int s_, i64 k_) : n(n_), m(m_), s(s_), k(k_) {
    if (n < 1 || n > 40 || m < 1 || m > 8)
        throw NotMetacyclic("presentation: exponents out of range");
    if (s < 1 || s > n) throw NotMetacyclic("presentation: twist exponent s not in [1, n]");
    if (k < 1 || k % 2 == 0) throw NotMetacyclic("presentation: k must be a positive odd integer");
    if (s == n)
        k = 1;
    else
        k = k & ((i64{1} << (n - s)) - 1); // odd residues stay odd
    u64 mask = mask_of(n);
    q = static_cast<i64>((static_cast<u64>(-1 + (k << s))) & mask);
    // the conjugation automorphism must have order dividing 2^m
    i64 t = q;
    for (int i = 0; i < m; ++i) t = static_cast<i64>((static_cast<u64>(t) * static_cast<u64>(t)) & mask);
    if (t != 1) throw NotMetacyclic("presentation: q^(2^m) != 1 mod 2^n");
}

GroupElement make_element(const Presentation& pres, i64 i, i64 j) {
    u64 mask = mask_of(pres.n);
    GroupElement e;
    e.i = static_cast<i64>(static_cast<u64>(i) & mask);
    e.j = static_cast<i64>(static_cast<u64>(j) & (mask_of(pres.m)));
    e.pres = pres;
    return e;
}

GroupElement identity(const Presentation& pres) { return make_element(pres, 0, 0); }
GroupElement gen_a(const Presentation& pres) { return make_element(pres, 1, 0); }
GroupElement gen_b(const Presentation& pres) { return make_element(pres, 0, 1); }

GroupElement mul(const GroupElement& x, const GroupElement& y) {
    require_same(x.pres, y.pres, "mul");
    const Presentation& P = x.pres;
    u64 mask = mask_of(P.n);
    i64 qinv = inv_odd_pow2(P.q, P.n);
    i64 shift = pow_mask(qinv, x.j, mask); // q^(-x.j)
    u64 i = (static_cast<u64>(x.i) + static_cast<u64>(y.i) * static_cast<u64>(shift)) & mask;
    i64 j = (x.j + y.j) & (static_cast<i64>(mask_of(P.m)));
    GroupElement r;
    r.i = static_cast<i64>(i);
    r.j = j;
    r.pres = P;
    return r;
}

GroupElement inverse(const GroupElement& x) {
    const Presentation& P = x.pres;
    u64 mask = mask_of(P.n);
    i64 qj = pow_mask(P.q, x.j, mask);
    u64 i = (static_cast<u64>(-x.i) * static_cast<u64>(qj)) & mask;
    i64 j = (-x.j) & static_cast<i64>(mask_of(P.m));
    GroupElement r;
    r.i = static_cast<i64>(i);
    r.j = j;
    r.pres = P;
    return r;
}

GroupElement pow(const GroupElement& x, i64 e) {
    GroupElement acc = identity(x.pres);
    GroupElement base = e < 0 ? inverse(x) : x;
    u64 k = static_cast<u64>(e < 0 ? -e : e);
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

i64 element_order(const GroupElement& x) {
    GroupElement id = identity(x.pres);
    GroupElement cur = x;
    i64 o = 1;
    while (!(cur == id)) {
        cur = mul(cur, x);
        ++o;
        if (o > x.pres.group_order()) throw NotMetacyclic("element_order: runaway");
    }
    return o;
}

std::vector<GroupElement> all_elements(const Presentation& pres) {
    if (pres.n + pres.m > 20) throw TooLarge("all_elements: group too large to enumerate");
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(pres.group_order()));
    for (i64 i = 0; i < pres.a_order(); ++i)
        for (i64 j = 0; j < pres.b_order(); ++j)
            out.push_back(make_element(pres, i, j));
    return out;
}

bool Subgroup::contains(const GroupElement& x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup subgroup_from_generators(const Presentation& pres, std::vector<GroupElement> gens,
                                  SubgroupTag tag) {
    for (const auto& g : gens) require_same(pres, g.pres, "subgroup_from_generators");
    Subgroup h;
    h.pres = pres;
    h.tag = tag;
    h.generators = gens;
    h.elements = sorted_closure(pres, gens);
    return h;
}

Subgroup derived_subgroup(const Presentation& pres) {
    // normal closure of the generator commutators
    GroupElement a = gen_a(pres), b = gen_b(pres);
    std::set<GroupElement> seed;
    seed.insert(mul(mul(inverse(a), inverse(b)), mul(a, b)));
    // close under conjugation by the group generators, then take the subgroup closure
    for (;;) {
        std::set<GroupElement> grown = seed;
        for (const auto& x : seed)
            for (const auto& g : {a, b}) {
                grown.insert(mul(mul(inverse(g), x), g));
                grown.insert(mul(mul(g, x), inverse(g)));
            }
        auto closed = sorted_closure(pres, {grown.begin(), grown.end()});
        std::set<GroupElement> next(closed.begin(), closed.end());
        if (next == seed) {
            Subgroup h;
            h.pres = pres;
            h.generators = {grown.begin(), grown.end()};
            h.elements = std::move(closed);
            return h;
        }
        seed = std::move(next);
    }
}

AbelianStructure abelianization(const Presentation& pres) {
    Subgroup gp = derived_subgroup(pres);
    // G' = <a^d>: quotient representatives are a^i b^j with i < d
    i64 d = pres.a_order();
    for (const auto& e : gp.elements)
        if (e.i != 0) d = std::min(d, e.i);
    if (static_cast<i64>(gp.elements.size()) * d != pres.a_order() ||
        std::any_of(gp.elements.begin(), gp.elements.end(),
                    [&](const GroupElement& e) { return e.j != 0 || e.i % d != 0; }))
        throw NotMetacyclic("abelianization: derived subgroup is not a power of a");
    if (d * pres.b_order() > (i64{1} << 20))
        throw TooLarge("abelianization: quotient too large");

    auto canon = [&](const GroupElement& x) { return make_element(pres, x.i % d, x.j); };
    std::vector<i64> orders;
    for (i64 i = 0; i < d; ++i)
        for (i64 j = 0; j < pres.b_order(); ++j) {
            GroupElement x = make_element(pres, i, j);
            GroupElement cur = x;
            i64 o = 1;
            while (!(canon(cur) == identity(pres))) {
                cur = mul(cur, x);
                ++o;
            }
            orders.push_back(o);
        }
    AbelianStructure st;
    st.divisors = divisors_from_orders(orders);
    return st;
}

Subgroup named_subgroup(const Presentation& pres, SubgroupTag tag) {
    if (pres.m != 2) throw BadTag("named_subgroup: the six named subgroups require m = 2");
    Subgroup gp = derived_subgroup(pres);
    GroupElement a = gen_a(pres), b = gen_b(pres);
    std::vector<GroupElement> gens;
    i64 want_index = 0;
    switch (tag) {
        case SubgroupTag::H12: gens = {b}; want_index = 2; break;
        case SubgroupTag::H22: gens = {mul(a, b)}; want_index = 2; break;
        case SubgroupTag::H32: gens = {a, mul(b, b)}; want_index = 2; break;
        case SubgroupTag::H14: gens = {a}; want_index = 4; break;
        case SubgroupTag::H24: gens = {mul(a, mul(b, b))}; want_index = 4; break;
        case SubgroupTag::H34: gens = {mul(b, b)}; want_index = 4; break;
        default: throw BadTag("named_subgroup: unknown tag");
    }
    for (const auto& e : gp.generators) gens.push_back(e);
    Subgroup h = subgroup_from_generators(pres, gens, tag);
    if (h.order() * want_index != pres.group_order())
        throw NotMetacyclic("named_subgroup: subgroup has unexpected index");
    return h;
}

bool is_normal(const Presentation& pres, const Subgroup& h) {
    for (const auto& g : {gen_a(pres), gen_b(pres)}) {
        GroupElement gi = inverse(g);
        for (const auto& x : h.elements)
            if (!h.contains(mul(mul(gi, x), g))) return false;
    }
    return true;
}

namespace {

TransferImage transfer_with_reps(const Presentation& pres, const Subgroup& h,
                                 const GroupElement& g,
                                 const std::vector<GroupElement>& hderived,
                                 u64 rep_seed) {
    // subgroup <g> H
    std::set<GroupElement> gh;
    {
        GroupElement cur = identity(pres);
        do {
            for (const auto& x : h.elements) gh.insert(mul(cur, x));
            cur = mul(cur, g);
        } while (!(cur == identity(pres)));
    }
    i64 f = static_cast<i64>(gh.size()) / h.order();

    // coset representatives of G / <g>H; rep_seed = 0 picks lexicographic ones
    std::vector<GroupElement> reps;
    std::set<GroupElement> covered;
    u64 state = rep_seed;
    for (const auto& x : all_elements(pres)) {
        if (covered.count(x)) continue;
        std::vector<GroupElement> coset;
        for (const auto& s : gh) {
            GroupElement y = mul(x, s);
            if (covered.insert(y).second) coset.push_back(y);
        }
        if (rep_seed == 0)
            reps.push_back(x);
        else
            reps.push_back(coset[splitmix(state) % coset.size()]);
    }

    GroupElement gf = pow(g, f);
    GroupElement prod = identity(pres);
    for (const auto& x : reps) {
        GroupElement factor = mul(mul(inverse(x), gf), x);
        if (!h.contains(factor))
            throw NotNormal("transfer: conjugated power escapes the subgroup");
        prod = mul(prod, factor);
    }

    TransferImage out;
    std::set<GroupElement> coset;
    for (const auto& d : hderived) coset.insert(mul(prod, d));
    out.coset.assign(coset.begin(), coset.end());
    out.rep = out.coset.front();
    out.trivial = coset.count(identity(pres)) > 0;
    return out;
}

} // namespace

TransferImage transfer(const Presentation& pres, const Subgroup& h, const GroupElement& g) {
    require_same(pres, g.pres, "transfer");
    require_same(pres, h.pres, "transfer");
    if (!is_normal(pres, h)) throw NotNormal("transfer: subgroup is not normal");
    std::vector<GroupElement> hderived = derived_of_elements(pres, h.elements);

    TransferImage first = transfer_with_reps(pres, h, g, hderived, 0);
    // the image may not depend on the representative choice
    u64 seed = 0x5851f42d4c957f2dull ^ (static_cast<u64>(g.i) << 24) ^ static_cast<u64>(g.j)
             ^ (static_cast<u64>(h.order()) << 40);
    TransferImage redo = transfer_with_reps(pres, h, g, hderived, seed | 1);
    if (!(redo.coset == first.coset))
        throw std::logic_error("transfer: image depends on coset representatives");
    return first;
}

TransferKernel transfer_kernel(const Presentation& pres, const Subgroup& h) {
    Subgroup gp = derived_subgroup(pres);
    TransferKernel out;
    std::set<GroupElement> covered;
    for (const auto& x : all_elements(pres)) {
        if (covered.count(x)) continue;
        std::vector<GroupElement> coset;
        for (const auto& d : gp.elements) {
            GroupElement y = mul(x, d);
            if (covered.insert(y).second) coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        TransferImage im = transfer(pres, h, x);
        if (im.trivial) out.coset_reps.push_back(coset.front());
    }
    out.order = static_cast<i64>(out.coset_reps.size());
    return out;
}

Classification classify(const Presentation& pres) {
    u64 mask = mask_of(pres.n);
    i64 q = pres.q;
    if (q == 1) throw Abelian("classify: conjugation is trivial");
    if (pres.m < 2) throw NotMetacyclic("classify: G/G' is not of type (2, 2^m) with m > 1");
    Classification out;
    // |G'| = 2^(n - v2(q-1)) = 2^(n-1) here, so the modular shape means n = 2
    out.modular = (pres.n == 2);
    if (q == static_cast<i64>(mask)) {
        out.type = GroupType::type1;
        return out;
    }
    i64 qp1 = static_cast<i64>((static_cast<u64>(q) + 1) & mask);
    int s = 0;
    while (((qp1 >> s) & 1) == 0) ++s;
    if (s > 1 && s < pres.n) {
        out.type = GroupType::type3;
        return out;
    }
    throw NotMetacyclic("classify: presentation matches none of the four templates");
}

BruteForceOracle::BruteForceOracle(const Presentation& pres) : pres_(pres) {
    if (pres.n + pres.m > 12) throw TooLarge("brute-force oracle: group larger than 2^12");
    mask_ = static_cast<i64>(mask_of(pres.n));
    jmod_ = pres.b_order();
    size_ = pres.group_order();
    const i64 an = pres.a_order();
    table_.assign(static_cast<size_t>(size_) * static_cast<size_t>(size_), 0);
    // index of b^j a^i is j * 2^n + i; multiply by pushing a past b with ab -> b a^q
    for (i64 jx = 0; jx < jmod_; ++jx)
        for (i64 ix = 0; ix < an; ++ix) {
            i64 x = jx * an + ix;
            for (i64 jy = 0; jy < jmod_; ++jy) {
                i64 cur = ix;
                for (i64 step = 0; step < jy; ++step)
                    cur = static_cast<i64>((static_cast<u64>(cur) * static_cast<u64>(pres.q)) & static_cast<u64>(mask_));
                for (i64 iy = 0; iy < an; ++iy) {
                    i64 j = (jx + jy) % jmod_;
                    i64 i = (cur + iy) & mask_;
                    table_[static_cast<size_t>(x * size_ + jy * an + iy)] = static_cast<u32>(j * an + i);
                }
            }
        }
    inv_.assign(static_cast<size_t>(size_), 0);
    for (i64 x = 0; x < size_; ++x) {
        bool found = false;
        for (i64 y = 0; y < size_; ++y)
            if (mul_idx(x, y) == 0) {
                inv_[static_cast<size_t>(x)] = static_cast<u32>(y);
                found = true;
                break;
            }
        if (!found) throw NotMetacyclic("brute-force oracle: element without inverse");
    }
}

i64 BruteForceOracle::pow_idx(i64 x, i64 e) const {
    i64 acc = 0;
    i64 base = e < 0 ? inv_idx(x) : x;
    u64 k = static_cast<u64>(e < 0 ? -e : e);
    while (k) {
        if (k & 1) acc = mul_idx(acc, base);
        base = mul_idx(base, base);
        k >>= 1;
    }
    return acc;
}

i64 BruteForceOracle::idx_from_normal_form(const GroupElement& e) const {
    require_same(pres_, e.pres, "idx_from_normal_form");
    // a^i b^j = b^j a^(i q^j)
    i64 cur = e.i;
    for (i64 step = 0; step < e.j; ++step)
        cur = static_cast<i64>((static_cast<u64>(cur) * static_cast<u64>(pres_.q)) & static_cast<u64>(mask_));
    return e.j * pres_.a_order() + cur;
}

GroupElement BruteForceOracle::normal_form_from_idx(i64 idx) const {
    i64 an = pres_.a_order();
    i64 j = idx / an, ib = idx % an;
    i64 qinv = inv_odd_pow2(pres_.q, pres_.n);
    i64 cur = ib;
    for (i64 step = 0; step < j; ++step)
        cur = static_cast<i64>((static_cast<u64>(cur) * static_cast<u64>(qinv)) & static_cast<u64>(mask_));
    return make_element(pres_, cur, j);
}

bool BruteForceOracle::is_latin_square() const {
    std::vector<char> seen(static_cast<size_t>(size_));
    for (i64 x = 0; x < size_; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (i64 y = 0; y < size_; ++y) seen[static_cast<size_t>(mul_idx(x, y))] = 1;
        if (std::count(seen.begin(), seen.end(), char(1)) != size_) return false;
        std::fill(seen.begin(), seen.end(), 0);
        for (i64 y = 0; y < size_; ++y) seen[static_cast<size_t>(mul_idx(y, x))] = 1;
        if (std::count(seen.begin(), seen.end(), char(1)) != size_) return false;
    }
    return true;
}

std::vector<i64> BruteForceOracle::closure_idx(std::vector<i64> seed) const {
    std::set<i64> out;
    out.insert(0);
    std::vector<i64> frontier = {0};
    for (i64 s : seed)
        if (out.insert(s).second) frontier.push_back(s);
    while (!frontier.empty()) {
        std::vector<i64> next;
        for (i64 x : frontier)
            for (i64 s : seed) {
                i64 y = mul_idx(x, s);
                if (out.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {out.begin(), out.end()};
}

std::vector<i64> BruteForceOracle::derived_idx() const {
    std::set<i64> comms;
    for (i64 x = 0; x < size_; ++x)
        for (i64 y = 0; y < size_; ++y)
            comms.insert(mul_idx(mul_idx(inv_idx(x), inv_idx(y)), mul_idx(x, y)));
    return closure_idx({comms.begin(), comms.end()});
}

std::vector<i64> BruteForceOracle::derived_within_idx(const std::vector<i64>& h) const {
    std::set<i64> comms;
    for (i64 x : h)
        for (i64 y : h)
            comms.insert(mul_idx(mul_idx(inv_idx(x), inv_idx(y)), mul_idx(x, y)));
    return closure_idx({comms.begin(), comms.end()});
}

AbelianStructure BruteForceOracle::abelianization() const {
    std::vector<i64> der = derived_idx();
    std::vector<i64> repof(static_cast<size_t>(size_), -1);
    for (i64 x = 0; x < size_; ++x) {
        if (repof[static_cast<size_t>(x)] >= 0) continue;
        i64 r = x;
        for (i64 d : der) r = std::min(r, mul_idx(x, d));
        for (i64 d : der) repof[static_cast<size_t>(mul_idx(x, d))] = r;
    }
    std::vector<i64> orders;
    for (i64 x = 0; x < size_; ++x) {
        if (repof[static_cast<size_t>(x)] != x) continue;
        i64 cur = x, o = 1;
        while (repof[static_cast<size_t>(cur)] != 0) {
            cur = mul_idx(cur, x);
            ++o;
        }
        orders.push_back(o);
    }
    AbelianStructure st;
    st.divisors = divisors_from_orders(orders);
    return st;
}

std::vector<i64> BruteForceOracle::transfer_coset_idx(const std::vector<i64>& h, i64 g) const {
    std::set<i64> hset(h.begin(), h.end());
    std::set<i64> gh;
    {
        i64 cur = 0;
        do {
            for (i64 x : h) gh.insert(mul_idx(cur, x));
            cur = mul_idx(cur, g);
        } while (cur != 0);
    }
    i64 f = static_cast<i64>(gh.size()) / static_cast<i64>(h.size());
    i64 gf = pow_idx(g, f);

    std::vector<char> covered(static_cast<size_t>(size_), 0);
    i64 prod = 0;
    for (i64 x = 0; x < size_; ++x) {
        if (covered[static_cast<size_t>(x)]) continue;
        for (i64 s : gh) covered[static_cast<size_t>(mul_idx(x, s))] = 1;
        i64 factor = mul_idx(mul_idx(inv_idx(x), gf), x);
        if (!hset.count(factor))
            throw NotNormal("oracle transfer: conjugated power escapes the subgroup");
        prod = mul_idx(prod, factor);
    }
    std::set<i64> coset;
    for (i64 d : derived_within_idx(h)) coset.insert(mul_idx(prod, d));
    return {coset.begin(), coset.end()};
}

i64 BruteForceOracle::transfer_kernel_order(const std::vector<i64>& h) const {
    std::vector<i64> der = derived_idx();
    std::vector<char> covered(static_cast<size_t>(size_), 0);
    i64 count = 0;
    for (i64 x = 0; x < size_; ++x) {
        if (covered[static_cast<size_t>(x)]) continue;
        for (i64 d : der) covered[static_cast<size_t>(mul_idx(x, d))] = 1;
        std::vector<i64> img = transfer_coset_idx(h, x);
        if (std::binary_search(img.begin(), img.end(), i64{0})) ++count;
    }
    return count;
}

} // namespace classtower
