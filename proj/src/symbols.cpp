#include "classtower/symbols.hpp"

#include <cstdlib>

#include "classtower/represent.hpp"

namespace classtower {

namespace {

Sign sign_of_unit_residue(u64 v, u64 p, const char* who) {
    if (v == 1) return Sign::plus;
    if (v == p - 1) return Sign::minus;
    throw InconsistentSymbols(std::string(who) + ": residue power is not +-1");
}

/* Arithmetic in F_q[T]/(T^2 - 2) for inert rational primes q. */
struct Fq2 {
    u64 c0, c1;
};

Fq2 fq2_mul(const Fq2& x, const Fq2& y, u64 q) {
    u64 a = mul_mod(x.c0, y.c0, q);
    u64 b = mul_mod(x.c1, y.c1, q);
    u64 c0 = (a + mul_mod(2 % q, b, q)) % q;
    u64 c1 = (mul_mod(x.c0, y.c1, q) + mul_mod(x.c1, y.c0, q)) % q;
    return {c0, c1};
}

Fq2 fq2_pow(Fq2 base, u128 e, u64 q) {
    Fq2 acc{1, 0};
    while (e) {
        if (e & 1) acc = fq2_mul(acc, base, q);
        base = fq2_mul(base, base, q);
        e >>= 1;
    }
    return acc;
}

u64 reduce_coeff(i64 v, u64 m) {
    i64 r = v % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

/* Quadratic residue symbol in the residue field of the odd prime l. */
Sign symbol_at_odd_prime(const QuadInt2& x, const QuadInt2& l) {
    if (l.b == 0) {
        // rational l = +-q, prime in Z[sqrt 2] iff 2 is not a square mod q
        u64 q = static_cast<u64>(std::abs(l.a));
        if (q < 3 || !is_prime(q)) throw NotPrime("hilbert_symbol_odd: rational l is not an odd prime");
        if (jacobi(2, q) != -1) throw NotPrime("hilbert_symbol_odd: rational l splits in Z[sqrt 2]");
        Fq2 img{reduce_coeff(x.a, q), reduce_coeff(x.b, q)};
        if (img.c0 == 0 && img.c1 == 0) throw DivisibleByPi("symbol: argument divisible by l");
        u128 e = (static_cast<u128>(q) * q - 1) / 2;
        Fq2 r = fq2_pow(img, e, q);
        if (r.c1 != 0) throw InconsistentSymbols("symbol: power not scalar in residue field");
        return sign_of_unit_residue(r.c0, q, "symbol");
    }
    i64 n = l.norm();
    u64 p = static_cast<u64>(std::abs(n));
    if (p < 3 || !is_prime(p)) throw NotPrime("symbol: l does not have odd prime norm");
    ResidueEmbedding emb = embedding_for(l);
    u64 img = emb.map(x);
    if (img == 0) throw DivisibleByPi("symbol: argument divisible by pi");
    u64 r = mod_pow(static_cast<i64>(img), (p - 1) / 2, p);
    return sign_of_unit_residue(r, p, "symbol");
}

/* Hilbert symbol of (-pi, u) at one real place, from the two signs. */
Sign real_place_hilbert(Sign a, Sign b) {
    return (a == Sign::minus && b == Sign::minus) ? Sign::minus : Sign::plus;
}

} // namespace

i64 QuadInt2::norm() const {
    i128 n = static_cast<i128>(a) * a - 2 * static_cast<i128>(b) * b;
    i128 lim = static_cast<i128>(1) << 62;
    if (n >= lim || n <= -lim) throw TooLarge("QuadInt2::norm: overflow");
    return static_cast<i64>(n);
}

u64 ResidueEmbedding::map(const QuadInt2& alpha) const {
    u64 av = reduce_coeff(alpha.a, p);
    u64 bv = reduce_coeff(alpha.b, p);
    return (av + mul_mod(bv, t, p)) % p;
}

QuadInt2 split_in_zsqrt2(OddPrime p) {
    u64 r = p.value % 8;
    if (r != 1 && r != 7) throw NoRepresentation("split_in_zsqrt2: 2 is not a square mod p");
    PellRep rep = pell_rep(p);
    QuadInt2 pi{static_cast<i64>(rep.c), 4 * static_cast<i64>(rep.d)};
    if (pi.norm() != static_cast<i64>(p.value))
        throw NoRepresentation("split_in_zsqrt2: norm check failed");
    return pi;
}

ResidueEmbedding embedding_for(const QuadInt2& pi) {
    i64 n = pi.norm();
    u64 p = static_cast<u64>(std::abs(n));
    if (p < 3 || !is_prime(p)) throw NotPrime("embedding_for: norm of pi is not an odd prime");
    u64 b = reduce_coeff(pi.b, p);
    if (b == 0) throw DivisibleByPi("embedding_for: sqrt(2) coefficient vanishes mod p");
    u64 a = reduce_coeff(pi.a, p);
    u64 t = mul_mod(p - a, inv_mod(b, p), p); // pi maps to 0: t = -a/b
    if (mul_mod(t, t, p) != 2 % p)
        throw InconsistentSymbols("embedding_for: t^2 != 2 mod p");
    return ResidueEmbedding{p, t};
}

Sign residue_symbol_sqrt2(const QuadInt2& alpha, const QuadInt2& pi) {
    i64 n = pi.norm();
    u64 p = static_cast<u64>(std::abs(n));
    if (p < 3 || !is_prime(p)) throw NotPrime("residue_symbol_sqrt2: N(pi) is not an odd prime");
    ResidueEmbedding emb = embedding_for(pi);
    u64 img = emb.map(alpha);
    if (img == 0) throw DivisibleByPi("residue_symbol_sqrt2: alpha divisible by pi");
    u64 r = mod_pow(static_cast<i64>(img), (p - 1) / 2, p);
    return sign_of_unit_residue(r, p, "residue_symbol_sqrt2");
}

Sign hilbert_symbol_odd(const QuadInt2& u, const QuadInt2& v, const QuadInt2& l,
                        int v_a, int v_b) {
    if (v_a < 0 || v_b < 0) throw BadFactorization("hilbert_symbol_odd: negative valuation");
    // verify the supplied unit parts really are coprime to l
    Sign su, sv;
    try {
        su = symbol_at_odd_prime(u, l);
        sv = symbol_at_odd_prime(v, l);
    } catch (const DivisibleByPi&) {
        throw BadFactorization("hilbert_symbol_odd: unit part divisible by l");
    }
    Sign out = Sign::plus;
    if ((v_a & 1) && (v_b & 1)) out = out * symbol_at_odd_prime(QuadInt2{-1, 0}, l);
    if (v_b & 1) out = out * su;
    if (v_a & 1) out = out * sv;
    return out;
}

std::pair<Sign, Sign> infinite_place_signs(const QuadInt2& u) {
    if (u.a == 0 && u.b == 0) throw ZeroInput("infinite_place_signs: zero element");
    auto emb_sign = [](i64 a, i64 b) -> Sign {
        if (b == 0) return a > 0 ? Sign::plus : Sign::minus;
        if (a == 0) return b > 0 ? Sign::plus : Sign::minus;
        if ((a > 0) == (b > 0)) return a > 0 ? Sign::plus : Sign::minus;
        // opposite signs: compare |a| with |b| sqrt(2) exactly
        i128 a2 = static_cast<i128>(a) * a;
        i128 b22 = 2 * static_cast<i128>(b) * b;
        return (a2 > b22) == (a > 0) ? Sign::plus : Sign::minus;
    };
    return {emb_sign(u.a, u.b), emb_sign(u.a, -u.b)};
}

UnitSymbolRecord lemma6_check(OddPrime p) {
    OddPrime p8 = OddPrime::one_mod_8(p.value);
    const Sign s2 = quartic_2_over_p(p8);
    const Sign sp = quartic_p_over_2(p8);

    QuadInt2 pi = split_in_zsqrt2(p8);
    QuadInt2 pi_conj = pi.conj();
    const QuadInt2 eps0{1, 1};
    const QuadInt2 two_plus{2, 1};
    const i64 c = pi.a;
    const i64 d = pi.b / 4;

    UnitSymbolRecord rec;
    Sign eps_sym = residue_symbol_sqrt2(eps0, pi);
    Sign two_sym = residue_symbol_sqrt2(two_plus, pi);
    rec.unit_identity = (eps_sym == s2 * sp);
    rec.two_plus_sqrt2 = (two_sym == sp);

    // Conjugate symbols must agree because N(eps0) = -1 and N(2+sqrt2) = 2 are
    // squares mod p, and the real places must carry the signs used to split the
    // product formula: -pi totally negative, s(eps0) = -1, s(2+sqrt2) = +1.
    bool conj_ok = residue_symbol_sqrt2(eps0, pi_conj) == eps_sym
                && residue_symbol_sqrt2(two_plus, pi_conj) == two_sym;
    auto mp = infinite_place_signs(QuadInt2{-pi.a, -pi.b});
    bool neg_pi_ok = mp.first == Sign::minus && mp.second == Sign::minus;
    bool real_ok = true;
    for (const QuadInt2& uu : {eps0, two_plus}) {
        auto s = infinite_place_signs(uu);
        Sign su = s.first * s.second;
        Sign h1 = real_place_hilbert(mp.first, s.first);
        Sign h2 = real_place_hilbert(mp.second, s.second);
        real_ok = real_ok && (h1 == su * h2);
    }
    rec.product_formula = conj_ok && neg_pi_ok && real_ok;

    Sign dec = sign_from_int(jacobi(d, p8.value)) * sign_from_int(jacobi(4 * d - c, p8.value));
    rec.decomposition = (eps_sym == dec);
    return rec;
}

Cyclo8Result cyclo8_unit_symbols(OddPrime p) {
    OddPrime p8 = OddPrime::one_mod_8(p.value);
    const u64 pv = p8.value;
    Cyclo8Result out;
    out.roots = primitive_eighth_roots(p8);
    const Sign s2 = quartic_2_over_p(p8);
    const Sign sp = quartic_p_over_2(p8);
    out.expected = {sp, sp * s2, s2};

    auto sym = [&](u64 x) -> Sign {
        if (x % pv == 0) throw InconsistentSymbols("cyclo8_unit_symbols: unit image vanished");
        u64 r = mod_pow(static_cast<i64>(x % pv), (pv - 1) / 2, pv);
        return sign_of_unit_residue(r, pv, "cyclo8_unit_symbols");
    };
    for (size_t i = 0; i < 4; ++i) {
        u64 z = out.roots[i];
        u64 zinv = inv_mod(z, pv);
        u64 one_plus_w = ((z + zinv) % pv + 1) % pv; // eps0 with sqrt(2) -> z + z^{-1}
        out.triples[i] = {sym(z), sym(one_plus_w), sym(mul_mod(z, one_plus_w, pv))};
    }
    out.uniform = out.triples[1] == out.triples[0]
               && out.triples[2] == out.triples[0]
               && out.triples[3] == out.triples[0];
    out.matches = out.uniform && out.triples[0] == out.expected;
    return out;
}

NormGroupUnits norm_group_units(OddPrime p) {
    OddPrime p8 = OddPrime::one_mod_8(p.value);
    const Sign s2 = quartic_2_over_p(p8);
    const Sign sp = quartic_p_over_2(p8);

    Cyclo8Result table = cyclo8_unit_symbols(p8);
    if (!table.matches)
        throw InconsistentSymbols("norm_group_units: symbol table mismatch");

    // a unit is a norm iff its symbol at the primes above p is +1
    bool zeta8_norm = table.expected[0] == Sign::plus;
    bool eps0_norm = table.expected[1] == Sign::plus;
    bool mixed_norm = table.expected[2] == Sign::plus;

    NormGroupUnits out;
    if (s2 == Sign::plus && sp == Sign::plus) {
        if (!(zeta8_norm && eps0_norm && mixed_norm))
            throw InconsistentSymbols("norm_group_units: case row contradicts symbols");
        out.norm_subgroup = "<zeta8, eps0>";
        out.am_order = 8;
        out.rank = 3;
        return out;
    }
    if (s2 == Sign::minus && sp == Sign::minus) {
        if (!eps0_norm || zeta8_norm || mixed_norm)
            throw InconsistentSymbols("norm_group_units: case row contradicts symbols");
        out.norm_subgroup = "<i, eps0>";
    } else if (s2 == Sign::minus) { // (2/p)4 = -1, (p/2)4 = +1
        if (!zeta8_norm || eps0_norm || mixed_norm)
            throw InconsistentSymbols("norm_group_units: case row contradicts symbols");
        out.norm_subgroup = "<zeta8, eps0^2>";
    } else { // (2/p)4 = +1, (p/2)4 = -1
        if (!mixed_norm || zeta8_norm || eps0_norm)
            throw InconsistentSymbols("norm_group_units: case row contradicts symbols");
        out.norm_subgroup = "<i, eps0*zeta8>";
    }
    out.am_order = 4;
    out.rank = 2;
    return out;
}

} // namespace classtower
