#include "classtower/multiquad.hpp"

#include <algorithm>

#include "classtower/quadfield.hpp"

namespace classtower {

namespace {

void require_same_field(const MultiQuadElem& a, const MultiQuadElem& b, const char* who) {
    if (a.p != b.p) throw MismatchedDiscriminant(std::string(who) + ": elements of different fields");
}

/* Exact sign of x + y*sqrt(2) for rational x, y. */
int sign_q2(const mpq_class& x, const mpq_class& y) {
    int sx = sgn(x), sy = sgn(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    mpq_class d = x * x - 2 * y * y;
    return sgn(d) > 0 ? sx : sy;
}

/* Exact sign of (A + B*sqrt2) + (C + D*sqrt2)*sqrt(p). */
int sign_q2p(u64 p, const mpq_class& A, const mpq_class& B, const mpq_class& C,
             const mpq_class& D) {
    int sx = sign_q2(A, B);
    int sy = sign_q2(C, D);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // compare X^2 against p Y^2 inside Q(sqrt 2)
    mpq_class x2a = A * A + 2 * B * B, x2b = 2 * A * B;
    mpq_class y2a = C * C + 2 * D * D, y2b = 2 * C * D;
    mpq_class pl = static_cast<unsigned long>(p);
    int sd = sign_q2(x2a - pl * y2a, x2b - pl * y2b);
    return sd > 0 ? sx : sy;
}

size_t decimal_digits(const mpq_class& q) {
    return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 10),
                    mpz_sizeinbase(q.get_den_mpz_t(), 10));
}

size_t height_digits(const MultiQuadElem& u) {
    size_t h = 1;
    for (const auto& q : u.c) h = std::max(h, decimal_digits(q));
    return h;
}

constexpr size_t kHeightCapDigits = 200;

mpz_class isqrt_z(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace

MultiQuadElem make_mq(u64 p, mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3) {
    if (p < 3) throw ZeroInput("make_mq: bad field parameter");
    MultiQuadElem e;
    e.p = p;
    e.c = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
    for (auto& q : e.c) {
        q.canonicalize();
        if (mpz_class(4) % q.get_den() != 0)
            throw ZeroInput("make_mq: coordinate denominator does not divide 4");
    }
    return e;
}

MultiQuadElem mq_add(const MultiQuadElem& a, const MultiQuadElem& b) {
    require_same_field(a, b, "mq_add");
    MultiQuadElem r;
    r.p = a.p;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

MultiQuadElem mq_neg(const MultiQuadElem& a) {
    MultiQuadElem r;
    r.p = a.p;
    for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
    return r;
}

MultiQuadElem mq_mul(const MultiQuadElem& a, const MultiQuadElem& b) {
    require_same_field(a, b, "mq_mul");
    const mpq_class P = static_cast<unsigned long>(a.p);
    const auto& x = a.c;
    const auto& y = b.c;
    MultiQuadElem r;
    r.p = a.p;
    r.c[0] = x[0] * y[0] + 2 * x[1] * y[1] + P * x[2] * y[2] + 2 * P * x[3] * y[3];
    r.c[1] = x[0] * y[1] + x[1] * y[0] + P * (x[2] * y[3] + x[3] * y[2]);
    r.c[2] = x[0] * y[2] + x[2] * y[0] + 2 * (x[1] * y[3] + x[3] * y[1]);
    r.c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    for (auto& q : r.c) q.canonicalize();
    return r;
}

std::array<int, 4> embedding_signs(const MultiQuadElem& u) {
    if (u.is_zero()) throw ZeroInput("embedding_signs: zero element");
    std::array<int, 4> out{};
    int idx = 0;
    for (int s2 : {+1, -1})
        for (int sp : {+1, -1}) {
            // sigma(u) = (c0 + s2 c1 sqrt2) + sp (c2 + s2 c3 sqrt2) sqrt(p)
            out[idx++] = sign_q2p(u.p, u.c[0], s2 * u.c[1], sp * u.c[2], sp * s2 * u.c[3]);
        }
    return out;
}

SquareTestResult is_square_in_F(const MultiQuadElem& u) {
    if (u.is_zero()) throw ZeroInput("is_square_in_F: zero element");
    if (height_digits(u) > kHeightCapDigits)
        throw PrecisionExhausted("is_square_in_F: coordinate height beyond cap");

    auto signs = embedding_signs(u);
    if (std::any_of(signs.begin(), signs.end(), [](int s) { return s <= 0; }))
        return {};

    // clear denominators: 4u = A0 + A1 sqrt2 + A2 sqrtp + A3 sqrt2p
    std::array<mpz_class, 4> A;
    for (int i = 0; i < 4; ++i) {
        mpq_class t = 4 * u.c[i];
        t.canonicalize();
        A[i] = t.get_num();
    }
    const unsigned long p = static_cast<unsigned long>(u.p);
    const std::array<std::array<int, 3>, 4> emb = {{{+1, +1, +1}, {+1, -1, -1}, {-1, +1, -1}, {-1, -1, +1}}};

    // Bracket each sqrt(sigma_i(u)) S between integers; the bracket width stays
    // bounded while S doubles, so every candidate coordinate of 4y is eventually
    // pinned to at most one integer. A pinned candidate is settled by exact
    // squaring and an empty bracket rules its sign pattern out for good.
    size_t bits = 192 + 8 * height_digits(u);
    for (int iter = 0; iter < 10; ++iter, bits *= 2) {
        const mpz_class S = mpz_class(1) << bits;
        const mpz_class S2 = S * S;
        const std::array<mpz_class, 3> rt = {isqrt_z(2 * S2), isqrt_z(p * S2),
                                             isqrt_z(2 * p * S2)};

        std::array<mpz_class, 4> wlo, whi; // sqrt(sigma_i(u)) S in [wlo, whi]
        for (int i = 0; i < 4; ++i) {
            mpz_class vlo = A[0] * S, vhi = vlo; // 4 sigma_i(u) S in [vlo, vhi]
            for (int j = 0; j < 3; ++j) {
                mpz_class term = emb[i][j] * A[j + 1];
                vlo += term * rt[j] + (term < 0 ? term : 0);
                vhi += term * rt[j] + (term > 0 ? term : 0);
            }
            mpz_class xlo = vlo * S, xhi = vhi * S;
            mpz_fdiv_q_ui(xlo.get_mpz_t(), xlo.get_mpz_t(), 4);
            mpz_cdiv_q_ui(xhi.get_mpz_t(), xhi.get_mpz_t(), 4);
            if (xlo < 0) xlo = 0; // exact signs say sigma_i(u) > 0
            wlo[i] = isqrt_z(xlo);
            whi[i] = isqrt_z(xhi) + 1;
        }

        bool need_more = false;
        for (int mask = 0; mask < 8; ++mask) {
            const std::array<int, 4> t = {+1, (mask & 1) ? -1 : +1,
                                          (mask & 2) ? -1 : +1, (mask & 4) ? -1 : +1};
            std::array<mpz_class, 4> n;
            bool reject = false, wide = false;
            for (int j = 0; j < 4 && !reject && !wide; ++j) {
                mpz_class clo = 0, chi = 0; // combination of the four square roots
                for (int i = 0; i < 4; ++i) {
                    const int coef = (j == 0 ? 1 : emb[i][j - 1]) * t[i];
                    if (coef > 0) { clo += wlo[i]; chi += whi[i]; }
                    else          { clo -= whi[i]; chi -= wlo[i]; }
                }
                mpz_class mlo, mhi; // coordinate j of 4y, scaled by S
                if (j == 0) {
                    mlo = clo;
                    mhi = chi;
                } else {
                    // divide by rt[j-1] <= sqrt(...) S < rt[j-1] + 1, rounding outward
                    const mpz_class den_lo = rt[j - 1], den_hi = rt[j - 1] + 1;
                    mpz_class num = clo * S;
                    mpz_fdiv_q(mlo.get_mpz_t(), num.get_mpz_t(),
                               (clo >= 0 ? den_hi : den_lo).get_mpz_t());
                    num = chi * S;
                    mpz_cdiv_q(mhi.get_mpz_t(), num.get_mpz_t(),
                               (chi >= 0 ? den_lo : den_hi).get_mpz_t());
                }
                mpz_class nlo, nhi;
                mpz_cdiv_q(nlo.get_mpz_t(), mlo.get_mpz_t(), S.get_mpz_t());
                mpz_fdiv_q(nhi.get_mpz_t(), mhi.get_mpz_t(), S.get_mpz_t());
                if (nlo > nhi) reject = true;       // no integer fits: pattern impossible
                else if (nlo < nhi) wide = true;    // more than one: precision too low
                else n[j] = nlo;
            }
            if (reject) continue;
            if (wide) { need_more = true; continue; }
            MultiQuadElem cand;
            cand.p = u.p;
            for (int j = 0; j < 4; ++j) {
                cand.c[j] = mpq_class(n[j]) / 4;
                cand.c[j].canonicalize();
            }
            if (mq_mul(cand, cand) == u) return {true, cand};
        }
        if (!need_more) return {}; // every sign pattern rejected or disproved exactly
    }
    throw PrecisionExhausted("is_square_in_F: rounding stayed ambiguous at precision cap");
}

SfuCase sfu_case(OddPrime p) {
    OddPrime p8 = OddPrime::one_mod_8(p.value);
    SfuCase out;
    out.norm_eps2p = fundamental_unit_norm(2 * p8.value);

    FundUnit e1 = fundamental_unit(p8.value);
    FundUnit e3 = fundamental_unit(2 * p8.value);
    MultiQuadElem eps1 = make_mq(p8.value, e1.x, 0, e1.y, 0);
    MultiQuadElem eps2 = make_mq(p8.value, 1, 1, 0, 0);
    MultiQuadElem eps3 = make_mq(p8.value, e3.x, 0, 0, e3.y);

    if (out.norm_eps2p == -1)
        out.sfu = {"sqrt(eps1*eps2*eps3)", "eps2", "eps3"};
    else
        out.sfu = {"eps1", "eps2", "sqrt(eps3)"};

    MultiQuadElem prod = mq_mul(mq_mul(eps1, eps2), eps3);
    if (height_digits(prod) > kHeightCapDigits || height_digits(eps3) > kHeightCapDigits) {
        out.norm_only = true;
        return out;
    }
    try {
        bool prod_square = is_square_in_F(prod).is_square;
        bool e3_square = is_square_in_F(eps3).is_square;
        if (out.norm_eps2p == -1) {
            out.square_confirmed = prod_square;
            out.exclusivity_ok = !e3_square;
        } else {
            out.square_confirmed = e3_square;
            out.exclusivity_ok = !prod_square;
        }
    } catch (const PrecisionExhausted&) {
        out.norm_only = true;
    }
    return out;
}

i64 q_index_k(OddPrime p) {
    OddPrime p8 = OddPrime::one_mod_8(p.value);
    return fundamental_unit_norm(2 * p8.value) == 1 ? 2 : 1;
}

i64 capitulation_count_kstar(OddPrime p) {
    OddPrime p8 = OddPrime::one_mod_8(p.value);
    return fundamental_unit_norm(2 * p8.value) == -1 ? 2 : 4;
}

} // namespace classtower
