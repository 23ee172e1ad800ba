#include "classtower/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

namespace classtower {

namespace {

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

i64 gcd3(i64 a, i64 b, i64 c) {
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

void check_form(const BQF& f) {
    if (f.disc() == 0) throw InvalidDiscriminant("form has square discriminant 0");
}

/* Smallest-prime-factor table, grown on demand. */
std::vector<u32>& spf_table(u64 upto) {
    static std::vector<u32> spf{0, 1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (spf.size() <= upto) {
        size_t n = std::max<size_t>({upto + 1, 2 * spf.size(), 1u << 17});
        spf.assign(n, 0);
        if (n > 1) spf[1] = 1;
        for (size_t i = 2; i < n; ++i) {
            if (spf[i] == 0)
                for (size_t j = i; j < n; j += i)
                    if (spf[j] == 0) spf[j] = static_cast<u32>(i);
        }
    }
    return spf;
}

int kronecker_at_prime(i64 D, u64 q) {
    if (q == 2) {
        if (D % 2 == 0) return 0;
        i64 r = D % 8;
        if (r < 0) r += 8;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    return jacobi(D, q);
}

/* chi_D(a) for a in [0, len) via complete multiplicativity. */
void sieve_character(i64 D, size_t len, std::vector<signed char>& chi) {
    chi.assign(len, 0);
    if (len > 1) chi[1] = 1;
    auto& spf = spf_table(len);
    for (size_t a = 2; a < len; ++a) {
        u32 s = spf[a];
        if (s == a)
            chi[a] = static_cast<signed char>(kronecker_at_prime(D, a));
        else
            chi[a] = static_cast<signed char>(chi[s] * chi[a / s]);
    }
}

} // namespace

i64 BQF::disc() const {
    i128 d = static_cast<i128>(b) * b - 4 * static_cast<i128>(a) * c;
    return static_cast<i64>(d);
}

bool is_reduced(const BQF& f) {
    i64 D = f.disc();
    if (D < 0) {
        if (f.a <= 0) return false;
        if (!(-f.a < f.b && f.b <= f.a && f.a <= f.c)) return false;
        if (f.b < 0 && (f.b == -f.a || f.a == f.c)) return false; // boundary forms take b >= 0
        return true;
    }
    if (f.a == 0 || f.c == 0) return false;
    i64 b = f.b;
    if (b <= 0) return false;
    if (static_cast<i128>(b) * b >= D) return false;
    i64 A = 2 * std::abs(f.a);
    // sqrt(D) - b < A < sqrt(D) + b, compared exactly
    if (static_cast<i128>(A + b) * (A + b) <= D) return false;
    if (A > b && static_cast<i128>(A - b) * (A - b) >= D) return false;
    return true;
}

namespace {

BQF reduce_imag(BQF f) {
    if (f.a <= 0 && f.c <= 0) throw InvalidDiscriminant("reduce: form is negative definite");
    if (f.a <= 0) { // rotate so the leading coefficient is positive
        std::swap(f.a, f.c);
        f.b = -f.b;
    }
    const i64 D = f.disc();
    for (;;) {
        // normalize b into (-a, a]
        i64 a2 = 2 * f.a;
        i64 r = ((f.b % a2) + a2) % a2; // [0, 2a)
        if (r > f.a) r -= a2;           // (-a, a]
        if (r != f.b) {
            f.b = r;
            f.c = static_cast<i64>((static_cast<i128>(r) * r - D) / (4 * static_cast<i128>(f.a)));
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.b < 0 && (f.a == f.c || f.b == -f.a)) f.b = -f.b;
        return f;
    }
}

/* One step along the cycle of an indefinite form. */
BQF rho_real(const BQF& f, i64 s /* = floor(sqrt D) */, i64 D) {
    i64 c = f.c;
    i64 ac = std::abs(c);
    i64 r;
    if (ac > s) {
        // choose r = -b (mod 2|c|) in (-|c|, |c|]
        i64 m = 2 * ac;
        r = ((-f.b) % m + m) % m;
        if (r > ac) r -= m;
    } else {
        // choose r = -b (mod 2|c|) in (s - 2|c|, s]
        i64 m = 2 * ac;
        r = s - (((s + f.b) % m + m) % m);
    }
    i64 cc = static_cast<i64>((static_cast<i128>(r) * r - D) / (4 * static_cast<i128>(c)));
    return BQF{c, r, cc};
}

BQF reduce_real(BQF f) {
    const i64 D = f.disc();
    u64 su = isqrt_u64(static_cast<u64>(D));
    if (static_cast<i64>(su) * static_cast<i64>(su) == D)
        throw InvalidDiscriminant("reduce: discriminant is a perfect square");
    i64 s = static_cast<i64>(su);
    for (int guard = 0; guard < 4096; ++guard) {
        if (is_reduced(f)) return f;
        if (f.c == 0) throw InvalidDiscriminant("reduce: degenerate indefinite form");
        f = rho_real(f, s, D);
    }
    throw InvalidDiscriminant("reduce: indefinite reduction did not terminate");
}

} // namespace

BQF reduce(BQF f) {
    check_form(f);
    i64 D = f.disc();
    if (D % 4 != 0 && ((D % 4) + 4) % 4 != 1)
        throw InvalidDiscriminant("reduce: discriminant != 0,1 (mod 4)");
    return D < 0 ? reduce_imag(f) : reduce_real(f);
}

BQF principal_form(i64 D) {
    if (D == 0) throw InvalidDiscriminant("principal_form: zero discriminant");
    i64 r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) throw InvalidDiscriminant("principal_form: D != 0,1 (mod 4)");
    i64 b = (r == 1) ? 1 : 0;
    i64 c = static_cast<i64>((static_cast<i128>(b) * b - D) / 4);
    return BQF{1, b, c};
}

BQF inverse(const BQF& f) {
    return reduce(BQF{f.a, -f.b, f.c});
}

namespace {

/* Find (x, y), gcd(x,y)=1, with g(x,y) coprime to n, preserving g's class. */
void coprime_vector(const BQF& g, i64 n, i64& x, i64& y) {
    i64 N = std::abs(n);
    if (N <= 1) { x = 1; y = 0; return; }
    // choose (x, y) mod each prime l | N, then CRT
    i64 M = 1;
    std::vector<std::pair<i64, std::pair<i64, i64>>> picks;
    i64 rest = N;
    for (i64 l = 2; l * l <= rest; ++l) {
        if (rest % l) continue;
        while (rest % l == 0) rest /= l;
        if (g.a % l != 0) picks.push_back({l, {1, 0}});
        else if (g.c % l != 0) picks.push_back({l, {0, 1}});
        else picks.push_back({l, {1, 1}}); // primitivity gives l not dividing b
    }
    if (rest > 1) {
        i64 l = rest;
        if (g.a % l != 0) picks.push_back({l, {1, 0}});
        else if (g.c % l != 0) picks.push_back({l, {0, 1}});
        else picks.push_back({l, {1, 1}});
    }
    x = 0; y = 0; M = 1;
    for (auto& [l, xy] : picks) {
        // CRT step: move (x,y) mod M to the pair that is xy mod l
        i64 Minv = static_cast<i64>(inv_mod(static_cast<u64>(((M % l) + l) % l), static_cast<u64>(l)));
        i64 tx = ((xy.first - x) % l + l) % l;
        i64 ty = ((xy.second - y) % l + l) % l;
        x += M * ((tx * Minv) % l);
        y += M * ((ty * Minv) % l);
        M *= l;
    }
    if (x == 0 && y == 0) { x = 1; y = 0; return; }
    // force gcd(x, y) = 1; shifting x by M keeps every residue choice
    for (int k = 0; k < 256; ++k) {
        if (std::gcd(std::abs(x), std::abs(y)) == 1) return;
        x += M;
    }
    throw NotPrimitive("compose: could not build a coprime representative");
}

} // namespace

BQF compose(const BQF& f, const BQF& g) {
    const i64 D = f.disc();
    if (g.disc() != D) throw MismatchedDiscriminant("compose: discriminants differ");
    if (D > 0) throw InvalidDiscriminant("compose: only definite forms are supported");
    if (gcd3(f.a, f.b, f.c) != 1 || gcd3(g.a, g.b, g.c) != 1)
        throw NotPrimitive("compose: form is imprimitive");

    BQF F = D < 0 ? reduce_imag(f) : f;

    // Replace g by an equivalent form whose leading coefficient is coprime to F.a.
    i64 x, y;
    coprime_vector(g, F.a, x, y);
    i64 u, w; // complete (x,y) to a determinant-1 matrix [[x,u],[y,w]]
    {
        i64 old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            i64 q = old_r / r;
            std::swap(old_r -= q * r, r);
            std::swap(old_s -= q * s, s);
            std::swap(old_t -= q * t, t);
        }
        // old_r = gcd = +-1 = old_s * x + old_t * y
        if (old_r < 0) { old_s = -old_s; old_t = -old_t; }
        u = -old_t;
        w = old_s;
    }
    i128 a2 = static_cast<i128>(g.a) * x * x + static_cast<i128>(g.b) * x * y + static_cast<i128>(g.c) * y * y;
    i128 b2 = 2 * (static_cast<i128>(g.a) * x * u + static_cast<i128>(g.c) * y * w)
            + static_cast<i128>(g.b) * (static_cast<i128>(x) * w + static_cast<i128>(y) * u);
    // concordant pair: B = F.b (mod 2 F.a), B = b2 (mod 2 a2), gcd(F.a, a2) = 1
    i64 a2l = static_cast<i64>(a2);
    i64 b2l = static_cast<i64>(b2 % (2 * a2));
    i64 diff = b2l - F.b;
    // both middle coefficients share D's parity
    if (diff % 2 != 0) throw MismatchedDiscriminant("compose: parity mismatch");
    i64 half = ((diff / 2) % a2l + a2l) % a2l;
    i64 fainv = static_cast<i64>(inv_mod(static_cast<u64>(((F.a % a2l) + a2l) % a2l), static_cast<u64>(a2l)));
    i64 t = static_cast<i64>((static_cast<i128>(half) * fainv) % a2l);
    i128 B = static_cast<i128>(F.b) + 2 * static_cast<i128>(F.a) * t;
    i128 A3 = static_cast<i128>(F.a) * a2l;
    i128 mod = 2 * A3;
    B %= mod;
    if (B < 0) B += mod;
    if (B > A3) B -= mod; // keep |B| small before reducing
    i128 C3 = (B * B - D) / (4 * A3);
    BQF h{static_cast<i64>(A3), static_cast<i64>(B), static_cast<i64>(C3)};
    return reduce(h);
}

BQF power(const BQF& f, u64 e) {
    BQF acc = principal_form(f.disc());
    BQF base = reduce(f);
    while (e) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<BQF> reduced_forms_imag(i64 D) {
    if (D >= 0) throw InvalidDiscriminant("reduced_forms_imag: D must be negative");
    if (((D % 4) + 4) % 4 > 1) throw InvalidDiscriminant("reduced_forms_imag: D != 0,1 (mod 4)");
    if (!is_fundamental_discriminant(D)) throw InvalidDiscriminant("reduced_forms_imag: D not fundamental");
    std::vector<BQF> out;
    i64 absD = -D;
    for (i64 b = absD & 1; 3 * b * b <= absD; b += 2) {
        i64 N = (b * b + absD) / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= N; ++a) {
            if (N % a) continue;
            i64 c = N / a;
            out.push_back(BQF{a, b, c});
            if (b != 0 && a != b && a != c) out.push_back(BQF{a, -b, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const BQF& l, const BQF& r) {
        return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c);
    });
    return out;
}

i64 reduced_form_count(i64 D) {
    if (D >= 0) throw InvalidDiscriminant("reduced_form_count: D must be negative");
    if (((D % 4) + 4) % 4 > 1) throw InvalidDiscriminant("reduced_form_count: D != 0,1 (mod 4)");
    i64 absD = -D;
    i64 count = 0;
    for (i64 b = absD & 1; 3 * b * b <= absD; b += 2) {
        i64 N = (b * b + absD) / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= N; ++a) {
            if (N % a) continue;
            i64 c = N / a;
            count += (b != 0 && a != b && a != c) ? 2 : 1;
        }
    }
    return count;
}

namespace {

/* Partition of the q-part from the counts of q^k-torsion elements. */
std::vector<i64> sylow_partition(const std::vector<BQF>& forms, const BQF& one, i64 q, int e) {
    std::vector<int> c(e + 1, 0); // c[k] = log_q #{f : f^(q^k) = 1}
    for (int k = 1; k <= e; ++k) {
        u64 qk = 1;
        for (int i = 0; i < k; ++i) qk *= static_cast<u64>(q);
        i64 cnt = 0;
        for (const auto& f : forms)
            if (power(f, qk) == one) ++cnt;
        int lg = 0;
        i64 t = cnt;
        while (t > 1) {
            if (t % q) throw InvalidDiscriminant("class_group_imag: torsion count not a q-power");
            t /= q;
            ++lg;
        }
        c[k] = lg;
    }
    std::vector<i64> factors;
    for (int k = 1; k <= e; ++k) {
        int rk = c[k] - c[k - 1];
        int rk1 = (k + 1 <= e) ? c[std::min(k + 1, e)] - c[k] : 0;
        int exact = rk - rk1; // cyclic factors of order exactly q^k
        for (int i = 0; i < exact; ++i) {
            i64 v = 1;
            for (int j = 0; j < k; ++j) v *= q;
            factors.push_back(v);
        }
    }
    return factors;
}

} // namespace

ImagClassGroup class_group_imag(i64 D) {
    auto forms = reduced_forms_imag(D);
    ImagClassGroup out;
    out.h = static_cast<i64>(forms.size());
    if (out.h == 1) return out;
    const BQF one = principal_form(D);

    // factor h
    std::map<i64, int> fac;
    i64 h = out.h;
    for (i64 q = 2; q * q <= h; ++q)
        while (h % q == 0) { ++fac[q]; h /= q; }
    if (h > 1) ++fac[h];

    // per-prime partitions, largest first
    std::vector<std::vector<i64>> per_prime;
    for (auto& [q, e] : fac) {
        auto part = sylow_partition(forms, one, q, e);
        std::sort(part.rbegin(), part.rend());
        per_prime.push_back(std::move(part));
    }
    size_t width = 0;
    for (auto& v : per_prime) width = std::max(width, v.size());
    std::vector<i64> divisors;
    for (size_t i = 0; i < width; ++i) {
        i64 d = 1;
        for (auto& v : per_prime)
            if (i < v.size()) d *= v[i];
        divisors.push_back(d);
    }
    std::sort(divisors.begin(), divisors.end());
    out.structure.divisors = divisors;
    if (out.structure.order() != out.h)
        throw InvalidDiscriminant("class_group_imag: structure order mismatch");
    return out;
}

bool is_squarefree(u64 m) {
    if (m == 0) return false;
    if (m % 4 == 0) return false;
    for (u64 d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        m /= d;
        if (m % d == 0) return false;
    }
    return true;
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 0 || D == 1) return false;
    i64 r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree(static_cast<u64>(std::abs(D)));
    if (r != 0) return false;
    i64 m = D / 4;
    i64 mr = ((m % 4) + 4) % 4;
    if (mr != 2 && mr != 3) return false;
    return is_squarefree(static_cast<u64>(std::abs(m)));
}

i64 class_number_imag_analytic(i64 D) {
    if (D >= 0) throw InvalidDiscriminant("class_number_imag_analytic: D must be negative");
    if (!is_fundamental_discriminant(D))
        throw InvalidDiscriminant("class_number_imag_analytic: D not fundamental");
    const i64 absD = -D;
    const i64 w = (D == -3) ? 6 : (D == -4) ? 4 : 2;

    std::vector<signed char> chi;
    sieve_character(D, static_cast<size_t>(absD), chi);

    // h = w * |sum a*chi(a)| / (2|D|); accumulate in 128-bit chunks, flush to mpz
    mpz_class total = 0;
    i128 chunk = 0;
    constexpr i64 kFlush = 1 << 20;
    for (i64 a = 1; a < absD; ++a) {
        chunk += static_cast<i128>(a) * chi[a];
        if ((a & (kFlush - 1)) == 0) {
            total += mpz_class(static_cast<long>(chunk / kFlush)) * kFlush
                   + static_cast<long>(chunk % kFlush);
            chunk = 0;
        }
    }
    {
        bool neg = chunk < 0;
        u128 mag = neg ? static_cast<u128>(-chunk) : static_cast<u128>(chunk);
        mpz_class part;
        mpz_import(part.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
        total += neg ? -part : part;
    }
    mpz_class num = w * abs(total);
    mpz_class den = 2 * mpz_class(static_cast<long>(absD));
    if (num % den != 0)
        throw InvalidDiscriminant("class_number_imag_analytic: character sum not divisible");
    mpz_class h = num / den;
    return static_cast<i64>(h.get_si());
}

namespace {

struct CFExpansion {
    std::vector<u64> partials; // a_0 .. a_l
    size_t period = 0;         // l
};

/* Continued fraction of (P0 + sqrt m)/Q0 through one full period. */
CFExpansion cf_expand(u64 m, u64 P0, u64 Q0) {
    constexpr size_t kCap = 1u << 20;
    CFExpansion cf;
    u64 sq = isqrt_u64(m);
    u64 P = P0, Q = Q0;
    u64 a = (P + sq) / Q;
    cf.partials.push_back(a);
    P = a * Q - P;
    Q = (m - P * P) / Q;
    const u64 anchorP = P, anchorQ = Q;
    for (size_t step = 1;; ++step) {
        if (step > kCap) throw PeriodOverflow("cf_expand: period exceeds cap");
        a = (P + sq) / Q;
        cf.partials.push_back(a);
        P = a * Q - P;
        Q = (m - P * P) / Q;
        if (P == anchorP && Q == anchorQ) {
            cf.period = step;
            return cf;
        }
    }
}

void check_unit_domain(u64 m) {
    if (m < 2) throw NotSquarefree("fundamental_unit: m must be >= 2");
    if (!is_squarefree(m)) throw NotSquarefree("fundamental_unit: m must be squarefree");
}

} // namespace

int fundamental_unit_norm(u64 m) {
    check_unit_domain(m);
    bool half = (m % 4 == 1);
    auto cf = cf_expand(m, half ? 1 : 0, half ? 2 : 1);
    return (cf.period % 2 == 0) ? +1 : -1;
}

FundUnit fundamental_unit(u64 m) {
    check_unit_domain(m);
    bool half = (m % 4 == 1);
    auto cf = cf_expand(m, half ? 1 : 0, half ? 2 : 1);

    // convergent over a_0 .. a_(l-1)
    mpz_class p_prev = 1, p = cf.partials[0];
    mpz_class q_prev = 0, q = 1;
    for (size_t i = 1; i < cf.period; ++i) {
        mpz_class a = static_cast<unsigned long>(cf.partials[i]);
        mpz_class pn = a * p + p_prev;
        mpz_class qn = a * q + q_prev;
        p_prev = p; p = pn;
        q_prev = q; q = qn;
    }

    FundUnit u;
    u.norm = (cf.period % 2 == 0) ? +1 : -1;
    if (half) {
        u.x = mpq_class(2 * p - q) / 2;
        u.y = mpq_class(q) / 2;
    } else {
        u.x = p;
        u.y = q;
    }
    u.x.canonicalize();
    u.y.canonicalize();
    mpq_class check = u.x * u.x - static_cast<long>(m) * u.y * u.y;
    if (check != u.norm)
        throw NoRoot("fundamental_unit: convergent does not solve the unit equation");
    return u;
}

i64 narrow_class_number_real(u64 m) {
    check_unit_domain(m);
    i64 D = (m % 4 == 1) ? static_cast<i64>(m) : 4 * static_cast<i64>(m);
    i64 s = static_cast<i64>(isqrt_u64(static_cast<u64>(D)));

    std::set<std::pair<i64, i64>> forms; // (a, b); c = (b^2 - D)/(4a)
    i64 bstart = (D % 2 == 0) ? 2 : 1;
    for (i64 b = bstart; b * b < D; b += 2) {
        i64 M = (D - b * b) / 4;
        auto in_window = [&](i64 a) {
            i64 A = 2 * a;
            if (static_cast<i128>(A + b) * (A + b) <= D) return false;
            if (A > b && static_cast<i128>(A - b) * (A - b) >= D) return false;
            return true;
        };
        for (i64 a = 1; a * a <= M; ++a) {
            if (M % a) continue;
            for (i64 aa : {a, M / a}) {
                if (!in_window(aa)) continue;
                forms.insert({aa, b});
                forms.insert({-aa, b});
                if (aa == M / a) break;
            }
        }
    }

    i64 cycles = 0;
    std::set<std::pair<i64, i64>> seen;
    for (const auto& start : forms) {
        if (seen.count(start)) continue;
        ++cycles;
        std::pair<i64, i64> cur = start;
        do {
            seen.insert(cur);
            i64 a = cur.first, b = cur.second;
            i64 c = static_cast<i64>((static_cast<i128>(b) * b - D) / (4 * static_cast<i128>(a)));
            BQF next = rho_real(BQF{a, b, c}, s, D);
            if (!is_reduced(next))
                throw InvalidDiscriminant("narrow_class_number_real: cycle left the reduced set");
            cur = {next.a, next.b};
        } while (cur != start);
    }
    return cycles;
}

i64 class_number_real(u64 m) {
    i64 hplus = narrow_class_number_real(m);
    if (fundamental_unit_norm(m) == -1) return hplus;
    if (hplus % 2 != 0)
        throw InvalidDiscriminant("class_number_real: odd narrow class number with norm +1 unit");
    return hplus / 2;
}

double class_number_real_analytic_estimate(u64 m) {
    check_unit_domain(m);
    i64 D = (m % 4 == 1) ? static_cast<i64>(m) : 4 * static_cast<i64>(m);
    std::vector<signed char> chi;
    sieve_character(D, static_cast<size_t>(D), chi);
    double L = 0.0;
    const double pi = 3.14159265358979323846;
    for (i64 a = 1; a < D; ++a)
        if (chi[a]) L -= chi[a] * std::log(std::sin(pi * static_cast<double>(a) / static_cast<double>(D)));

    FundUnit u = fundamental_unit(m);
    mpf_class val = mpf_class(u.x, 256) + mpf_class(u.y, 256) * sqrt(mpf_class(static_cast<unsigned long>(m), 256));
    long ex;
    double mant = mpf_get_d_2exp(&ex, val.get_mpf_t());
    double log_eps = std::log(mant) + static_cast<double>(ex) * std::log(2.0);
    return L / (2.0 * log_eps);
}

int two_part(i64 h) {
    if (h <= 0) throw std::invalid_argument("two_part: argument must be positive");
    int n = 0;
    while (h % 2 == 0) { h /= 2; ++n; }
    return n;
}

mpq_class kuroda_rhs(int d, int kappa, int v, i64 q, i64 h1, i64 h2, i64 h3, i64 hk) {
    if (hk == 0) throw std::invalid_argument("kuroda_rhs: base class number is zero");
    int e = d - kappa - 2 - v;
    mpq_class pow2;
    if (e >= 0)
        pow2 = mpz_class(1) << e;
    else
        pow2 = mpq_class(1, mpz_class(1) << (-e));
    mpq_class out = pow2 * static_cast<long>(q) * static_cast<long>(h1) * static_cast<long>(h2)
                  * static_cast<long>(h3);
    out /= mpq_class(static_cast<long>(hk)) * static_cast<long>(hk);
    out.canonicalize();
    return out;
}

} // namespace classtower
