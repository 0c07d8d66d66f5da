#ifndef RITT_FACTOR_Q_HPP
#define RITT_FACTOR_Q_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <ritt/error.hpp>
#include <ritt/rational.hpp>
#include <ritt/upoly.hpp>

namespace ritt {

using UPolyQ = UPoly<Rational>;

/// Complete factorization of a univariate polynomial over a field:
/// p = unit * prod factor^multiplicity, every factor monic and irreducible.
template <class F>
struct UFactorization {
    F unit;
    std::vector<std::pair<UPoly<F>, unsigned>> factors;

    UPoly<F> expand() const
    {
        auto acc = UPoly<F>::constant(unit);
        for (const auto& [g, e] : factors)
            for (unsigned i = 0; i < e; ++i)
                acc = acc * g;
        return acc;
    }
};

namespace detail {

// ---------------------------------------------------------------------------
// Polynomials over a word-size prime field F_p (p < 2^31).
// ---------------------------------------------------------------------------

struct SmallField {
    std::uint64_t p;

    using Poly = std::vector<std::uint64_t>;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const
    {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

    static void trim(Poly& a)
    {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }

    Poly reduce(const std::vector<Integer>& z) const
    {
        Poly r;
        r.reserve(z.size());
        for (const auto& c : z) {
            Integer m = c % static_cast<unsigned long>(p);
            if (m < 0)
                m += static_cast<unsigned long>(p);
            r.push_back(m.get_ui());
        }
        trim(r);
        return r;
    }

    Poly pmul(const Poly& a, const Poly& b) const
    {
        if (a.empty() || b.empty())
            return {};
        std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
        }
        Poly r(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i)
            r[i] = static_cast<std::uint64_t>(acc[i] % p);
        trim(r);
        return r;
    }

    Poly psub(const Poly& a, const Poly& b) const
    {
        Poly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }

    std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const
    {
        if (a.size() < b.size())
            return {{}, a};
        const std::size_t db = b.size() - 1;
        const std::uint64_t il = inv(b.back());
        Poly q(a.size() - db, 0);
        for (std::size_t k = q.size(); k-- > 0;) {
            std::uint64_t c = mul(a[k + db], il);
            q[k] = c;
            if (c == 0)
                continue;
            const std::uint64_t nc = p - c;
            for (std::size_t j = 0; j <= db; ++j)
                a[k + j] = (a[k + j] + nc * b[j]) % p;
        }
        a.resize(db);
        trim(a);
        trim(q);
        return {q, a};
    }

    Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

    Poly monic(Poly a) const
    {
        if (a.empty())
            return a;
        const std::uint64_t il = inv(a.back());
        for (auto& x : a)
            x = mul(x, il);
        return a;
    }

    Poly gcd(Poly a, Poly b) const
    {
        while (!b.empty()) {
            Poly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(std::move(a));
    }

    /// (g, s, t) with s a + t b = g monic.
    std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b) const
    {
        Poly s0{1}, s1, t0, t1{1};
        while (!b.empty()) {
            auto [q, r] = divmod(a, b);
            a = std::move(b);
            b = std::move(r);
            auto s2 = psub(s0, pmul(q, s1));
            auto t2 = psub(t0, pmul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        const std::uint64_t il = inv(a.back());
        for (auto* v : {&a, &s0, &t0})
            for (auto& x : *v)
                x = mul(x, il);
        return {a, s0, t0};
    }

    Poly powmod(Poly base, Integer e, const Poly& m) const
    {
        Poly acc{1};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t()))
                acc = rem(pmul(acc, base), m);
            e >>= 1;
            if (e > 0)
                base = rem(pmul(base, base), m);
        }
        return acc;
    }

    Poly derivative(const Poly& a) const
    {
        if (a.size() <= 1)
            return {};
        Poly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i)
            r[i - 1] = mul(a[i], i % p);
        trim(r);
        return r;
    }

    /// Rows x^(i p) mod f, i < deg f: the Frobenius map as a matrix.
    std::vector<Poly> frobenius_rows(const Poly& f) const
    {
        const std::size_t n = f.size() - 1;
        std::vector<Poly> rows(n);
        rows[0] = Poly{1};
        if (n > 1)
            rows[1] = powmod(Poly{0, 1}, Integer(static_cast<unsigned long>(p)), f);
        for (std::size_t i = 2; i < n; ++i)
            rows[i] = rem(pmul(rows[i - 1], rows[1]), f);
        return rows;
    }

    /// h^p mod f given the Frobenius rows of f.
    Poly frobenius_apply(const Poly& h, const std::vector<Poly>& rows) const
    {
        std::vector<unsigned __int128> acc(rows.size(), 0);
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i] == 0)
                continue;
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                acc[j] += static_cast<unsigned __int128>(h[i]) * rows[i][j];
        }
        Poly r(acc.size());
        for (std::size_t j = 0; j < acc.size(); ++j)
            r[j] = static_cast<std::uint64_t>(acc[j] % p);
        trim(r);
        return r;
    }

    /// Distinct-degree factorization of a square-free monic f: pairs
    /// (product of all irreducible factors of degree d, d).
    std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) const
    {
        std::vector<std::pair<Poly, unsigned>> out;
        const Poly x{0, 1};
        auto rows = frobenius_rows(f);
        Poly h = x;
        for (unsigned d = 1; 2 * d <= f.size() - 1; ++d) {
            h = frobenius_apply(h, rows);
            Poly g = gcd(f, psub(h, x));
            if (g.size() > 1) {
                out.emplace_back(g, d);
                f = divmod(f, g).first;
                h = rem(h, f);
                if (2 * (d + 1) <= f.size() - 1)
                    for (auto& r : rows)
                        r = rem(r, f);
                rows.resize(f.size() - 1);
            }
        }
        if (f.size() > 1)
            out.emplace_back(f, static_cast<unsigned>(f.size() - 1));
        return out;
    }

    /// Split a product of irreducibles all of degree d (odd p).
    void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) const
    {
        if (g.size() - 1 == d) {
            out.push_back(g);
            return;
        }
        Integer e = 1;
        for (unsigned i = 0; i < d; ++i)
            e *= static_cast<unsigned long>(p);
        e = (e - 1) / 2;
        std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
        for (;;) {
            Poly a(g.size() - 1);
            for (auto& c : a)
                c = dist(rng);
            trim(a);
            if (a.size() <= 1)
                continue;
            Poly b = psub(powmod(a, e, g), Poly{1});
            Poly h = gcd(g, b);
            if (h.size() > 1 && h.size() < g.size()) {
                equal_degree(h, d, rng, out);
                equal_degree(monic(divmod(g, h).first), d, rng, out);
                return;
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Integer polynomials and Hensel lifting modulo p^k.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Integer>;

inline void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

struct ModRing {
    Integer m;

    Integer norm(const Integer& a) const
    {
        Integer r = a % m;
        if (r < 0)
            r += m;
        return r;
    }

    ZPoly reduce(ZPoly a) const
    {
        for (auto& x : a)
            x = norm(x);
        ztrim(a);
        return a;
    }

    // Kronecker packing: coefficients in [0, m) go into fixed-width limb
    // slots of one integer, so GMP's fast multiplication does the work.
    static Integer pack(const ZPoly& a, std::size_t limbs)
    {
        std::vector<mp_limb_t> buf(a.size() * limbs, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::size_t cnt = 0;
            mpz_export(&buf[i * limbs], &cnt, -1, sizeof(mp_limb_t), 0, 0, a[i].get_mpz_t());
        }
        Integer r;
        mpz_import(r.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
        return r;
    }

    ZPoly mul_packed(const ZPoly& a, const ZPoly& b) const
    {
        const std::size_t n = a.size() + b.size() - 1;
        const std::size_t bits = 2 * mpz_sizeinbase(m.get_mpz_t(), 2) + 64;
        const std::size_t limbs = (bits + 63) / 64;
        Integer prod = pack(a, limbs) * pack(b, limbs);
        std::vector<mp_limb_t> buf(n * limbs + 1, 0);
        std::size_t cnt = 0;
        mpz_export(buf.data(), &cnt, -1, sizeof(mp_limb_t), 0, 0, prod.get_mpz_t());
        ZPoly r(n);
        for (std::size_t i = 0; i < n; ++i) {
            mpz_import(r[i].get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, &buf[i * limbs]);
            mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
        }
        ztrim(r);
        return r;
    }

    ZPoly mul(const ZPoly& a, const ZPoly& b) const
    {
        if (a.empty() || b.empty())
            return {};
        if (std::min(a.size(), b.size()) >= 12) {
            const bool in_range = std::all_of(a.begin(), a.end(), [&](const Integer& x) { return x >= 0 && x < m; })
                && std::all_of(b.begin(), b.end(), [&](const Integer& x) { return x >= 0 && x < m; });
            if (in_range)
                return mul_packed(a, b);
            return mul_packed(reduce(a), reduce(b));
        }
        ZPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
        }
        return reduce(std::move(r));
    }

    ZPoly add(const ZPoly& a, const ZPoly& b) const
    {
        ZPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] += b[i];
        return reduce(std::move(r));
    }

    ZPoly sub(const ZPoly& a, const ZPoly& b) const
    {
        ZPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] -= b[i];
        return reduce(std::move(r));
    }

    static ZPoly truncated(ZPoly a, std::size_t n)
    {
        if (a.size() > n)
            a.resize(n);
        ztrim(a);
        return a;
    }

    /// Inverse of the power series c (c[0] = 1) modulo x^n, by Newton steps.
    ZPoly series_inverse(const ZPoly& c, std::size_t n) const
    {
        ZPoly inv{1};
        for (std::size_t prec = 1; prec < n;) {
            prec = std::min(2 * prec, n);
            ZPoly e = truncated(mul(truncated(c, prec), inv), prec);
            // inv * (2 - e)
            for (auto& x : e)
                x = x == 0 ? Integer(0) : Integer(m - x);
            if (e.empty())
                e.push_back(0);
            e[0] = norm(e[0] + 2);
            inv = truncated(mul(inv, e), prec);
        }
        return inv;
    }

    /// Division by a monic b.
    std::pair<ZPoly, ZPoly> divmod_monic(ZPoly a, const ZPoly& b) const
    {
        if (a.size() < b.size())
            return {{}, reduce(std::move(a))};
        const std::size_t db = b.size() - 1;
        const std::size_t nq = a.size() - db;
        if (nq >= 32 && db >= 32) {
            a = reduce(std::move(a));
            if (a.size() < b.size())
                return {{}, a};
            const std::size_t k = a.size() - db;
            ZPoly ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
            ZPoly qr = truncated(mul(truncated(ra, k), series_inverse(reduce(rb), k)), k);
            qr.resize(k, 0);
            ZPoly q(qr.rbegin(), qr.rend());
            ztrim(q);
            ZPoly r = sub(truncated(a, db), truncated(mul(q, b), db));
            return {q, r};
        }
        ZPoly q(nq, 0);
        for (std::size_t k = q.size(); k-- > 0;) {
            Integer c = norm(a[k + db]);
            q[k] = c;
            if (c == 0)
                continue;
            for (std::size_t j = 0; j <= db; ++j)
                mpz_submul(a[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        }
        a.resize(db);
        return {reduce(std::move(q)), reduce(std::move(a))};
    }
};

inline ZPoly lift_small(const SmallField::Poly& a)
{
    ZPoly r;
    for (auto c : a)
        r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

/// Lift f = g*h (mod p), h monic, s*g + t*h = 1 (mod p) to modulus >= target.
/// Returns lifted (g, h) modulo `modulus` (a power of p).
inline std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t,
                                          const Integer& p, const Integer& modulus)
{
    Integer m = p;
    while (m < modulus) {
        Integer m2 = m * m;
        if (m2 > modulus)
            m2 = modulus;
        ModRing R{m2};
        ZPoly e = R.sub(f, R.mul(g, h));
        auto [q, r] = R.divmod_monic(R.mul(s, e), h);
        ZPoly g2 = R.add(g, R.add(R.mul(t, e), R.mul(q, g)));
        ZPoly h2 = R.add(h, r);
        ZPoly b = R.sub(R.add(R.mul(s, g2), R.mul(t, h2)), ZPoly{1});
        auto [c, d] = R.divmod_monic(R.mul(s, b), h2);
        s = R.sub(s, d);
        t = R.sub(t, R.add(R.mul(t, b), R.mul(c, g2)));
        g = std::move(g2);
        h = std::move(h2);
        m = m2;
    }
    return {g, h};
}

/// Lift monic modular factors u of f (f = lc * prod u mod p) to `modulus`.
/// Every lifted factor is monic modulo `modulus`.
inline std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<SmallField::Poly>& u,
                                       const SmallField& fp, const Integer& modulus)
{
    if (u.size() == 1) {
        // f = lc * u: the monic lift is f / lc mod modulus.
        ModRing R{modulus};
        Integer il;
        Integer lc = R.norm(f.back());
        mpz_invert(il.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
        ZPoly r(f);
        for (auto& x : r)
            x *= il;
        return {R.reduce(std::move(r))};
    }
    const std::size_t k = u.size() / 2;
    SmallField::Poly left{fp.reduce(ZPoly{f.back()})}, right{1};
    for (std::size_t i = 0; i < k; ++i)
        left = fp.pmul(left, u[i]);
    for (std::size_t i = k; i < u.size(); ++i)
        right = fp.pmul(right, u[i]);
    auto [one, s, t] = fp.xgcd(left, right);
    const Integer p(static_cast<unsigned long>(fp.p));
    auto [g, h] = hensel_two(f, lift_small(left), lift_small(right), lift_small(s), lift_small(t), p, modulus);
    std::vector<SmallField::Poly> ul(u.begin(), u.begin() + static_cast<long>(k));
    std::vector<SmallField::Poly> ur(u.begin() + static_cast<long>(k), u.end());
    auto a = hensel_multi(g, ul, fp, modulus);
    auto b = hensel_multi(h, ur, fp, modulus);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Primitive integer polynomial with positive leading coefficient, associate
/// to p over Q.
inline ZPoly primitive_integer(const UPolyQ& p)
{
    Integer den = 1;
    for (const auto& c : p.coeffs())
        den = lcm(den, c.get_den());
    ZPoly z;
    for (const auto& c : p.coeffs())
        z.push_back(Integer(c * den));
    Integer g = 0;
    for (const auto& c : z)
        g = gcd(g, c);
    if (z.back() < 0)
        g = -g;
    for (auto& c : z)
        c /= g;
    return z;
}

inline UPolyQ to_upoly(const ZPoly& z)
{
    std::vector<Rational> v(z.begin(), z.end());
    return UPolyQ(std::move(v));
}

/// Exact division over Z: the quotient if b | a.
inline std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b)
{
    if (a.size() < b.size())
        return std::nullopt;
    if (b[0] != 0 && a[0] % b[0] != 0)
        return std::nullopt;
    ZPoly r(a);
    const std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        if (r[k + db] % b.back() != 0)
            return std::nullopt;
        Integer c = r[k + db] / b.back();
        q[k] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            r[k + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0)
            return std::nullopt;
    ztrim(q);
    return q;
}

inline bool is_small_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Primitive part with positive leading coefficient.
inline ZPoly zprimitive(ZPoly a)
{
    ztrim(a);
    if (a.empty())
        return a;
    Integer g = 0;
    for (const auto& c : a)
        g = gcd(g, c);
    if (a.back() < 0)
        g = -g;
    for (auto& c : a)
        c /= g;
    return a;
}

inline ZPoly zderivative(const ZPoly& a)
{
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * static_cast<unsigned long>(i));
    ztrim(r);
    return r;
}

/// Primitive gcd over Z: modular images for word-size primes combined by
/// CRT, accepted once a stable image divides both inputs.
inline ZPoly zgcd(ZPoly a, ZPoly b)
{
    a = zprimitive(std::move(a));
    b = zprimitive(std::move(b));
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    const Integer gamma = gcd(a.back(), b.back());
    ZPoly acc;
    Integer mod = 0;
    std::size_t deg = std::max(a.size(), b.size()) + 1;
    ZPoly last;
    for (std::uint64_t cand = 2147483647; cand > 3; cand -= 2) {
        if (!is_small_prime(cand))
            continue;
        const unsigned long pl = static_cast<unsigned long>(cand);
        if (mpz_divisible_ui_p(a.back().get_mpz_t(), pl) || mpz_divisible_ui_p(b.back().get_mpz_t(), pl))
            continue;
        SmallField fp{cand};
        auto g = fp.gcd(fp.reduce(a), fp.reduce(b));
        if (g.size() == 1)
            return ZPoly{1};
        if (g.size() > deg)
            continue;
        const std::uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), pl);
        for (auto& c : g)
            c = fp.mul(c, gm);
        if (g.size() < deg) {
            deg = g.size();
            acc = lift_small(g);
            mod = pl;
            last.clear();
            continue;
        }
        // x = acc + mod * ((g - acc) / mod mod p)
        const std::uint64_t im = fp.inv(mpz_fdiv_ui(mod.get_mpz_t(), pl));
        for (std::size_t i = 0; i < deg; ++i) {
            const std::uint64_t r = mpz_fdiv_ui(acc[i].get_mpz_t(), pl);
            const std::uint64_t t = fp.mul(fp.sub(g[i], r), im);
            mpz_addmul_ui(acc[i].get_mpz_t(), mod.get_mpz_t(), static_cast<unsigned long>(t));
        }
        mod *= pl;
        const Integer half = mod / 2;
        ZPoly sym(acc);
        for (auto& c : sym)
            if (c > half)
                c -= mod;
        sym = zprimitive(std::move(sym));
        if (sym == last && zdivide(a, sym) && zdivide(b, sym))
            return sym;
        last = std::move(sym);
    }
    throw ResourceError("modular gcd ran out of primes");
}

/// Square-free decomposition over Q (Yun) with modular gcds: monic pairs
/// (g_i, i), p = lead(p) * prod g_i^i.
inline std::vector<std::pair<UPolyQ, unsigned>> squarefree_decomposition_q(const UPolyQ& p)
{
    std::vector<std::pair<UPolyQ, unsigned>> out;
    if (p.degree() <= 0)
        return out;
    const ZPoly f = primitive_integer(p);
    const ZPoly df = zderivative(f);
    const ZPoly a = zgcd(f, df);
    ZPoly b = *zdivide(f, a);
    ZPoly c = *zdivide(df, a);
    auto minus_derivative = [](const ZPoly& x, const ZPoly& y) {
        ZPoly r(std::max(x.size(), y.size() > 0 ? y.size() - 1 : 0), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            r[i] += x[i];
        for (std::size_t i = 1; i < y.size(); ++i)
            r[i - 1] -= y[i] * static_cast<unsigned long>(i);
        ztrim(r);
        return r;
    };
    ZPoly d = minus_derivative(c, b);
    for (unsigned i = 1; b.size() > 1; ++i) {
        const ZPoly g = zgcd(b, d);
        if (g.size() > 1)
            out.emplace_back(to_upoly(g).monic(), i);
        b = *zdivide(b, g);
        // g is primitive, so g | d over Q gives an integral quotient.
        c = d.empty() ? ZPoly{} : *zdivide(d, g);
        d = minus_derivative(c, b);
    }
    return out;
}

/// True when gcd(f, f') = 1 modulo some prime not dividing the leading
/// coefficient, which certifies that f is square-free over Q. False means
/// undecided.
inline bool squarefree_mod_prime(const UPolyQ& q, int primes = 3)
{
    if (q.degree() <= 1)
        return true;
    const ZPoly f = primitive_integer(q);
    for (std::uint64_t cand = 1000003; primes > 0; cand += 2) {
        if (!is_small_prime(cand))
            continue;
        --primes;
        SmallField fp{cand};
        auto fm = fp.reduce(f);
        if (fm.size() != f.size())
            continue;
        if (fp.gcd(fm, fp.derivative(fm)).size() == 1)
            return true;
    }
    return false;
}

/// Irreducible factors over Z of a square-free primitive f with positive
/// leading coefficient, deg f >= 2 and f(0) != 0.
inline std::vector<ZPoly> factor_squarefree_z(ZPoly f, std::mt19937_64& rng)
{
    const std::size_t n = f.size() - 1;

    // Pick the prime (among a few good ones) with the fewest modular factors.
    std::optional<SmallField> best;
    std::vector<std::pair<SmallField::Poly, unsigned>> best_ddf;
    std::size_t best_count = 0;
    int good = 0;
    for (std::uint64_t cand = 101; good < 3 && cand < 100000; cand += 2) {
        if (!is_small_prime(cand))
            continue;
        SmallField fp{cand};
        auto fm = fp.reduce(f);
        if (fm.size() != f.size())
            continue;
        if (fp.gcd(fm, fp.derivative(fm)).size() != 1)
            continue;
        ++good;
        auto ddf = fp.distinct_degree(fp.monic(fm));
        std::size_t count = 0;
        for (const auto& [g, d] : ddf)
            count += (g.size() - 1) / d;
        if (!best || count < best_count) {
            best = fp;
            best_ddf = std::move(ddf);
            best_count = count;
        }
        if (count == 1)
            break;
    }
    if (!best)
        throw ResourceError("no suitable prime for univariate factorization");
    if (best_count == 1)
        return {f};
    const SmallField fp = *best;
    std::vector<SmallField::Poly> modular;
    for (const auto& [g, d] : best_ddf)
        fp.equal_degree(g, d, rng, modular);

    // Bound on factor coefficients (times lc, doubled for symmetric range).
    Integer sq = 0;
    for (const auto& c : f)
        sq += c * c;
    Integer bound = ((sqrt(sq) + 1) << n) * abs(f.back()) * 2 + 1;
    const Integer p(static_cast<unsigned long>(fp.p));
    Integer modulus = p;
    while (modulus <= bound)
        modulus *= p;

    auto lifted = hensel_multi(f, modular, fp, modulus);
    ModRing R{modulus};
    const Integer half = modulus / 2;

    std::vector<ZPoly> found;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool progressed = false;
        const std::size_t m = lifted.size();
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        for (;;) {
            // Constant-term filter before forming the full product.
            Integer c0 = R.norm(f.back());
            for (auto i : idx)
                c0 = R.norm(c0 * lifted[i][0]);
            if (c0 > half)
                c0 -= modulus;
            const bool plausible = c0 == 0 || (f[0] * f.back()) % c0 == 0;
            if (plausible) {
                ZPoly prod{R.norm(f.back())};
                for (auto i : idx)
                    prod = R.mul(prod, lifted[i]);
                ZPoly cand;
                for (const auto& c : prod)
                    cand.push_back(c > half ? Integer(c - modulus) : c);
                ztrim(cand);
                Integer g = 0;
                for (const auto& c : cand)
                    g = gcd(g, c);
                if (cand.back() < 0)
                    g = -g;
                for (auto& c : cand)
                    c /= g;
                if (auto q = zdivide(f, cand)) {
                    found.push_back(cand);
                    f = *q;
                    std::vector<ZPoly> rest;
                    for (std::size_t i = 0, k = 0; i < m; ++i) {
                        if (k < s && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        rest.push_back(std::move(lifted[i]));
                    }
                    lifted = std::move(rest);
                    progressed = true;
                    break;
                }
            }
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == m - s + (k - 1))
                --k;
            if (k == 0)
                break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!progressed)
            ++s;
    }
    if (f.size() > 1)
        found.push_back(f);
    return found;
}

} // namespace detail

/// Deterministic order on rational polynomials: degree, then coefficients
/// from the top down.
inline bool upoly_less(const UPolyQ& a, const UPolyQ& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

/// Irreducible monic factors of a square-free rational polynomial.
inline std::vector<UPolyQ> factor_squarefree_rational(const UPolyQ& p)
{
    std::vector<UPolyQ> out;
    if (p.degree() <= 0)
        return out;
    if (p.degree() == 1) {
        out.push_back(p.monic());
        return out;
    }
    auto f = detail::primitive_integer(p);
    std::size_t shift = 0;
    while (f[shift] == 0)
        ++shift;
    if (shift > 0) {
        out.push_back(UPolyQ{Rational(0), Rational(1)});
        f.erase(f.begin(), f.begin() + static_cast<long>(shift));
    }
    if (f.size() == 2) {
        out.push_back(detail::to_upoly(f).monic());
    } else if (f.size() > 2) {
        std::mt19937_64 rng(0x5eed5eedULL + f.size());
        for (auto& g : detail::factor_squarefree_z(f, rng))
            out.push_back(detail::to_upoly(g).monic());
    }
    std::sort(out.begin(), out.end(), [](const UPolyQ& a, const UPolyQ& b) { return upoly_less(a, b); });
    return out;
}

/// Complete factorization over Q into monic irreducibles with multiplicities.
inline UFactorization<Rational> factor_univariate_rational(const UPolyQ& p)
{
    if (p.is_zero())
        throw DomainError("cannot factor the zero polynomial");
    UFactorization<Rational> out{p.lead(), {}};
    if (detail::squarefree_mod_prime(p)) {
        for (auto& h : factor_squarefree_rational(p))
            out.factors.emplace_back(std::move(h), 1u);
        return out;
    }
    for (const auto& [g, e] : detail::squarefree_decomposition_q(p))
        for (auto& h : factor_squarefree_rational(g))
            out.factors.emplace_back(std::move(h), e);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });
    return out;
}

} // namespace ritt

#endif // RITT_FACTOR_Q_HPP
