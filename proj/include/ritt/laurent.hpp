#ifndef RITT_LAURENT_HPP
#define RITT_LAURENT_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ritt/cyclo.hpp>
#include <ritt/error.hpp>
#include <ritt/sparse_poly.hpp>
#include <ritt/upoly.hpp>

namespace ritt {

/// Element of R0 = Q(zeta_N)[x1..xn].
using CoeffPoly = SparsePoly<Cyclo>;

/// Exponent tuple of a Laurent monomial in y1..yp, always of length p.
using ExponentVector = std::vector<int>;

/// Sparse Laurent polynomial in y1..yp over CoeffPoly.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t p = 0) : p_(p) {}
    LaurentPoly(std::size_t p, SparsePoly<CoeffPoly> q) : p_(p), q_(std::move(q)) { check(); }

    static LaurentPoly constant(std::size_t p, const CoeffPoly& c) { return LaurentPoly(p, SparsePoly<CoeffPoly>(c)); }

    static LaurentPoly term(std::size_t p, const CoeffPoly& c, const ExponentVector& e)
    {
        return LaurentPoly(p, SparsePoly<CoeffPoly>::term(c, e));
    }

    /// The variable y_i (0-based) with coefficient 1.
    static LaurentPoly variable(std::size_t p, std::size_t i)
    {
        ExponentVector e(p, 0);
        e.at(i) = 1;
        return term(p, CoeffPoly(1), e);
    }

    std::size_t ambient() const noexcept { return p_; }
    const SparsePoly<CoeffPoly>& poly() const noexcept { return q_; }
    bool is_zero() const noexcept { return q_.is_zero(); }
    std::size_t size() const noexcept { return q_.size(); }

    /// Terms as (length-p exponent vector, coefficient), in increasing lex order.
    std::vector<std::pair<ExponentVector, CoeffPoly>> terms() const
    {
        std::vector<std::pair<ExponentVector, CoeffPoly>> out;
        for (const auto& [m, c] : q_.terms()) {
            ExponentVector e(p_, 0);
            for (std::size_t i = 0; i < m.size(); ++i)
                e[i] = m[i];
            out.emplace_back(std::move(e), c);
        }
        return out;
    }

    void add_term(const ExponentVector& e, const CoeffPoly& c)
    {
        if (e.size() > p_)
            throw DomainError("exponent vector longer than the ambient variable count");
        q_.add_term(e, c);
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
    {
        same_ambient(a, b);
        return LaurentPoly(a.p_, a.q_ + b.q_);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
    {
        same_ambient(a, b);
        return LaurentPoly(a.p_, a.q_ - b.q_);
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        same_ambient(a, b);
        return LaurentPoly(a.p_, a.q_ * b.q_);
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const CoeffPoly& c) { return LaurentPoly(a.p_, a.q_ * c); }

private:
    static void same_ambient(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.p_ != b.p_)
            throw DomainError("Laurent polynomials over different variable counts");
    }

    void check() const
    {
        if (q_.nvars() > p_)
            throw DomainError("exponent vector longer than the ambient variable count");
    }

    std::size_t p_;
    SparsePoly<CoeffPoly> q_;
};

enum class RingOp { add, mul };

inline LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, RingOp op)
{
    return op == RingOp::add ? a + b : a * b;
}

/// Q = y^monomial * qpos with qpos having nonnegative exponents and, in each
/// variable, some term of exponent 0.
struct NormalizedLaurent {
    ExponentVector monomial;
    LaurentPoly qpos;
};

inline NormalizedLaurent laurent_normalize(const LaurentPoly& q)
{
    if (q.is_zero())
        throw DomainError("cannot normalize the zero polynomial");
    const std::size_t p = q.ambient();
    ExponentVector lo(p, 0);
    for (std::size_t i = 0; i < p; ++i)
        lo[i] = q.poly().min_degree(i);
    Monomial neg(p);
    for (std::size_t i = 0; i < p; ++i)
        neg[i] = -lo[i];
    return {lo, LaurentPoly(p, q.poly().shift(neg))};
}

/// Q(y) = P(y1^d1, ..., yp^dp) with P primary.
struct PrimaryDecomposition {
    LaurentPoly primary;
    std::vector<int> d;
};

inline PrimaryDecomposition primary_decompose(const LaurentPoly& q)
{
    if (q.is_zero())
        throw DomainError("cannot decompose the zero polynomial");
    const std::size_t p = q.ambient();
    std::vector<int> d(p, 0);
    for (const auto& [m, c] : q.poly().terms())
        for (std::size_t i = 0; i < p; ++i)
            d[i] = std::gcd(d[i], monomial_at(m, i));
    for (auto& di : d)
        if (di == 0)
            di = 1;
    auto shrink = [&](const Monomial& m) {
        Monomial r(m);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] /= d[i];
        return r;
    };
    return {LaurentPoly(p, q.poly().map_monomials(shrink)), d};
}

inline bool is_primary(const LaurentPoly& q)
{
    for (int di : primary_decompose(q).d)
        if (di != 1)
            return false;
    return true;
}

/// Every exponent vector e becomes (e1 t1, ..., ep tp).
inline LaurentPoly power_substitute(const LaurentPoly& q, const std::vector<int>& t)
{
    if (t.size() != q.ambient())
        throw DomainError("power tuple length differs from the variable count");
    for (int ti : t)
        if (ti <= 0)
            throw DomainError("power tuple entries must be positive");
    return LaurentPoly(q.ambient(), q.poly().map_monomials([&](const Monomial& m) {
        Monomial r(m);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] *= t[i];
        return r;
    }));
}

/// y_i -> z * y_i (i is 0-based).
inline LaurentPoly twist(const LaurentPoly& q, std::size_t i, const Cyclo& z)
{
    if (i >= q.ambient())
        throw DomainError("twist variable out of range");
    SparsePoly<CoeffPoly> r;
    for (const auto& [m, c] : q.poly().terms())
        r.add_term(m, c * CoeffPoly(z.pow(monomial_at(m, i))));
    return LaurentPoly(q.ambient(), std::move(r));
}

/// Witness Q = y^tau1 * P(y^tau2).
struct OneVariableWitness {
    ExponentVector tau1;
    ExponentVector tau2;
    UPoly<CoeffPoly> p;
};

/// Returns a witness iff the exponent differences of Q span a lattice of rank
/// at most 1. tau2 is the primitive generator whose first nonzero entry is
/// positive (the first unit vector when Q is a single term).
inline std::optional<OneVariableWitness> essentially_one_variable(const LaurentPoly& q)
{
    if (q.is_zero())
        throw DomainError("zero polynomial has no one-variable form");
    const std::size_t p = q.ambient();
    const auto terms = q.terms();
    const ExponentVector& base = terms.front().first;
    std::vector<ExponentVector> diffs;
    for (const auto& [e, c] : terms) {
        ExponentVector d(p);
        for (std::size_t i = 0; i < p; ++i)
            d[i] = e[i] - base[i];
        diffs.push_back(std::move(d));
    }
    // Primitive direction from the first nonzero difference.
    ExponentVector g;
    for (const auto& d : diffs) {
        if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; }))
            continue;
        int h = 0;
        for (int x : d)
            h = std::gcd(h, x);
        g = d;
        for (auto& x : g)
            x /= h;
        break;
    }
    if (g.empty()) {
        ExponentVector tau2(p, 0);
        if (p > 0)
            tau2[0] = 1;
        return OneVariableWitness{base, tau2, UPoly<CoeffPoly>::constant(terms.front().second)};
    }
    if (*std::find_if(g.begin(), g.end(), [](int x) { return x != 0; }) < 0)
        for (auto& x : g)
            x = -x;
    std::size_t lead = 0;
    while (g[lead] == 0)
        ++lead;
    // Every difference must be an integer multiple of g.
    std::vector<long> k;
    long kgcd = 0;
    for (const auto& d : diffs) {
        if (d[lead] % g[lead] != 0)
            return std::nullopt;
        const long m = d[lead] / g[lead];
        for (std::size_t i = 0; i < p; ++i)
            if (d[i] != m * g[i])
                return std::nullopt;
        k.push_back(m);
        kgcd = std::gcd(kgcd, m);
    }
    const long kmin = *std::min_element(k.begin(), k.end());
    ExponentVector tau1(p), tau2(p);
    for (std::size_t i = 0; i < p; ++i) {
        tau1[i] = base[i] + static_cast<int>(kmin) * g[i];
        tau2[i] = static_cast<int>(kgcd) * g[i];
    }
    std::vector<CoeffPoly> coeffs;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        const auto pos = static_cast<std::size_t>((k[j] - kmin) / kgcd);
        if (coeffs.size() <= pos)
            coeffs.resize(pos + 1, CoeffPoly());
        coeffs[pos] = terms[j].second;
    }
    return OneVariableWitness{tau1, tau2, UPoly<CoeffPoly>(std::move(coeffs))};
}

/// Embed into Q(zeta_N)[y1..yp, x1..xn]: y-exponents first, then x.
inline CoeffPoly laurent_to_flat(const LaurentPoly& q)
{
    const std::size_t p = q.ambient();
    CoeffPoly out;
    for (const auto& [m, c] : q.poly().terms()) {
        for (const auto& [xm, a] : c.terms()) {
            Monomial flat(p + xm.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i)
                flat[i] = m[i];
            for (std::size_t i = 0; i < xm.size(); ++i)
                flat[p + i] = xm[i];
            out.add_term(flat, a);
        }
    }
    return out;
}

inline LaurentPoly laurent_from_flat(const CoeffPoly& f, std::size_t p)
{
    SparsePoly<CoeffPoly> r;
    for (const auto& [m, a] : f.terms()) {
        Monomial y(m.begin(), m.begin() + static_cast<long>(std::min(p, m.size())));
        Monomial x;
        if (m.size() > p)
            x.assign(m.begin() + static_cast<long>(p), m.end());
        r.add_term(y, CoeffPoly::term(a, x));
    }
    return LaurentPoly(p, std::move(r));
}

/// Per-variable maximal degree of the y-variables.
inline std::vector<int> y_degrees(const LaurentPoly& q)
{
    std::vector<int> d(q.ambient());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = q.poly().degree(i);
    return d;
}

} // namespace ritt

#endif // RITT_LAURENT_HPP
