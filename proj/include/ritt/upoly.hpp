#ifndef RITT_UPOLY_HPP
#define RITT_UPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <ritt/error.hpp>
#include <ritt/rational.hpp>

namespace ritt {

namespace detail {
// Unqualified call so ADL finds is_zero for coefficient types declared later.
template <class F>
bool coeff_is_zero(const F& x)
{
    return is_zero(x);
}
} // namespace detail

/// Dense univariate polynomial over a field F, coefficients stored from the
/// constant term upwards. Trailing zeros are never stored, so the zero
/// polynomial is the empty vector.
///
/// F must provide + - * /, equality, construction from int and a free
/// function is_zero(const F&).
template <class F>
class UPoly {
public:
    using coeff_type = F;

    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static UPoly constant(const F& a) { return UPoly(std::vector<F>{a}); }

    /// a * z^k
    static UPoly monomial(const F& a, std::size_t k)
    {
        std::vector<F> v(k + 1, F(0));
        v[k] = a;
        return UPoly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const F& lead() const { return c_.back(); }
    const std::vector<F>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }

    F operator[](std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    friend UPoly operator+(const UPoly& a, const UPoly& b)
    {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r[i] = r[i] + b.c_[i];
        return UPoly(std::move(r));
    }

    friend UPoly operator-(const UPoly& a) { return a * F(-1); }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }

    friend UPoly operator*(const UPoly& a, const F& s)
    {
        std::vector<F> r(a.c_);
        for (auto& x : r)
            x = x * s;
        return UPoly(std::move(r));
    }

    /// Quotient and remainder; b must be nonzero.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
    {
        if (b.is_zero())
            throw DomainError("polynomial division by zero");
        if (a.degree() < b.degree())
            return {UPoly{}, a};
        std::vector<F> rem(a.c_);
        std::vector<F> quo(a.c_.size() - b.c_.size() + 1, F(0));
        const F inv_lead = F(1) / b.lead();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = quo.size(); k-- > 0;) {
            F q = rem[k + db] * inv_lead;
            quo[k] = q;
            if (detail::coeff_is_zero(q))
                continue;
            for (std::size_t j = 0; j <= db; ++j)
                rem[k + j] = rem[k + j] - q * b.c_[j];
        }
        rem.resize(db);
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }

    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

    UPoly monic() const
    {
        if (is_zero())
            return {};
        return *this * (F(1) / lead());
    }

    UPoly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<F> r(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * F(static_cast<int>(i));
        return UPoly(std::move(r));
    }

    F eval(const F& x) const
    {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    /// p(z + a)
    UPoly shift(const F& a) const
    {
        UPoly acc;
        const UPoly lin{a, F(1)};
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * lin + constant(c_[i]);
        return acc;
    }

    /// Map every coefficient through fn, keeping positions.
    template <class G, class Fn>
    UPoly<G> map(Fn&& fn) const
    {
        std::vector<G> r;
        r.reserve(c_.size());
        for (const auto& x : c_)
            r.push_back(fn(x));
        return UPoly<G>(std::move(r));
    }

private:
    void trim()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<F> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b)
{
    // Monic remainders keep coefficient growth in check over Q and Q(zeta).
    b = b.monic();
    while (!b.is_zero()) {
        auto r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> xgcd(UPoly<F> a, UPoly<F> b)
{
    UPoly<F> s0 = UPoly<F>::constant(F(1)), s1;
    UPoly<F> t0, t1 = UPoly<F>::constant(F(1));
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = s0 - q * s1;
        auto t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero())
        return {a, s0, t0};
    F inv = F(1) / a.lead();
    return {a * inv, s0 * inv, t0 * inv};
}

/// Square-free decomposition (Yun). Returns monic pairs (g_i, i) with
/// p = lead(p) * prod g_i^i, every g_i square-free and pairwise coprime.
/// Characteristic 0 only.
template <class F>
std::vector<std::pair<UPoly<F>, unsigned>> squarefree_decomposition(const UPoly<F>& p)
{
    std::vector<std::pair<UPoly<F>, unsigned>> out;
    if (p.degree() <= 0)
        return out;
    auto f = p.monic();
    auto df = f.derivative();
    auto a = gcd(f, df);
    auto b = f / a;
    auto c = df / a;
    auto d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        auto g = gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

template <class F>
bool is_squarefree(const UPoly<F>& p)
{
    return gcd(p, p.derivative()).degree() <= 0;
}

} // namespace ritt

#endif // RITT_UPOLY_HPP
