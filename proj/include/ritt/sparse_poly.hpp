#ifndef RITT_SPARSE_POLY_HPP
#define RITT_SPARSE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ritt/error.hpp>
#include <ritt/upoly.hpp>

namespace ritt {

/// Exponent tuple. Trailing zeros are insignificant: compare and combine
/// monomials only through the helpers below.
using Monomial = std::vector<int>;

inline void trim_monomial(Monomial& m)
{
    while (!m.empty() && m.back() == 0)
        m.pop_back();
}

inline int monomial_at(const Monomial& m, std::size_t i) { return i < m.size() ? m[i] : 0; }

/// Lexicographic order with the first variable most significant; shorter
/// tuples are padded with zeros.
inline int monomial_compare(const Monomial& a, const Monomial& b)
{
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int x = monomial_at(a, i), y = monomial_at(b, i);
        if (x != y)
            return x < y ? -1 : 1;
    }
    return 0;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_compare(a, b) < 0; }
};

inline Monomial monomial_add(const Monomial& a, const Monomial& b)
{
    Monomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = monomial_at(a, i) + monomial_at(b, i);
    trim_monomial(r);
    return r;
}

inline Monomial monomial_sub(const Monomial& a, const Monomial& b)
{
    Monomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = monomial_at(a, i) - monomial_at(b, i);
    trim_monomial(r);
    return r;
}

inline bool monomial_nonnegative(const Monomial& m)
{
    return std::all_of(m.begin(), m.end(), [](int e) { return e >= 0; });
}

inline int monomial_degree(const Monomial& m)
{
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

/// Sparse multivariate (Laurent) polynomial with coefficients in C. C needs
/// + - *, equality, construction from int and a free is_zero(const C&).
template <class C>
class SparsePoly {
public:
    using coeff_type = C;
    using map_type = std::map<Monomial, C, MonomialLess>;

    SparsePoly() = default;
    SparsePoly(const C& c)
    {
        if (!detail::coeff_is_zero(c))
            t_.emplace(Monomial{}, c);
    }
    SparsePoly(int c) : SparsePoly(C(c)) {}

    static SparsePoly term(const C& c, Monomial m)
    {
        SparsePoly r;
        trim_monomial(m);
        if (!detail::coeff_is_zero(c))
            r.t_.emplace(std::move(m), c);
        return r;
    }

    /// The variable with index i.
    static SparsePoly variable(std::size_t i)
    {
        Monomial m(i + 1, 0);
        m[i] = 1;
        return term(C(1), std::move(m));
    }

    bool is_zero() const noexcept { return t_.empty(); }
    std::size_t size() const noexcept { return t_.size(); }
    const map_type& terms() const noexcept { return t_; }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

    C constant_term() const
    {
        auto it = t_.find(Monomial{});
        return it == t_.end() ? C(0) : it->second;
    }

    C coeff(const Monomial& m) const
    {
        Monomial k = m;
        trim_monomial(k);
        auto it = t_.find(k);
        return it == t_.end() ? C(0) : it->second;
    }

    /// Lex-greatest term; the polynomial must be nonzero.
    const std::pair<const Monomial, C>& lead() const
    {
        if (t_.empty())
            throw DomainError("leading term of the zero polynomial");
        return *t_.rbegin();
    }

    /// Number of variable slots in use.
    std::size_t nvars() const
    {
        std::size_t n = 0;
        for (const auto& [m, c] : t_)
            n = std::max(n, m.size());
        return n;
    }

    int degree(std::size_t var) const
    {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : t_) {
            if (first || monomial_at(m, var) > d)
                d = monomial_at(m, var);
            first = false;
        }
        return d;
    }

    int min_degree(std::size_t var) const
    {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : t_) {
            if (first || monomial_at(m, var) < d)
                d = monomial_at(m, var);
            first = false;
        }
        return d;
    }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [m, c] : t_)
            d = std::max(d, monomial_degree(m));
        return d;
    }

    bool involves(std::size_t var) const
    {
        for (const auto& [m, c] : t_)
            if (monomial_at(m, var) != 0)
                return true;
        return false;
    }

    void add_term(const Monomial& m, const C& c)
    {
        if (detail::coeff_is_zero(c))
            return;
        Monomial k = m;
        trim_monomial(k);
        auto [it, inserted] = t_.emplace(std::move(k), c);
        if (!inserted) {
            it->second = it->second + c;
            if (detail::coeff_is_zero(it->second))
                t_.erase(it);
        }
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b)
    {
        SparsePoly r = a;
        for (const auto& [m, c] : b.t_)
            r.add_term(m, c);
        return r;
    }

    friend SparsePoly operator-(const SparsePoly& a)
    {
        SparsePoly r = a;
        for (auto& [m, c] : r.t_)
            c = C(0) - c;
        return r;
    }

    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        SparsePoly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                r.add_term(monomial_add(ma, mb), ca * cb);
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const C& s)
    {
        if (detail::coeff_is_zero(s))
            return {};
        SparsePoly r = a;
        for (auto& [m, c] : r.t_)
            c = c * s;
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
    SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly pow(unsigned e) const
    {
        SparsePoly acc(C(1)), base = *this;
        while (e > 0) {
            if (e & 1)
                acc = acc * base;
            e >>= 1;
            if (e > 0)
                base = base * base;
        }
        return acc;
    }

    /// Multiply every exponent by a monomial shift m.
    SparsePoly shift(const Monomial& m) const
    {
        SparsePoly r;
        for (const auto& [k, c] : t_)
            r.t_.emplace(monomial_add(k, m), c);
        return r;
    }

    /// Apply fn to every (monomial, coefficient); results are summed.
    template <class G, class Fn>
    SparsePoly<G> map(Fn&& fn) const
    {
        SparsePoly<G> r;
        for (const auto& [m, c] : t_)
            r.add_term(m, fn(c));
        return r;
    }

    /// Rewrite every monomial through fn (which must be injective for the
    /// term count to be preserved; collisions are summed).
    template <class Fn>
    SparsePoly map_monomials(Fn&& fn) const
    {
        SparsePoly r;
        for (const auto& [m, c] : t_)
            r.add_term(fn(m), c);
        return r;
    }

private:
    map_type t_;
};

template <class C>
bool is_zero(const SparsePoly<C>& p)
{
    return p.is_zero();
}

/// Exact division in the polynomial ring (all exponents nonnegative) over a
/// field C: the quotient if b divides a, nothing otherwise.
template <class C>
std::optional<SparsePoly<C>> exact_divide(const SparsePoly<C>& a, const SparsePoly<C>& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    SparsePoly<C> rem = a, quo;
    const auto& [lb, cb] = b.lead();
    const C inv = C(1) / cb;
    const std::size_t nv = std::max(a.nvars(), b.nvars());
    // Degree bounds reject most non-divisors before any arithmetic.
    for (std::size_t v = 0; v < nv; ++v)
        if (b.degree(v) - b.min_degree(v) > a.degree(v) - a.min_degree(v))
            return std::nullopt;
    while (!rem.is_zero()) {
        const auto& [lr, cr] = rem.lead();
        Monomial q = monomial_sub(lr, lb);
        if (!monomial_nonnegative(q))
            return std::nullopt;
        auto t = SparsePoly<C>::term(cr * inv, q);
        quo += t;
        rem -= b * t;
    }
    return quo;
}

} // namespace ritt

#endif // RITT_SPARSE_POLY_HPP
