#ifndef RITT_EPOLY_HPP
#define RITT_EPOLY_HPP

#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <ritt/classical_factor.hpp>
#include <ritt/cyclo.hpp>
#include <ritt/error.hpp>
#include <ritt/exponent.hpp>
#include <ritt/laurent.hpp>
#include <ritt/lattice.hpp>

namespace ritt {

/// Exponential polynomial sum a_h t^alpha_h in normal form, with a_h in
/// R0 = Q(zeta_N)[x] and alpha_h exponents relative to the order N.
class EPoly {
public:
    using map_type = std::map<Exponent, CoeffPoly, ExponentLess>;

    EPoly() = default;
    EPoly(const CoeffPoly& a, unsigned order = 1) : order_(std::lcm(order, coefficient_order(a)))
    {
        if (!a.is_zero())
            t_.emplace(Exponent{}, a);
    }
    EPoly(int c) : EPoly(CoeffPoly(c)) {}

    static EPoly zero(unsigned order)
    {
        EPoly r;
        r.order_ = order;
        return r;
    }

    /// a * t^alpha, alpha expressed at `order`.
    static EPoly term(const CoeffPoly& a, const Exponent& alpha, unsigned order = 1)
    {
        EPoly r;
        r.order_ = std::lcm(order, coefficient_order(a));
        if (!a.is_zero())
            r.t_.emplace(alpha.embed(order, r.order_), a);
        return r;
    }

    unsigned order() const noexcept { return order_; }
    const map_type& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    std::size_t size() const noexcept { return t_.size(); }

    unsigned height() const
    {
        unsigned h = 0;
        for (const auto& [e, a] : t_)
            h = std::max(h, e.height());
        return h;
    }

    /// Number of x-variable slots used by the coefficients.
    std::size_t nvars() const
    {
        std::size_t n = 0;
        for (const auto& [e, a] : t_)
            n = std::max(n, a.nvars());
        return n;
    }

    /// The same element at order m (order() | m).
    EPoly embed(unsigned m) const
    {
        if (m == order_)
            return *this;
        if (m % order_ != 0)
            throw DomainError("cannot embed order " + std::to_string(order_) + " into order " + std::to_string(m));
        EPoly r;
        r.order_ = m;
        for (const auto& [e, a] : t_)
            r.add_term(e.embed(order_, m), a);
        return r;
    }

    void add_term(const Exponent& e, const CoeffPoly& a)
    {
        if (a.is_zero())
            return;
        if (order_ % coefficient_order(a) != 0)
            throw DomainError("coefficient lies outside the ambient cyclotomic field");
        auto [it, inserted] = t_.emplace(e, a);
        if (!inserted) {
            it->second = it->second + a;
            if (it->second.is_zero())
                t_.erase(it);
        }
    }

    /// Coefficient of t^e (zero if absent).
    CoeffPoly coeff(const Exponent& e) const
    {
        auto it = t_.find(e);
        return it == t_.end() ? CoeffPoly() : it->second;
    }

    friend bool operator==(const EPoly& a, const EPoly& b)
    {
        if (a.order_ != b.order_) {
            const unsigned m = std::lcm(a.order_, b.order_);
            return a.embed(m).t_ == b.embed(m).t_;
        }
        return a.t_ == b.t_;
    }
    friend bool operator!=(const EPoly& a, const EPoly& b) { return !(a == b); }

    friend EPoly operator+(const EPoly& a, const EPoly& b)
    {
        const unsigned m = std::lcm(a.order_, b.order_);
        EPoly r = a.embed(m);
        for (const auto& [e, c] : b.t_)
            r.add_term(e.embed(b.order_, m), c);
        return r;
    }

    friend EPoly operator-(const EPoly& a)
    {
        EPoly r = a;
        for (auto& [e, c] : r.t_)
            c = -c;
        return r;
    }

    friend EPoly operator-(const EPoly& a, const EPoly& b) { return a + (-b); }

    friend EPoly operator*(const EPoly& a, const EPoly& b)
    {
        const unsigned m = std::lcm(a.order_, b.order_);
        const EPoly x = a.embed(m), y = b.embed(m);
        EPoly r;
        r.order_ = m;
        for (const auto& [e1, c1] : x.t_)
            for (const auto& [e2, c2] : y.t_)
                r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    EPoly& operator+=(const EPoly& o) { return *this = *this + o; }
    EPoly& operator*=(const EPoly& o) { return *this = *this * o; }

    EPoly pow(unsigned e) const
    {
        EPoly acc(1), base = *this;
        acc.order_ = order_;
        while (e > 0) {
            if (e & 1)
                acc = acc * base;
            e >>= 1;
            if (e > 0)
                base = base * base;
        }
        return acc;
    }

    /// Multiply by the unit t^e (e at this order).
    EPoly shift(const Exponent& e) const
    {
        EPoly r;
        r.order_ = order_;
        for (const auto& [k, c] : t_)
            r.t_.emplace(k + e, c);
        return r;
    }

    /// Smallest and greatest exponent under the group order.
    const Exponent& low_exponent() const
    {
        if (t_.empty())
            throw DomainError("zero exponential polynomial has no terms");
        return t_.begin()->first;
    }
    const Exponent& high_exponent() const
    {
        if (t_.empty())
            throw DomainError("zero exponential polynomial has no terms");
        return t_.rbegin()->first;
    }

    static unsigned coefficient_order(const CoeffPoly& a)
    {
        unsigned n = 1;
        for (const auto& [m, c] : a.terms())
            n = std::lcm(n, c.order());
        return n;
    }

private:
    unsigned order_ = 1;
    map_type t_;
};

inline EPoly epoly_arith(const EPoly& f, const EPoly& g, RingOp op) { return op == RingOp::add ? f + g : f * g; }

/// u * t^alpha with u a nonzero constant; alpha at `order`.
struct Unit {
    Cyclo scalar{1};
    Exponent exponent;
    unsigned order = 1;

    EPoly to_epoly() const { return EPoly::term(CoeffPoly(scalar), exponent, order); }
};

/// E(f) = t^(f minus its constant part): E is trivial on constants.
inline EPoly exp(const EPoly& f)
{
    const unsigned n = f.order();
    Exponent out;
    for (const auto& [alpha, a] : f.terms()) {
        for (const auto& [m, c] : a.terms()) {
            if (alpha.is_zero() && m.empty())
                continue;
            std::shared_ptr<const Exponent> inner;
            if (!alpha.is_zero())
                inner = std::make_shared<const Exponent>(alpha);
            const Cyclo ce = c.embed(n);
            const auto& co = ce.coords();
            for (unsigned j = 0; j < co.size(); ++j)
                if (!is_zero(co[j]))
                    out = out + Exponent::atom(Atom{m, j, inner}, co[j]);
        }
    }
    return EPoly::term(CoeffPoly(1), out, n);
}

/// Exponents of f and the dimension of their Q-span.
struct Support {
    std::vector<Exponent> generators;
    std::size_t dimension = 0;
};

inline Support support(const EPoly& f)
{
    if (f.is_zero())
        throw DomainError("support of the zero polynomial");
    Support s;
    for (const auto& [e, a] : f.terms())
        s.generators.push_back(e);
    s.dimension = rational_rank(flatten(s.generators).rows);
    return s;
}

inline bool is_simple(const EPoly& f) { return support(f).dimension == 1; }

/// Dimension of the span of pairwise exponent differences (support of f up
/// to units).
inline std::size_t support_dimension_mod_units(const EPoly& f)
{
    if (f.is_zero())
        throw DomainError("support of the zero polynomial");
    std::vector<Exponent> d;
    const Exponent& lo = f.low_exponent();
    for (const auto& [e, a] : f.terms())
        d.push_back(e - lo);
    return rational_rank(flatten(d).rows);
}

/// True iff every exponent of g lies in the Q-span of f's exponents.
inline bool support_contained(const EPoly& g, const EPoly& f)
{
    const unsigned m = std::lcm(g.order(), f.order());
    const EPoly fm = f.embed(m), gm = g.embed(m);
    std::vector<Exponent> fe, all;
    for (const auto& [e, a] : fm.terms())
        fe.push_back(e);
    all = fe;
    for (const auto& [e, a] : gm.terms())
        all.push_back(e);
    return rational_rank(flatten(fe).rows) == rational_rank(flatten(all).rows);
}

/// Normalize up to units: minimal exponent 0 and the lex-greatest x-term of
/// the top coefficient equal to 1. Returns the unit u with f = u * result.
inline std::pair<Unit, EPoly> normalize_epoly(const EPoly& f)
{
    if (f.is_zero())
        throw DomainError("cannot normalize the zero polynomial");
    const Exponent lo = f.low_exponent();
    EPoly g = f.shift(-lo);
    const Cyclo lc = g.terms().rbegin()->second.lead().second;
    EPoly r = EPoly::zero(f.order());
    for (const auto& [e, a] : g.terms())
        r.add_term(e, a * (Cyclo(1) / lc));
    return {Unit{lc, lo, f.order()}, r};
}

/// Canonical primitive generator of the line spanned by a nonzero exponent:
/// coprime integer coordinates with the greatest atom positive.
inline Exponent primitive_generator(const Exponent& e)
{
    if (e.is_zero())
        throw DomainError("zero exponent spans no line");
    Integer den = 1;
    for (const auto& [a, q] : e.coords())
        den = lcm(den, Integer(q.get_den()));
    Integer g = 0;
    for (const auto& [a, q] : e.coords())
        g = gcd(g, Integer(q * den));
    Rational s(den, g);
    s.canonicalize();
    if (sgn(e.coords().back().second) < 0)
        s = -s;
    return s * e;
}

/// The support line of a simple polynomial (up to units).
inline Exponent support_line(const EPoly& f)
{
    const Exponent& lo = f.low_exponent();
    for (const auto& [e, a] : f.terms())
        if (!(e - lo).is_zero())
            return primitive_generator(e - lo);
    throw DomainError("single-term polynomial has no support line");
}

} // namespace ritt

#endif // RITT_EPOLY_HPP
