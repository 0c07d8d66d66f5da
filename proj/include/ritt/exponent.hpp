#ifndef RITT_EXPONENT_HPP
#define RITT_EXPONENT_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include <ritt/cyclo.hpp>
#include <ritt/error.hpp>
#include <ritt/rational.hpp>
#include <ritt/sparse_poly.hpp>

namespace ritt {

class Exponent;

/// Q-basis element of the exponent group B0 + B1 + ...
///
/// Height 1 (inner empty): the element x^mono * zeta^zeta of B0; mono is
/// never the empty monomial. Height h+1: the element x^mono * zeta^zeta *
/// t^inner with inner a nonzero exponent of height h.
///
/// The zeta index refers to the power basis of the ambient cyclotomic order
/// of the exponential polynomial that owns the exponent.
struct Atom {
    Monomial mono;
    unsigned zeta = 0;
    std::shared_ptr<const Exponent> inner;

    unsigned height() const;
};

/// Finite Q-combination of atoms, kept sorted by increasing atom with no
/// zero coordinates.
class Exponent {
public:
    using entry = std::pair<Atom, Rational>;

    Exponent() = default;

    static Exponent atom(Atom a, const Rational& q = 1)
    {
        Exponent e;
        if (!ritt::is_zero(q))
            e.c_.emplace_back(std::move(a), q);
        return e;
    }

    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<entry>& coords() const noexcept { return c_; }

    unsigned height() const
    {
        unsigned h = 0;
        for (const auto& [a, q] : c_)
            h = std::max(h, a.height());
        return h;
    }

    Rational coeff(const Atom& a) const;

    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a);
    friend Exponent operator-(const Exponent& a, const Exponent& b) { return a + (-b); }
    friend Exponent operator*(const Rational& s, const Exponent& a);
    friend bool operator==(const Exponent& a, const Exponent& b);
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

    /// The same exponent re-expressed for ambient order `to` (from | to).
    Exponent embed(unsigned from, unsigned to) const;

private:
    std::vector<entry> c_;
};

int exponent_compare(const Exponent& a, const Exponent& b);

inline unsigned Atom::height() const { return inner ? inner->height() + 1 : 1; }

/// Canonical atom order: by height, then inner exponent, monomial and zeta
/// index.
inline int atom_compare(const Atom& a, const Atom& b)
{
    const unsigned ha = a.height(), hb = b.height();
    if (ha != hb)
        return ha < hb ? -1 : 1;
    if (a.inner && b.inner && a.inner != b.inner)
        if (int c = exponent_compare(*a.inner, *b.inner); c != 0)
            return c;
    if (int c = monomial_compare(a.mono, b.mono); c != 0)
        return c;
    if (a.zeta != b.zeta)
        return a.zeta < b.zeta ? -1 : 1;
    return 0;
}

inline bool operator==(const Atom& a, const Atom& b) { return atom_compare(a, b) == 0; }

struct AtomLess {
    bool operator()(const Atom& a, const Atom& b) const { return atom_compare(a, b) < 0; }
};

inline Rational Exponent::coeff(const Atom& a) const
{
    for (const auto& [b, q] : c_)
        if (atom_compare(a, b) == 0)
            return q;
    return 0;
}

inline Exponent operator+(const Exponent& a, const Exponent& b)
{
    Exponent r;
    auto i = a.c_.begin(), j = b.c_.begin();
    while (i != a.c_.end() || j != b.c_.end()) {
        int c = i == a.c_.end() ? 1 : j == b.c_.end() ? -1 : atom_compare(i->first, j->first);
        if (c < 0) {
            r.c_.push_back(*i++);
        } else if (c > 0) {
            r.c_.push_back(*j++);
        } else {
            Rational s = i->second + j->second;
            if (!is_zero(s))
                r.c_.emplace_back(i->first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

inline Exponent operator-(const Exponent& a)
{
    Exponent r = a;
    for (auto& [atom, q] : r.c_)
        q = -q;
    return r;
}

inline Exponent operator*(const Rational& s, const Exponent& a)
{
    if (is_zero(s))
        return {};
    Exponent r = a;
    for (auto& [atom, q] : r.c_)
        q *= s;
    return r;
}

inline bool operator==(const Exponent& a, const Exponent& b)
{
    if (a.c_.size() != b.c_.size())
        return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i].second != b.c_[i].second || atom_compare(a.c_[i].first, b.c_[i].first) != 0)
            return false;
    return true;
}

/// Group order: the sign of the coordinate of a - b on the greatest atom
/// where they differ. Compatible with addition.
inline int exponent_compare(const Exponent& a, const Exponent& b)
{
    const auto& x = a.coords();
    const auto& y = b.coords();
    auto i = x.rbegin(), j = y.rbegin();
    while (i != x.rend() || j != y.rend()) {
        int c = i == x.rend() ? -1 : j == y.rend() ? 1 : atom_compare(i->first, j->first);
        if (c > 0)
            return sgn(i->second) > 0 ? 1 : -1;
        if (c < 0)
            return sgn(j->second) > 0 ? -1 : 1;
        if (int s = cmp(i->second, j->second); s != 0)
            return s < 0 ? -1 : 1;
        ++i;
        ++j;
    }
    return 0;
}

struct ExponentLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return exponent_compare(a, b) < 0; }
};

inline Exponent Exponent::embed(unsigned from, unsigned to) const
{
    if (from == to || c_.empty())
        return *this;
    if (to % from != 0)
        throw DomainError("cannot embed exponent of order " + std::to_string(from) + " into order " +
                          std::to_string(to));
    Exponent r;
    for (const auto& [a, q] : c_) {
        std::shared_ptr<const Exponent> inner;
        if (a.inner)
            inner = std::make_shared<const Exponent>(a.inner->embed(from, to));
        const Cyclo z = Cyclo::zeta_power(from, a.zeta).embed(to);
        const auto& co = z.coords();
        for (unsigned j = 0; j < co.size(); ++j)
            if (!ritt::is_zero(co[j]))
                r = r + Exponent::atom(Atom{a.mono, j, inner}, q * co[j]);
    }
    return r;
}

/// Coordinates of several exponents over their common atoms (sorted).
struct FlatExponents {
    std::vector<Atom> atoms;
    std::vector<std::vector<Rational>> rows;
};

inline FlatExponents flatten(const std::vector<Exponent>& es)
{
    std::vector<Atom> atoms;
    for (const auto& e : es)
        for (const auto& [a, q] : e.coords())
            atoms.push_back(a);
    std::sort(atoms.begin(), atoms.end(), AtomLess{});
    atoms.erase(std::unique(atoms.begin(), atoms.end(),
                            [](const Atom& a, const Atom& b) { return atom_compare(a, b) == 0; }),
                atoms.end());
    FlatExponents out{atoms, {}};
    for (const auto& e : es) {
        std::vector<Rational> row(atoms.size());
        std::size_t k = 0;
        for (const auto& [a, q] : e.coords()) {
            while (atom_compare(atoms[k], a) != 0)
                ++k;
            row[k] = q;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline Exponent unflatten(const std::vector<Atom>& atoms, const std::vector<Rational>& row)
{
    Exponent e;
    for (std::size_t k = 0; k < atoms.size(); ++k)
        if (!is_zero(row[k]))
            e = e + Exponent::atom(atoms[k], row[k]);
    return e;
}

} // namespace ritt

#endif // RITT_EXPONENT_HPP
