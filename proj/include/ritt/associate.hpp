#ifndef RITT_ASSOCIATE_HPP
#define RITT_ASSOCIATE_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include <ritt/epoly.hpp>
#include <ritt/error.hpp>
#include <ritt/laurent.hpp>
#include <ritt/lattice.hpp>

namespace ritt {

/// How the support basis nu is chosen.
///
/// lattice: a Z-basis (Hermite normal form, greatest atom first) of the
/// group generated by the exponents. Every exponent has integer coordinates
/// and no coarser basis exists. lattice_reversed computes the normal form
/// over the reversed atom order (smallest atom first).
///
/// echelon: pick independent exponents mu scanning from the greatest
/// exponent down, then divide by the lcm M of all coordinate denominators.
/// echelon_reversed scans from the smallest exponent up.
enum class BasisStrategy { lattice, lattice_reversed, echelon, echelon_reversed };

/// nu_1..nu_p and the integer coordinates of every exponent of f (rows in
/// increasing exponent order).
struct SupportBasis {
    std::vector<Exponent> nu;
    std::vector<Exponent> exponents;
    std::vector<std::vector<int>> exponent_matrix;
    unsigned order = 1;

    std::size_t rank() const noexcept { return nu.size(); }
};

namespace detail {

inline int to_int_checked(const Rational& q)
{
    if (q.get_den() != 1)
        throw DomainError("exponent is not an integer combination of the basis");
    if (!q.get_num().fits_sint_p())
        throw ResourceError("exponent coordinate out of range");
    return static_cast<int>(q.get_num().get_si());
}

inline std::vector<std::vector<Rational>> coordinates_in(const std::vector<Exponent>& basis,
                                                         const std::vector<Exponent>& targets)
{
    std::vector<Exponent> all(basis);
    all.insert(all.end(), targets.begin(), targets.end());
    const auto flat = flatten(all);
    RationalMatrix b(flat.rows.begin(), flat.rows.begin() + static_cast<long>(basis.size()));
    std::vector<std::vector<Rational>> out;
    for (std::size_t h = 0; h < targets.size(); ++h) {
        auto c = solve_coordinates(b, flat.rows[basis.size() + h]);
        if (!c)
            throw DomainError("exponent outside the span of the basis");
        out.push_back(std::move(*c));
    }
    return out;
}

inline std::vector<Exponent> lattice_basis(const std::vector<Exponent>& es, bool reversed)
{
    auto flat = flatten(es);
    const std::size_t m = flat.atoms.size();
    Integer den = 1;
    for (const auto& row : flat.rows)
        for (const auto& q : row)
            den = lcm(den, Integer(q.get_den()));
    // Column c of the integer matrix holds atom col(c).
    auto col = [&](std::size_t c) { return reversed ? c : m - 1 - c; };
    IntegerMatrix ints;
    for (const auto& row : flat.rows) {
        std::vector<Integer> r(m);
        for (std::size_t c = 0; c < m; ++c)
            r[c] = Integer(row[col(c)] * den);
        ints.push_back(std::move(r));
    }
    std::vector<Exponent> nu;
    for (const auto& r : hermite_basis(std::move(ints))) {
        std::vector<Rational> row(m);
        for (std::size_t c = 0; c < m; ++c) {
            row[col(c)] = Rational(r[c], den);
            row[col(c)].canonicalize();
        }
        nu.push_back(unflatten(flat.atoms, row));
    }
    return nu;
}

inline std::vector<Exponent> echelon_basis(std::vector<Exponent> es, bool reversed)
{
    std::sort(es.begin(), es.end(), ExponentLess{});
    if (!reversed)
        std::reverse(es.begin(), es.end());
    std::vector<Exponent> mu;
    std::size_t rank = 0;
    for (const auto& e : es) {
        auto trial = mu;
        trial.push_back(e);
        const std::size_t r = rational_rank(flatten(trial).rows);
        if (r > rank) {
            mu = std::move(trial);
            rank = r;
        }
    }
    const auto coords = coordinates_in(mu, es);
    Integer m = 1;
    for (const auto& row : coords)
        for (const auto& q : row)
            m = lcm(m, Integer(q.get_den()));
    for (auto& v : mu)
        v = Rational(Rational(1) / Rational(m)) * v;
    return mu;
}

} // namespace detail

inline SupportBasis support_basis(const EPoly& f, BasisStrategy strategy = BasisStrategy::lattice)
{
    if (f.is_zero())
        throw DomainError("support basis of the zero polynomial");
    if (f.size() == 1)
        throw DomainError("support basis of a unit multiple");
    SupportBasis b;
    b.order = f.order();
    for (const auto& [e, a] : f.terms())
        b.exponents.push_back(e);
    switch (strategy) {
    case BasisStrategy::lattice:
        b.nu = detail::lattice_basis(b.exponents, false);
        break;
    case BasisStrategy::lattice_reversed:
        b.nu = detail::lattice_basis(b.exponents, true);
        break;
    case BasisStrategy::echelon:
        b.nu = detail::echelon_basis(b.exponents, false);
        break;
    case BasisStrategy::echelon_reversed:
        b.nu = detail::echelon_basis(b.exponents, true);
        break;
    }
    for (const auto& row : detail::coordinates_in(b.nu, b.exponents)) {
        std::vector<int> r;
        for (const auto& q : row)
            r.push_back(detail::to_int_checked(q));
        b.exponent_matrix.push_back(std::move(r));
    }
    return b;
}

/// f = unit * Q(t^nu1, ..., t^nup) with Q a polynomial.
struct Associate {
    LaurentPoly q;
    Unit unit;
};

inline Associate to_associate(const EPoly& f, const SupportBasis& b)
{
    if (f.order() != b.order || f.size() != b.exponents.size())
        throw DomainError("support basis does not belong to this polynomial");
    const std::size_t p = b.rank();
    LaurentPoly q(p);
    std::size_t h = 0;
    for (const auto& [e, a] : f.terms()) {
        if (e != b.exponents[h])
            throw DomainError("support basis does not belong to this polynomial");
        q.add_term(b.exponent_matrix[h], a);
        ++h;
    }
    auto [mono, qpos] = laurent_normalize(q);
    Exponent shift;
    for (std::size_t j = 0; j < p; ++j)
        shift = shift + Rational(mono[j]) * b.nu[j];
    return {qpos, Unit{Cyclo(1), shift, b.order}};
}

/// Substitute y_i -> t^((num_i / den_i) nu_i).
inline EPoly from_associate(const LaurentPoly& q, const SupportBasis& b, const std::vector<long>& num,
                            const std::vector<long>& den)
{
    const std::size_t p = b.rank();
    if (q.ambient() != p || num.size() != p || den.size() != p)
        throw DomainError("substitution length differs from the basis rank");
    std::vector<Exponent> step;
    for (std::size_t i = 0; i < p; ++i) {
        if (den[i] <= 0 || num[i] <= 0)
            throw DomainError("substitution scalings must be positive");
        Rational s(num[i], den[i]);
        s.canonicalize();
        step.push_back(s * b.nu[i]);
    }
    EPoly out = EPoly::zero(b.order);
    for (const auto& [e, a] : q.terms()) {
        Exponent alpha;
        for (std::size_t i = 0; i < p; ++i)
            if (e[i] != 0)
                alpha = alpha + Rational(e[i]) * step[i];
        out = out + EPoly::term(a, alpha, b.order);
    }
    return out;
}

inline EPoly from_associate(const LaurentPoly& q, const SupportBasis& b)
{
    return from_associate(q, b, std::vector<long>(b.rank(), 1), std::vector<long>(b.rank(), 1));
}

} // namespace ritt

#endif // RITT_ASSOCIATE_HPP
