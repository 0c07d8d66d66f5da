#ifndef RITT_FACTOR_CYCLO_HPP
#define RITT_FACTOR_CYCLO_HPP

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include <ritt/cyclo.hpp>
#include <ritt/error.hpp>
#include <ritt/factor_q.hpp>
#include <ritt/upoly.hpp>

namespace ritt {

using UPolyK = UPoly<Cyclo>;

inline UPolyK embed(const UPolyK& p, unsigned order)
{
    return p.map<Cyclo>([order](const Cyclo& c) { return c.embed(order); });
}

inline UPolyK to_cyclo(const UPolyQ& p)
{
    return p.map<Cyclo>([](const Rational& c) { return Cyclo(c); });
}

/// Smallest order at which every coefficient lives.
inline unsigned coefficient_order(const UPolyK& p)
{
    unsigned n = 1;
    for (const auto& c : p.coeffs())
        n = std::lcm(n, c.order());
    return n;
}

inline bool upoly_less(const UPolyK& a, const UPolyK& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
        int c = compare(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

/// Norm from Q(zeta_N)[z] down to Q[z]: the product of all Galois conjugates.
inline UPolyQ norm(const UPolyK& p, unsigned order)
{
    auto acc = UPolyK::constant(Cyclo(1));
    for (unsigned k = 1; k <= order; ++k) {
        if (std::gcd(k, order) != 1)
            continue;
        acc = acc * p.map<Cyclo>([k, order](const Cyclo& c) { return c.embed(order).conjugate(k); });
    }
    return acc.map<Rational>([](const Cyclo& c) { return c.rational_value(); });
}

namespace detail {

/// Irreducible monic factors over Q(zeta_N) of a square-free monic g, via
/// the norm of a shift g(z + s*zeta) that has a square-free norm.
inline std::vector<UPolyK> trager_squarefree(const UPolyK& g, unsigned order)
{
    if (g.degree() <= 1)
        return {g};
    const Cyclo zeta = primitive_root(order);
    for (long attempt = 0; attempt < 64; ++attempt) {
        // s = 0, 1, -1, 2, -2, ...
        const long s = (attempt + 1) / 2 * (attempt % 2 == 1 ? 1 : -1);
        const Cyclo a = zeta * Cyclo(s);
        const UPolyK shifted = s == 0 ? g : g.shift(a);
        const UPolyQ r = norm(shifted, order);
        if (!detail::squarefree_mod_prime(r))
            continue;
        std::vector<UPolyK> out;
        for (const auto& ri : factor_squarefree_rational(r)) {
            auto c = gcd(shifted, to_cyclo(ri));
            if (c.degree() <= 0)
                continue;
            out.push_back((s == 0 ? c : c.shift(-a)).monic());
        }
        return out;
    }
    throw ResourceError("no square-free norm found for extension factorization");
}

} // namespace detail

/// Complete factorization over Q(zeta_order). The order must be a multiple of
/// every coefficient's order; pass 0 to use the coefficients' own lcm.
inline UFactorization<Cyclo> factor_univariate_cyclo(const UPolyK& p, unsigned order = 0)
{
    if (p.is_zero())
        throw DomainError("cannot factor the zero polynomial");
    const unsigned need = coefficient_order(p);
    if (order == 0)
        order = need;
    if (order % need != 0)
        throw DomainError("ambient order does not contain the coefficients");
    UFactorization<Cyclo> out{p.lead().embed(order), {}};
    if (euler_phi(order) == 1) {
        auto q = p.map<Rational>([](const Cyclo& c) { return c.rational_value(); });
        for (auto& [g, e] : factor_univariate_rational(q).factors)
            out.factors.emplace_back(embed(to_cyclo(g), order), e);
        return out;
    }
    if (need == 1) {
        // Rational input: split over Q first, then each factor separately.
        auto q = p.map<Rational>([](const Cyclo& c) { return c.rational_value(); });
        for (auto& [g, e] : factor_univariate_rational(q).factors)
            for (auto& h : detail::trager_squarefree(embed(to_cyclo(g), order), order))
                out.factors.emplace_back(embed(h, order), e);
    } else {
        const UPolyK pe = embed(p, order);
        for (const auto& [g, e] : squarefree_decomposition(pe))
            for (auto& h : detail::trager_squarefree(g, order))
                out.factors.emplace_back(embed(h, order), e);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });
    return out;
}

} // namespace ritt

#endif // RITT_FACTOR_CYCLO_HPP
