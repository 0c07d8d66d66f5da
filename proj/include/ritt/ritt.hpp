#ifndef RITT_RITT_HPP
#define RITT_RITT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ritt/associate.hpp>
#include <ritt/classical_factor.hpp>
#include <ritt/epoly.hpp>
#include <ritt/error.hpp>
#include <ritt/laurent.hpp>

namespace ritt {

struct EngineOptions {
    FactorOptions factor;
    /// Maximal exponential height accepted as input.
    unsigned height_cap = 3;
    BasisStrategy basis = BasisStrategy::lattice;
};

/// Outcome of the bounded search over V(y1^t1, ..., yp^tp), 1 <= tj <= M^2.
struct PowerSearchResult {
    std::vector<int> t_star;
    std::size_t q = 1;
    /// Normalized primary irreducible factors of V(y^t_star), with repeats.
    std::vector<LaurentPoly> factors;
    /// Scalar with V(y^t_star) = unit * prod factors.
    Cyclo unit{1};
    int m = 0;
    unsigned order = 1;
};

/// Deterministic order on Laurent polynomials (through the flat form).
inline bool laurent_less(const LaurentPoly& a, const LaurentPoly& b)
{
    return coeffpoly_less(laurent_to_flat(a), laurent_to_flat(b));
}

namespace detail {

/// Normalized factor list with repeats, and the scalar unit.
inline std::pair<Cyclo, std::vector<LaurentPoly>> factor_list(const LaurentPoly& w, unsigned order,
                                                              const FactorOptions& opt)
{
    const auto cf = factor_multivariate(w, order, opt);
    std::vector<LaurentPoly> out;
    for (const auto& [g, e] : cf.factors)
        for (unsigned i = 0; i < e; ++i)
            out.push_back(g);
    return {cf.unit, out};
}

inline LaurentPoly normalize_laurent_factor(const LaurentPoly& g)
{
    CoeffPoly flat = laurent_to_flat(laurent_normalize(g).qpos);
    make_lead_one(flat);
    return laurent_from_flat(flat, g.ambient());
}

} // namespace detail

/// Search the box [1, M^2]^p for the tuple maximizing the number of primary
/// irreducible factors of V(y^t); ties go to the lexicographically smallest
/// tuple. V must be primary, irreducible and not essentially 1-variable.
inline PowerSearchResult power_reducibility_search(const LaurentPoly& v, unsigned order = 1,
                                                   const FactorOptions& opt = {})
{
    if (v.is_zero())
        throw DomainError("power search on the zero polynomial");
    if (!is_primary(v))
        throw DomainError("power search requires a primary polynomial");
    if (essentially_one_variable(v))
        throw DomainError("power search requires a polynomial that is not essentially 1-variable");
    const std::size_t p = v.ambient();
    int m = 0;
    for (int d : y_degrees(v))
        m = std::max(m, d);
    // A variable V does not involve leaves V(y^t) unchanged, so its entry
    // stays at 1, the lexicographically smallest choice.
    std::vector<int> box(p, 1);
    for (std::size_t j = 0; j < p; ++j)
        if (v.poly().involves(j))
            box[j] = m * m;
    {
        // The largest tuple has the largest degree; fail before searching.
        const auto [mono, top] = laurent_normalize(power_substitute(v, box));
        const int deg = laurent_to_flat(top).total_degree();
        if (deg > opt.certificate_degree_cap)
            throw ResourceError("power search box reaches total degree " + std::to_string(deg) +
                                ", above the certificate cap " + std::to_string(opt.certificate_degree_cap));
    }

    PowerSearchResult best;
    best.m = m;
    best.order = order;
    bool have = false;
    std::vector<int> t(p, 1);
    for (;;) {
        auto [unit, fs] = detail::factor_list(power_substitute(v, t), order, opt);
        if (!have) {
            // t = (1, ..., 1): the irreducibility precondition.
            if (fs.size() != 1 || fs.front().poly().nvars() == 0)
                throw DomainError("power search requires an irreducible polynomial");
        }
        const bool all_primary = std::all_of(fs.begin(), fs.end(), [](const LaurentPoly& g) { return is_primary(g); });
        if (all_primary && (!have || fs.size() > best.q)) {
            best.t_star = t;
            best.q = fs.size();
            best.factors = fs;
            best.unit = unit;
            have = true;
        }
        std::size_t k = p;
        while (k > 0 && t[k - 1] == box[k - 1]) {
            t[k - 1] = 1;
            --k;
        }
        if (k == 0)
            break;
        ++t[k - 1];
    }
    return best;
}

/// Reducibility tuples of Q(y) = P(y^d) from those of P: t_ij / gcd(t_ij, d_j).
inline std::vector<std::vector<int>> nonprimary_adjust(const std::vector<std::vector<int>>& t_sets,
                                                       const std::vector<int>& d)
{
    std::vector<std::vector<int>> out;
    for (const auto& t : t_sets) {
        if (t.size() != d.size())
            throw DomainError("tuple length differs from the exponent tuple");
        std::vector<int> r(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t[j] <= 0 || d[j] <= 0)
                throw DomainError("tuple entries must be positive");
            r[j] = t[j] / std::gcd(t[j], d[j]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// Cross-check of the orbit structure: the factors of `result` multiply to
/// V(y^t*), and over Q(zeta_lcm(N, t*)) every twist y_i -> eps_i^k y_i by a
/// primitive t*_i-th root of unity permutes the irreducible factors.
inline bool orbit_check(const LaurentPoly& v, const PowerSearchResult& result, const FactorOptions& opt = {})
{
    const std::size_t p = v.ambient();
    if (result.t_star.size() != p || result.factors.size() != result.q)
        return false;
    const LaurentPoly w = power_substitute(v, result.t_star);
    LaurentPoly prod = LaurentPoly::constant(p, CoeffPoly(result.unit));
    for (const auto& g : result.factors)
        prod = prod * g;
    if (prod != w)
        return false;
    if (result.q == 1)
        return true;

    unsigned big = result.order;
    for (int ti : result.t_star)
        big = std::lcm(big, static_cast<unsigned>(ti));
    auto [unit, fs] = detail::factor_list(w, big, opt);
    std::sort(fs.begin(), fs.end(), laurent_less);
    for (std::size_t i = 0; i < p; ++i) {
        const int ti = result.t_star[i];
        if (ti == 1)
            continue;
        const Cyclo eps = primitive_root(static_cast<unsigned>(ti));
        for (int k = 1; k < ti; ++k) {
            std::vector<LaurentPoly> moved;
            for (const auto& g : fs)
                moved.push_back(detail::normalize_laurent_factor(twist(g, i, eps.pow(k))));
            std::sort(moved.begin(), moved.end(), laurent_less);
            if (moved != fs)
                return false;
        }
    }
    return true;
}

/// Same-support simple factors multiplied together.
struct SimpleBlock {
    Exponent support_line;
    EPoly block;
    /// The irreducible simple parts that were multiplied (diagnostic).
    std::vector<std::pair<EPoly, unsigned>> parts;
};

/// A power search performed while factoring, kept for cross-checks.
struct PowerSearchRecord {
    LaurentPoly v;
    PowerSearchResult result;
};

/// f = unit * prod classical^m * prod blocks * prod nonsimple^m.
struct Factorization {
    Unit unit;
    std::vector<std::pair<CoeffPoly, unsigned>> classical;
    std::vector<SimpleBlock> simple_blocks;
    std::vector<std::pair<EPoly, unsigned>> nonsimple;
    unsigned order = 1;
    std::vector<PowerSearchRecord> searches;

    EPoly expand() const
    {
        EPoly acc = unit.to_epoly().embed(std::lcm(order, unit.order));
        for (const auto& [c, e] : classical)
            acc = acc * EPoly(c, order).pow(e);
        for (const auto& b : simple_blocks)
            acc = acc * b.block;
        for (const auto& [g, e] : nonsimple)
            acc = acc * g.pow(e);
        return acc;
    }
};

/// Deterministic total order on exponential polynomials.
inline int epoly_compare(const EPoly& a, const EPoly& b)
{
    const unsigned m = std::lcm(a.order(), b.order());
    const EPoly x = a.embed(m), y = b.embed(m);
    auto i = x.terms().rbegin(), j = y.terms().rbegin();
    for (; i != x.terms().rend() && j != y.terms().rend(); ++i, ++j) {
        if (int c = exponent_compare(i->first, j->first); c != 0)
            return c;
        if (int c = coeffpoly_compare(i->second, j->second); c != 0)
            return c;
    }
    if (x.size() != y.size())
        return x.size() < y.size() ? -1 : 1;
    return 0;
}

inline bool epoly_less(const EPoly& a, const EPoly& b) { return epoly_compare(a, b) < 0; }

inline bool verify_factorization(const EPoly& f, const Factorization& fac)
{
    try {
        return fac.expand() == f;
    } catch (const Error&) {
        return false;
    }
}

namespace detail {

inline void add_part(std::vector<std::pair<EPoly, unsigned>>& parts, const EPoly& g, unsigned e)
{
    for (auto& [h, k] : parts)
        if (h == g) {
            k += e;
            return;
        }
    parts.emplace_back(g, e);
}

} // namespace detail

inline Factorization factor_epoly(const EPoly& f, const EngineOptions& opt = {})
{
    if (f.is_zero())
        throw DomainError("cannot factor the zero polynomial");
    if (f.height() > opt.height_cap)
        throw ResourceError("exponential height " + std::to_string(f.height()) + " exceeds the height cap " +
                            std::to_string(opt.height_cap));
    const unsigned n = f.order();
    Factorization out;
    out.order = n;

    std::vector<std::pair<CoeffPoly, unsigned>> classical;
    std::map<Exponent, std::vector<std::pair<EPoly, unsigned>>, ExponentLess> simple;
    std::vector<std::pair<EPoly, unsigned>> nonsimple;

    auto place = [&](const EPoly& g, unsigned e) {
        auto [u, h] = normalize_epoly(g);
        if (h.size() == 1)
            return; // a unit; absorbed below
        if (support_dimension_mod_units(h) == 1)
            detail::add_part(simple[support_line(h)], h, e);
        else
            detail::add_part(nonsimple, h, e);
    };

    if (f.size() == 1) {
        const auto flat = factor_flat(f.terms().begin()->second, n, opt.factor);
        classical = flat.factors;
    } else {
        const SupportBasis basis = support_basis(f, opt.basis);
        const auto assoc = to_associate(f, basis);
        const auto cf = factor_multivariate(assoc.q, n, opt.factor);
        for (const auto& [w, e] : cf.factors) {
            if (w.poly().nvars() == 0) {
                classical.emplace_back(w.poly().constant_term(), e);
            } else if (essentially_one_variable(w)) {
                place(from_associate(w, basis), e);
            } else {
                const auto pd = primary_decompose(w);
                auto res = power_reducibility_search(pd.primary, n, opt.factor);
                std::vector<long> num(pd.d.begin(), pd.d.end());
                std::vector<long> den(res.t_star.begin(), res.t_star.end());
                for (const auto& vj : res.factors)
                    place(from_associate(vj, basis, num, den), e);
                out.searches.push_back({pd.primary, std::move(res)});
            }
        }
    }

    detail::sort_and_merge(classical);
    out.classical = classical;
    for (auto& [line, parts] : simple) {
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return epoly_less(a.first, b.first); });
        EPoly block(1);
        for (const auto& [g, e] : parts)
            block = block * g.pow(e);
        out.simple_blocks.push_back({line, block.embed(std::lcm(block.order(), n)), parts});
    }
    std::sort(nonsimple.begin(), nonsimple.end(), [](const auto& a, const auto& b) { return epoly_less(a.first, b.first); });
    out.nonsimple = nonsimple;

    // The unit is whatever remains; it must be a single term.
    out.unit = Unit{Cyclo(1), Exponent{}, n};
    const EPoly prod = out.expand();
    const unsigned m = std::lcm(f.order(), prod.order());
    const EPoly fe = f.embed(m), pe = prod.embed(m);
    const Cyclo scalar = fe.terms().rbegin()->second.lead().second / pe.terms().rbegin()->second.lead().second;
    out.unit = Unit{scalar, fe.low_exponent() - pe.low_exponent(), m};
    if (!verify_factorization(f, out))
        throw Error("factorization failed to reconstruct its input");
    return out;
}

} // namespace ritt

#endif // RITT_RITT_HPP
