#ifndef RITT_CLASSICAL_FACTOR_HPP
#define RITT_CLASSICAL_FACTOR_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <ritt/cyclo.hpp>
#include <ritt/error.hpp>
#include <ritt/factor_cyclo.hpp>
#include <ritt/laurent.hpp>

namespace ritt {

/// Limits guarding the recombination search.
struct FactorOptions {
    /// Maximal total degree of a polynomial entering Kronecker recombination.
    int degree_cap = 24;
    /// Maximal total degree for the recombination-free paths (linear
    /// content split, line-restriction certificate).
    int certificate_degree_cap = 256;
    /// Maximal degree of the univariate Kronecker image.
    long image_degree_cap = 6000;
    /// Maximal number of candidate subsets tried during recombination.
    long subset_budget = 200000;
};

/// Complete factorization of a polynomial in Q(zeta_N)[v1..vm]:
/// f = unit * prod factor^multiplicity with every factor irreducible and
/// normalized (lex-greatest coefficient 1).
struct FlatFactorization {
    Cyclo unit{1};
    std::vector<std::pair<CoeffPoly, unsigned>> factors;

    CoeffPoly expand() const
    {
        CoeffPoly acc(unit);
        for (const auto& [g, e] : factors)
            acc = acc * g.pow(e);
        return acc;
    }
};

/// Deterministic total order on coefficient polynomials: terms compared from
/// the lex-greatest down, then the shorter polynomial first.
inline int coeffpoly_compare(const CoeffPoly& a, const CoeffPoly& b)
{
    auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
    for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
        if (int c = monomial_compare(ia->first, ib->first); c != 0)
            return c;
        if (int c = compare(ia->second, ib->second); c != 0)
            return c;
    }
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    return 0;
}

inline bool coeffpoly_less(const CoeffPoly& a, const CoeffPoly& b) { return coeffpoly_compare(a, b) < 0; }

/// Scale so that the lex-greatest coefficient is 1; returns the factor removed.
inline Cyclo make_lead_one(CoeffPoly& f)
{
    const Cyclo lc = f.lead().second;
    f = f * (Cyclo(1) / lc);
    return lc;
}

inline FlatFactorization factor_flat(const CoeffPoly& f, unsigned order, const FactorOptions& opt);

namespace detail {

inline void sort_and_merge(std::vector<std::pair<CoeffPoly, unsigned>>& fs)
{
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return coeffpoly_less(a.first, b.first); });
    std::vector<std::pair<CoeffPoly, unsigned>> out;
    for (auto& [g, e] : fs) {
        if (!out.empty() && out.back().first == g)
            out.back().second += e;
        else
            out.emplace_back(std::move(g), e);
    }
    fs = std::move(out);
}

/// True when f restricted to some line v = a + b*s keeps its total degree
/// and is irreducible there; then f itself is irreducible. False means
/// "not certified", not "reducible".
inline bool certified_irreducible(const CoeffPoly& f, const std::vector<std::size_t>& vars, unsigned order,
                                  int trials = 3)
{
    const int d = f.total_degree();
    if (vars.size() < 2 || d <= 0)
        return false;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(-9, 9);
    const std::size_t nv = vars.back() + 1;
    for (int k = 0; k < trials; ++k) {
        std::vector<UPolyK> line(nv);
        for (auto v : vars) {
            int b = 0;
            while (b == 0)
                b = pick(rng);
            line[v] = UPolyK({Cyclo(pick(rng)), Cyclo(b)});
        }
        UPolyK img;
        for (const auto& [m, c] : f.terms()) {
            auto t = UPolyK::constant(c);
            for (auto v : vars)
                for (int e = 0; e < monomial_at(m, v); ++e)
                    t = t * line[v];
            img = img + t;
        }
        if (img.degree() != d)
            continue;
        const auto uf = factor_univariate_cyclo(img, order);
        if (uf.factors.size() == 1 && uf.factors.front().second == 1)
            return true;
    }
    return false;
}

/// Factors a polynomial without monomial content whose variables `vars`
/// all occur; appends irreducible normalized factors to out.
inline void kronecker_factor(const CoeffPoly& f, const std::vector<std::size_t>& vars, unsigned order,
                             const FactorOptions& opt, std::vector<std::pair<CoeffPoly, unsigned>>& out)
{
    std::vector<long> radix(vars.size()), weight(vars.size());
    long w = 1, image_degree = 0;
    bool image_fits = true;
    for (std::size_t j = 0; j < vars.size() && image_fits; ++j) {
        radix[j] = f.degree(vars[j]) + 1;
        weight[j] = w;
        image_degree += (radix[j] - 1) * w;
        if (image_degree > opt.image_degree_cap || w > opt.image_degree_cap * radix[j])
            image_fits = false;
        w *= radix[j];
    }
    auto forward = [&](const Monomial& m) {
        long e = 0;
        for (std::size_t j = 0; j < vars.size(); ++j)
            e += monomial_at(m, vars[j]) * weight[j];
        return e;
    };
    auto backward = [&](const UPolyK& u) {
        CoeffPoly r;
        const std::size_t nv = vars.empty() ? 0 : vars.back() + 1;
        for (std::size_t e = 0; e < u.size(); ++e) {
            if (u.coeffs()[e].is_zero())
                continue;
            Monomial m(nv, 0);
            long rest = static_cast<long>(e);
            for (std::size_t j = vars.size(); j-- > 0;) {
                m[vars[j]] = static_cast<int>(rest / weight[j]);
                rest %= weight[j];
            }
            r.add_term(m, u.coeffs()[e]);
        }
        return r;
    };

    // A binomial c1*y^a + c2*y^b (disjoint supports) is c1*z^g + c2 in the
    // monomial z = y^((a-b)/g), g = gcd(a-b), up to a unimodular change of
    // variables; factors of the univariate map back term by term.
    if (f.size() == 2) {
        auto it = f.terms().begin();
        const auto& [ma, ca] = *it++;
        const auto& [mb, cb] = *it;
        int g = 0;
        for (auto v : vars)
            g = std::gcd(g, monomial_at(ma, v) - monomial_at(mb, v));
        std::vector<Cyclo> u(static_cast<std::size_t>(g) + 1, Cyclo(0));
        u.front() = cb;
        u.back() = ca;
        const std::size_t nv = vars.back() + 1;
        for (const auto& [h, e] : factor_univariate_cyclo(UPolyK(std::move(u)), order).factors) {
            const int dh = h.degree();
            CoeffPoly r;
            for (int k = 0; k <= dh; ++k) {
                if (h.coeffs()[static_cast<std::size_t>(k)].is_zero())
                    continue;
                Monomial m(nv, 0);
                for (auto v : vars)
                    m[v] = (k * monomial_at(ma, v) + (dh - k) * monomial_at(mb, v)) / g;
                r.add_term(m, h.coeffs()[static_cast<std::size_t>(k)]);
            }
            make_lead_one(r);
            out.emplace_back(std::move(r), e);
        }
        return;
    }

    // f = a*v + b with v of degree 1: the content gcd(a, b) is found among
    // the factors of the smaller coefficient; the primitive rest is linear
    // in v, hence irreducible.
    for (auto v : vars) {
        if (f.degree(v) != 1)
            continue;
        CoeffPoly a, b;
        for (const auto& [m, c] : f.terms()) {
            Monomial k = m;
            if (v < k.size())
                k[v] = 0;
            (monomial_at(m, v) == 1 ? a : b).add_term(k, c);
        }
        const CoeffPoly& small = a.size() <= b.size() ? a : b;
        CoeffPoly rest = f;
        if (!small.is_constant())
            for (const auto& [p, e] : factor_flat(small, order, opt).factors) {
                if (p.size() == 1)
                    continue;
                for (unsigned i = 0; i < e; ++i) {
                    auto q = exact_divide(rest, p);
                    if (!q)
                        break;
                    out.emplace_back(p, 1);
                    rest = std::move(*q);
                }
            }
        make_lead_one(rest);
        out.emplace_back(std::move(rest), 1);
        return;
    }

    if (certified_irreducible(f, vars, order)) {
        CoeffPoly g = f;
        make_lead_one(g);
        out.emplace_back(std::move(g), 1);
        return;
    }
    if (f.total_degree() > opt.degree_cap)
        throw ResourceError("total degree " + std::to_string(f.total_degree()) + " exceeds the degree cap " +
                            std::to_string(opt.degree_cap));
    if (!image_fits)
        throw ResourceError("Kronecker image degree exceeds the configured cap");

    std::vector<Cyclo> img(static_cast<std::size_t>(image_degree) + 1, Cyclo(0));
    for (const auto& [m, c] : f.terms())
        img[static_cast<std::size_t>(forward(m))] = c;
    const auto uf = factor_univariate_cyclo(UPolyK(std::move(img)), order);

    std::vector<UPolyK> pieces;
    for (const auto& [g, e] : uf.factors)
        for (unsigned i = 0; i < e; ++i)
            pieces.push_back(g);

    CoeffPoly rest = f;
    long budget = opt.subset_budget;
    std::size_t s = 1;
    while (2 * s <= pieces.size()) {
        const std::size_t m = pieces.size();
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        bool progressed = false;
        for (;;) {
            if (--budget < 0)
                throw ResourceError("factor recombination exceeded its subset budget");
            auto prod = UPolyK::constant(Cyclo(1));
            for (auto i : idx)
                prod = prod * pieces[i];
            CoeffPoly cand = backward(prod);
            bool fits = true;
            for (auto v : vars)
                if (cand.degree(v) > rest.degree(v))
                    fits = false;
            if (fits) {
                if (auto q = exact_divide(rest, cand)) {
                    make_lead_one(cand);
                    out.emplace_back(std::move(cand), 1);
                    rest = std::move(*q);
                    std::vector<UPolyK> keep;
                    for (std::size_t i = 0, k = 0; i < m; ++i) {
                        if (k < s && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        keep.push_back(std::move(pieces[i]));
                    }
                    pieces = std::move(keep);
                    progressed = true;
                    std::vector<std::size_t> live;
                    for (auto v : vars)
                        if (rest.involves(v))
                            live.push_back(v);
                    if (certified_irreducible(rest, live, order))
                        pieces.clear();
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
    if (!rest.is_constant()) {
        make_lead_one(rest);
        out.emplace_back(std::move(rest), 1);
    }
}

} // namespace detail

/// Complete factorization of f in Q(zeta_order)[v1..vm]. The order must
/// contain every coefficient; 0 selects the coefficients' own order.
inline FlatFactorization factor_flat(const CoeffPoly& f, unsigned order = 0, const FactorOptions& opt = {})
{
    if (f.is_zero())
        throw DomainError("cannot factor the zero polynomial");
    unsigned need = 1;
    for (const auto& [m, c] : f.terms())
        need = std::lcm(need, c.order());
    if (order == 0)
        order = need;
    if (order % need != 0)
        throw DomainError("ambient order does not contain the coefficients");
    FlatFactorization out;
    const std::size_t nv = f.nvars();
    Monomial low(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        low[v] = f.min_degree(v);
        if (low[v] > 0)
            out.factors.emplace_back(CoeffPoly::variable(v), static_cast<unsigned>(low[v]));
    }
    Monomial neg(low);
    for (auto& e : neg)
        e = -e;
    CoeffPoly g = f.shift(neg);
    if (g.total_degree() > opt.certificate_degree_cap)
        throw ResourceError("total degree " + std::to_string(g.total_degree()) + " exceeds the certificate cap " +
                            std::to_string(opt.certificate_degree_cap));
    out.unit = g.lead().second.embed(order);

    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < nv; ++v)
        if (g.involves(v))
            vars.push_back(v);
    if (!vars.empty()) {
        std::vector<std::pair<CoeffPoly, unsigned>> found;
        detail::kronecker_factor(g, vars, order, opt, found);
        out.factors.insert(out.factors.end(), found.begin(), found.end());
    }
    for (auto& [h, e] : out.factors)
        h = h.map<Cyclo>([order](const Cyclo& c) { return c.embed(order); });
    detail::sort_and_merge(out.factors);
    return out;
}

/// Factorization of a Laurent polynomial over R0 = Q(zeta_N)[x]:
/// Q = unit * y^monomial * prod factor^multiplicity. Factors free of y are
/// the content of Q in R0, themselves split into irreducibles.
struct ClassicalFactorization {
    Cyclo unit{1};
    ExponentVector monomial;
    std::vector<std::pair<LaurentPoly, unsigned>> factors;

    LaurentPoly expand(std::size_t p) const
    {
        LaurentPoly acc = LaurentPoly::term(p, CoeffPoly(unit), monomial.empty() ? ExponentVector(p, 0) : monomial);
        for (const auto& [g, e] : factors)
            for (unsigned i = 0; i < e; ++i)
                acc = acc * g;
        return acc;
    }
};

inline ClassicalFactorization factor_multivariate(const LaurentPoly& q, unsigned order = 0,
                                                  const FactorOptions& opt = {})
{
    if (q.is_zero())
        throw DomainError("cannot factor the zero polynomial");
    const std::size_t p = q.ambient();
    auto [mono, qpos] = laurent_normalize(q);
    const auto flat = factor_flat(laurent_to_flat(qpos), order, opt);
    ClassicalFactorization out;
    out.unit = flat.unit;
    out.monomial = mono;
    for (const auto& [g, e] : flat.factors)
        out.factors.emplace_back(laurent_from_flat(g, p), e);
    return out;
}

/// Univariate factorization over Q with the classical result shape
/// (one variable, monic factors).
inline ClassicalFactorization factor_univariate_rational_classical(const UPolyQ& p)
{
    auto uf = factor_univariate_rational(p);
    ClassicalFactorization out;
    out.unit = Cyclo(uf.unit);
    out.monomial = {0};
    for (const auto& [g, e] : uf.factors) {
        SparsePoly<CoeffPoly> s;
        for (std::size_t k = 0; k < g.size(); ++k)
            s.add_term(Monomial{static_cast<int>(k)}, CoeffPoly(Cyclo(g.coeffs()[k])));
        out.factors.emplace_back(LaurentPoly(1, std::move(s)), e);
    }
    return out;
}

} // namespace ritt

#endif // RITT_CLASSICAL_FACTOR_HPP
