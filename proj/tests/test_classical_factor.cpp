#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <ritt/classical_factor.hpp>

#include "oracle/oracle.hpp"
#include "util.hpp"

using namespace ritt;
using ritt::testing::lp;

namespace {

UPolyQ uq(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long a : c)
        v.emplace_back(a);
    return UPolyQ(std::move(v));
}

bool associates(const LaurentPoly& a, const LaurentPoly& b)
{
    auto q = exact_divide(laurent_to_flat(a), laurent_to_flat(b));
    return q && q->is_constant();
}

std::vector<unsigned> multiplicities(const ClassicalFactorization& f)
{
    std::vector<unsigned> m;
    for (const auto& [g, e] : f.factors)
        m.push_back(e);
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace

TEST(FactorQ, Univariate)
{
    // z^4 - 1 = (z - 1)(z + 1)(z^2 + 1)
    auto f = factor_univariate_rational(uq({-1, 0, 0, 0, 1}));
    ASSERT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(f.expand(), uq({-1, 0, 0, 0, 1}));

    // Swinnerton-Dyer style: z^4 - 10 z^2 + 1 is irreducible over Q.
    auto g = factor_univariate_rational(uq({1, 0, -10, 0, 1}));
    EXPECT_EQ(g.factors.size(), 1u);

    // 6 z^3 + 11 z^2 + 6 z + 1 = 6 (z + 1/3)(z + 1/2)(z + 1)
    auto h = factor_univariate_rational(uq({1, 6, 11, 6}));
    EXPECT_EQ(h.unit, Rational(6));
    EXPECT_EQ(h.factors.size(), 3u);
    EXPECT_EQ(h.expand(), uq({1, 6, 11, 6}));
}

TEST(FactorQ, RepeatedFactors)
{
    // (z - 2)^3 (z^2 + z + 1)
    const UPolyQ a = uq({-2, 1});
    const UPolyQ p = a * a * a * uq({1, 1, 1});
    auto f = factor_univariate_rational(p);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.expand(), p);
    std::vector<unsigned> m{f.factors[0].second, f.factors[1].second};
    std::sort(m.begin(), m.end());
    EXPECT_EQ(m, (std::vector<unsigned>{1, 3}));
}

TEST(FactorQ, CyclotomicPolynomialsAreIrreducible)
{
    // z^12 - 1 splits into one factor per divisor of 12.
    std::vector<Rational> c(13, Rational(0));
    c[0] = -1;
    c[12] = 1;
    auto f = factor_univariate_rational(UPolyQ(c));
    EXPECT_EQ(f.factors.size(), 6u);
}

TEST(FactorCyclo, SplitsOverExtension)
{
    // z^2 + 1 = (z - i)(z + i) over Q(zeta_4).
    auto f = factor_univariate_cyclo(to_cyclo(uq({1, 0, 1})), 4);
    EXPECT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.expand(), embed(to_cyclo(uq({1, 0, 1})), 4));

    // z^2 - 2 splits over Q(zeta_8) and not over Q(zeta_4).
    EXPECT_EQ(factor_univariate_cyclo(to_cyclo(uq({-2, 0, 1})), 8).factors.size(), 2u);
    EXPECT_EQ(factor_univariate_cyclo(to_cyclo(uq({-2, 0, 1})), 4).factors.size(), 1u);

    // z^3 - 2 stays irreducible over Q(zeta_3).
    EXPECT_EQ(factor_univariate_cyclo(to_cyclo(uq({-2, 0, 0, 1})), 3).factors.size(), 1u);
}

TEST(FactorCyclo, NonRationalInput)
{
    // (z - zeta_5)(z - zeta_5^2) over Q(zeta_5).
    const Cyclo w = Cyclo::zeta_power(5, 1);
    const UPolyK a({-w, Cyclo(1)}), b({-w * w, Cyclo(1)});
    auto f = factor_univariate_cyclo(a * b, 5);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.expand(), a * b);
}

TEST(FactorMultivariate, DifferenceOfPowers)
{
    // x^3 - y^6 = (x - y^2)(x^2 + x y^2 + y^4) over Q.
    const LaurentPoly q = lp(2, "y1^3 - y2^6");
    auto f = factor_multivariate(q);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.expand(2), q);

    // Over Q(zeta_3) the quadratic splits as well.
    auto g = factor_multivariate(q, 3);
    EXPECT_EQ(g.factors.size(), 3u);
    EXPECT_EQ(g.expand(2), q);
}

TEST(FactorMultivariate, Binomials)
{
    // y1^6*y2^3 - 8 is z^3 - 8 in z = y1^2*y2.
    const LaurentPoly q = lp(2, "y1^6*y2^3 - 8");
    auto f = factor_multivariate(q);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.expand(2), q);
    EXPECT_EQ(factor_multivariate(q, 3).factors.size(), 3u);

    const LaurentPoly r = lp(3, "4*y1^4*y3^2 - 9*y2^6");
    auto g = factor_multivariate(r);
    ASSERT_EQ(g.factors.size(), 2u);
    EXPECT_EQ(g.expand(3), r);
    EXPECT_EQ(factor_multivariate(lp(2, "y1^3*y2 + 5")).factors.size(), 1u);

    // Squares repeat: y1^4 - 2*y1^2*y2^2 + y2^4 is not a binomial, but
    // its square root y1^2 - y2^2 is.
    auto h = factor_multivariate(lp(2, "y1^4 - 2*y1^2*y2^2 + y2^4"));
    ASSERT_EQ(h.factors.size(), 2u);
    for (const auto& [w, e] : h.factors)
        EXPECT_EQ(e, 2u);
}

TEST(FactorMultivariate, IrreducibleTrinomial)
{
    auto f = factor_multivariate(lp(2, "y1 + y2 + 1"));
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].second, 1u);
}

TEST(FactorMultivariate, MonomialAndLaurentParts)
{
    const LaurentPoly q = lp(2, "y1^3*y2*(y1^2 - y2^2)", {2, 3});
    auto f = factor_multivariate(q);
    EXPECT_EQ(f.monomial, (ExponentVector{1, -2}));
    EXPECT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.expand(2), q);
}

TEST(FactorMultivariate, CoefficientVariables)
{
    // (x y1 + 1)(y1 - x) with x a coefficient variable.
    const LaurentPoly q = lp(1, "(x*y1 + 1)*(y1 - x)");
    auto f = factor_multivariate(q);
    EXPECT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.expand(1), q);
}

TEST(FactorMultivariate, Deterministic)
{
    const LaurentPoly q = lp(3, "(y1*y2 - y3^2 + 2)*(y1 + y2*y3 - 1)*(y1 + y2*y3 - 1)");
    auto a = factor_multivariate(q);
    auto b = factor_multivariate(q);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        EXPECT_EQ(a.factors[i], b.factors[i]);
    EXPECT_EQ(multiplicities(a), (std::vector<unsigned>{1, 2}));
    EXPECT_EQ(a.expand(3), q);
}

TEST(FactorMultivariate, DegreeCapRaisesResourceError)
{
    FactorOptions opt;
    opt.degree_cap = 4;
    // Reducible, so recombination runs and meets the cap.
    EXPECT_THROW(factor_multivariate(lp(2, "(y1^3 + y2^2 + 1)*(y1^2 - y2^3)"), 0, opt), ResourceError);
    // Linear in y2: settled without recombination.
    EXPECT_EQ(factor_multivariate(lp(2, "y1^5 + y2 + 1"), 0, opt).factors.size(), 1u);
    opt.certificate_degree_cap = 4;
    EXPECT_THROW(factor_multivariate(lp(2, "y1^5 + y2 + 1"), 0, opt), ResourceError);
    EXPECT_THROW(factor_multivariate(LaurentPoly(2)), DomainError);
}

TEST(FactorMultivariate, OracleDifferential)
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3), nt(1, 3);
    auto random_factor = [&] {
        LaurentPoly g(2);
        while (g.is_zero() || g.size() < 2) {
            g = LaurentPoly(2);
            const int k = nt(rng) + 1;
            for (int i = 0; i < k; ++i)
                g.add_term({e(rng), e(rng)}, CoeffPoly(c(rng)));
        }
        return g;
    };
    int compared = 0;
    for (int it = 0; it < 60; ++it) {
        const LaurentPoly q = random_factor() * random_factor();
        ClassicalFactorization want;
        try {
            want = oracle::oracle_factor_bounded(q, 6, 7);
        } catch (const ResourceError&) {
            continue;
        }
        const auto got = factor_multivariate(q);
        EXPECT_EQ(got.expand(2), q);
        EXPECT_EQ(got.monomial, want.monomial);
        ASSERT_EQ(multiplicities(got), multiplicities(want)) << "iteration " << it;
        for (const auto& [w, m] : want.factors) {
            const bool found = std::any_of(got.factors.begin(), got.factors.end(), [&](const auto& gf) {
                return gf.second == m && associates(gf.first, w);
            });
            EXPECT_TRUE(found);
        }
        ++compared;
    }
    EXPECT_GE(compared, 40);
}
