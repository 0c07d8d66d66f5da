#include <gtest/gtest.h>

#include <random>

#include <ritt/laurent.hpp>
#include <ritt/sparse_poly.hpp>
#include <ritt/upoly.hpp>

#include "util.hpp"

using namespace ritt;
using ritt::testing::cp;
using ritt::testing::lp;

TEST(SparsePoly, Arithmetic)
{
    EXPECT_EQ(cp("(x-y)*(x+y)"), cp("x^2-y^2"));
    EXPECT_EQ(cp("x+y") + CoeffPoly(), cp("x+y"));
    EXPECT_EQ(cp("x-x"), CoeffPoly());
    EXPECT_EQ(cp("x*y^2").total_degree(), 3);
    EXPECT_EQ(cp("x^3*y + y^5").degree(1), 5);
}

TEST(SparsePoly, ExactDivide)
{
    auto q = exact_divide(cp("x^3-y^6"), cp("x-y^2"));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, cp("x^2+x*y^2+y^4"));
    EXPECT_FALSE(exact_divide(cp("x^2+1"), cp("x+1")));
}

TEST(UPoly, GcdAndSquarefree)
{
    using P = UPoly<Rational>;
    const P a({Rational(-1), Rational(0), Rational(1)}); // z^2 - 1
    const P b({Rational(1), Rational(1)});               // z + 1
    EXPECT_EQ(gcd(a, b), b);
    const P sq = a * b; // (z-1)(z+1)^2
    EXPECT_FALSE(is_squarefree(sq));
    EXPECT_TRUE(is_squarefree(a));
}

TEST(Laurent, Arith)
{
    EXPECT_EQ(laurent_arith(lp(2, "y1-y2"), lp(2, "y1+y2"), RingOp::mul), lp(2, "y1^2-y2^2"));
    EXPECT_EQ(laurent_arith(lp(2, "y1+3"), LaurentPoly(2), RingOp::add), lp(2, "y1+3"));
    EXPECT_EQ(lp(2, "y1^2+y1*y2+1") * lp(2, "y1^2-y1*y2+1"), lp(2, "y1^4+2*y1^2+1-y1^2*y2^2"));
}

TEST(Laurent, AmbientMismatchThrows)
{
    EXPECT_THROW(lp(2, "y1") + lp(3, "y1"), DomainError);
}

TEST(Laurent, PrimaryDecompose)
{
    // 3x^2y - 5y^3 + x^4 = P(x^2, y)
    auto a = primary_decompose(lp(2, "3*y1^2*y2 - 5*y2^3 + y1^4"));
    EXPECT_EQ(a.d, (std::vector<int>{2, 1}));
    EXPECT_EQ(a.primary, lp(2, "3*y1*y2 - 5*y2^3 + y1^2"));

    const LaurentPoly r = lp(2, "3*y1^2*y2 - 5*y2^3 + y1^3");
    auto b = primary_decompose(r);
    EXPECT_EQ(b.d, (std::vector<int>{1, 1}));
    EXPECT_EQ(b.primary, r);
    EXPECT_TRUE(is_primary(r));

    auto c = primary_decompose(lp(2, "y1^4+2*y1^2+1-y1^2*y2^2"));
    EXPECT_EQ(c.d, (std::vector<int>{2, 2}));
    EXPECT_EQ(c.primary, lp(2, "y1^2+2*y1+1-y1*y2"));
}

TEST(Laurent, PrimaryDecomposeRecomposes)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
    for (int it = 0; it < 200; ++it) {
        LaurentPoly q(2);
        for (int k = 0; k < 4; ++k)
            q.add_term({2 * e(rng), 3 * e(rng)}, CoeffPoly(c(rng)));
        if (q.is_zero())
            continue;
        auto pd = primary_decompose(q);
        EXPECT_EQ(power_substitute(pd.primary, pd.d), q);
        EXPECT_TRUE(is_primary(pd.primary));
    }
}

TEST(Laurent, PowerSubstitute)
{
    EXPECT_EQ(power_substitute(lp(2, "y1-y2"), {3, 6}), lp(2, "y1^3-y2^6"));
    const LaurentPoly q = lp(2, "y1^2+x*y2+1");
    EXPECT_EQ(power_substitute(q, {1, 1}), q);
    EXPECT_EQ(power_substitute(lp(2, "y1^2+2*y1+1-y1*y2"), {2, 2}), lp(2, "y1^4+2*y1^2+1-y1^2*y2^2"));
    EXPECT_THROW(power_substitute(q, {0, 1}), DomainError);
}

TEST(Laurent, Twist)
{
    EXPECT_EQ(twist(lp(1, "y1-1"), 0, Cyclo(-1)), lp(1, "-y1-1"));
    const LaurentPoly q = lp(2, "y1^2+y1*y2+1");
    EXPECT_EQ(twist(q, 0, Cyclo(1)), q);
    EXPECT_EQ(twist(q, 0, Cyclo(-1)), lp(2, "y1^2-y1*y2+1"));
}

TEST(Laurent, EssentiallyOneVariable)
{
    // x^2 y (3 x^3 y^9 - 2 x^2 y^6 + 1)
    auto w = essentially_one_variable(lp(2, "y1^2*y2*(3*y1^3*y2^9 - 2*y1^2*y2^6 + 1)"));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->tau1, (ExponentVector{2, 1}));
    EXPECT_EQ(w->tau2, (ExponentVector{1, 3}));
    EXPECT_EQ(w->p, UPoly<CoeffPoly>({CoeffPoly(1), CoeffPoly(0), CoeffPoly(-2), CoeffPoly(3)}));

    EXPECT_FALSE(essentially_one_variable(lp(2, "y1+y2+1")));

    auto v = essentially_one_variable(lp(1, "y1-1"));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->tau1, (ExponentVector{0}));
    EXPECT_EQ(v->tau2, (ExponentVector{1}));
    EXPECT_EQ(v->p, UPoly<CoeffPoly>({CoeffPoly(-1), CoeffPoly(1)}));
}

TEST(Laurent, EssentiallyOneVariableReconstructs)
{
    const LaurentPoly q = lp(2, "y1^5*y2^2 - 4*y1^3*y2 + 7*y1", {0, 1});
    auto w = essentially_one_variable(q);
    ASSERT_TRUE(w);
    LaurentPoly acc(2), z = LaurentPoly::term(2, CoeffPoly(1), w->tau2);
    LaurentPoly zk = LaurentPoly::term(2, CoeffPoly(1), w->tau1);
    for (std::size_t k = 0; k < w->p.coeffs().size(); ++k) {
        acc = acc + zk * w->p.coeffs()[k];
        zk = zk * z;
    }
    EXPECT_EQ(acc, q);
}

TEST(Laurent, Normalize)
{
    auto a = laurent_normalize(lp(2, "y2 + y1", {1, 0}));
    EXPECT_EQ(a.monomial, (ExponentVector{-1, 0}));
    EXPECT_EQ(a.qpos, lp(2, "y2 + y1"));

    auto b = laurent_normalize(lp(2, "y1^2-y2^2"));
    EXPECT_EQ(b.monomial, (ExponentVector{0, 0}));
    EXPECT_EQ(b.qpos, lp(2, "y1^2-y2^2"));

    auto c = laurent_normalize(lp(2, "y1^2*y2*(y1+1)"));
    EXPECT_EQ(c.monomial, (ExponentVector{2, 1}));
    EXPECT_EQ(c.qpos, lp(2, "y1+1"));
}

TEST(Laurent, FlatRoundTrip)
{
    const LaurentPoly q = lp(2, "x*y1^2 + (x^2+1)*y2 + 3");
    EXPECT_EQ(laurent_from_flat(laurent_to_flat(q), 2), q);
}
