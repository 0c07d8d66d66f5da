#include <gtest/gtest.h>

#include <ritt/epoly.hpp>

#include "oracle/oracle.hpp"
#include "util.hpp"

using namespace ritt;
using ritt::testing::ep;

namespace {

Exponent ex(const std::string& s)
{
    const EPoly u = exp(ep(s));
    return u.terms().begin()->first;
}

EPoly rnd(std::uint32_t seed, unsigned height = 2)
{
    oracle::RandomSpec spec;
    spec.seed = seed;
    spec.max_height = height;
    spec.max_terms = 4;
    return oracle::random_epoly(spec);
}

} // namespace

TEST(EPoly, Arith)
{
    EXPECT_EQ(ep("E(x)*E(y)"), ep("E(x+y)"));
    EXPECT_EQ(ep("(E(x)-1)*(E(x)+1)"), ep("E(2*x)-1"));
    EXPECT_EQ(epoly_arith(ep("E(x)-1"), ep("E(x)+1"), RingOp::mul), ep("E(2*x)-1"));
    const EPoly f = ep("x*E(y) + 3 - E(E(x))");
    EXPECT_EQ(f * EPoly(1), f);
    EXPECT_EQ(f + EPoly::zero(1), f);
    EXPECT_EQ((f - f).is_zero(), true);
}

TEST(EPoly, MixedOrdersEmbed)
{
    const EPoly a = ep("zeta(4)*E(x)");
    const EPoly b = ep("zeta(6)*E(x)");
    EXPECT_EQ((a + b).order(), 12u);
    EXPECT_EQ(a * a, ep("-E(2*x)"));
}

TEST(EPoly, Height)
{
    EXPECT_EQ(ep("x + 1").height(), 0u);
    EXPECT_EQ(ep("E(x) + 1").height(), 1u);
    EXPECT_EQ(ep("E(x + E(x))").height(), 2u);
    const EPoly f = ep("E(E(x))"), g = ep("E(y)+1");
    EXPECT_EQ((f * g).height(), 2u);
}

TEST(EPoly, Exp)
{
    EXPECT_EQ(exp(EPoly(0)), EPoly(1));
    EXPECT_EQ(exp(ep("x+y")), ep("E(x)*E(y)"));
    // E(x + E(x)) = t^x * t^(t^x) has height 2.
    const EPoly h = exp(ep("x + E(x)"));
    EXPECT_EQ(h.size(), 1u);
    EXPECT_EQ(h.height(), 2u);
    EXPECT_EQ(h, exp(ep("x")) * exp(ep("E(x)")));
    // Constants are invisible to E.
    EXPECT_EQ(exp(ep("x + 5")), exp(ep("x")));
}

TEST(EPoly, ExpIsHomomorphism)
{
    for (std::uint32_t s = 1; s <= 60; ++s) {
        const EPoly f = rnd(s), g = rnd(s + 1000);
        const EPoly e = exp(f + g);
        EXPECT_EQ(e, exp(f) * exp(g)) << "seed " << s;
        EXPECT_EQ(e.size(), 1u);
        EXPECT_TRUE(e.terms().begin()->second.is_constant());
    }
}

TEST(EPoly, RingAxioms)
{
    for (std::uint32_t s = 1; s <= 80; ++s) {
        const EPoly a = rnd(s), b = rnd(s + 500), c = rnd(s + 900);
        EXPECT_EQ(a * (b + c), a * b + a * c) << "seed " << s;
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
    }
}

TEST(EPoly, NoZeroDivisors)
{
    for (std::uint32_t s = 1; s <= 80; ++s) {
        const EPoly a = rnd(s), b = rnd(s + 77);
        ASSERT_FALSE(a.is_zero());
        ASSERT_FALSE(b.is_zero());
        EXPECT_FALSE((a * b).is_zero()) << "seed " << s;
    }
}

TEST(EPoly, Support)
{
    EXPECT_EQ(support(ep("E(2*x)-1")).dimension, 1u);
    EXPECT_EQ(support(ep("E(4*x)+2*E(2*x)+1-E(2*x+2*y)")).dimension, 2u);
    // x and sqrt(2) x are independent over Q.
    EXPECT_EQ(support(ep("E(x)+E((zeta(8)+zeta(8)^7)*x)")).dimension, 2u);
    EXPECT_EQ(support(ep("E(x)+E(y)+1")).generators.size(), 3u);
    EXPECT_THROW(support(EPoly::zero(1)), DomainError);
}

TEST(EPoly, IsSimple)
{
    EXPECT_TRUE(is_simple(ep("E(2*x)-1")));
    EXPECT_FALSE(is_simple(ep("E(x)+E(y)+1")));
    EXPECT_TRUE(is_simple(ep("E(2*x-2*y)-1")));
    EXPECT_THROW(is_simple(EPoly::zero(1)), DomainError);
}

TEST(EPoly, SupportsOfFactorsAreContained)
{
    for (std::uint32_t s = 1; s <= 60; ++s) {
        const EPoly g = normalize_epoly(rnd(s)).second;
        const EPoly h = normalize_epoly(rnd(s + 321)).second;
        const EPoly f = g * h;
        EXPECT_TRUE(support_contained(g, f)) << "seed " << s;
        EXPECT_TRUE(support_contained(h, f)) << "seed " << s;
    }
}

TEST(Exponent, Compare)
{
    EXPECT_LT(exponent_compare(Exponent{}, ex("x")), 0);
    EXPECT_EQ(exponent_compare(ex("x+y"), ex("y+x")), 0);
    EXPECT_GT(exponent_compare(ex("2*x"), ex("x")), 0);
    EXPECT_LT(exponent_compare(-ex("x"), Exponent{}), 0);
}

TEST(Exponent, OrderIsCompatibleWithAddition)
{
    std::mt19937 rng(5);
    const std::vector<Exponent> pool{ex("x"), ex("y"), ex("x*y"), ex("E(x)"), ex("x*E(y)"), ex("E(E(x))")};
    std::uniform_int_distribution<int> c(-3, 3);
    auto rnd_exp = [&] {
        Exponent e;
        for (const auto& b : pool)
            e = e + Rational(c(rng), 1 + (c(rng) + 3) % 2) * b;
        return e;
    };
    for (int it = 0; it < 500; ++it) {
        const Exponent a = rnd_exp(), b = rnd_exp(), g = rnd_exp();
        const int ab = exponent_compare(a, b);
        EXPECT_EQ(exponent_compare(a + g, b + g), ab);
        EXPECT_EQ(exponent_compare(b, a), -ab);
        EXPECT_EQ(ab == 0, a == b);
    }
}

TEST(Exponent, StructuralAtomsAreCanonical)
{
    EXPECT_EQ(ex("E(x+y)"), ex("E(y+x)"));
    EXPECT_EQ(ex("E(x)*2"), ex("E(x)+E(x)"));
    EXPECT_NE(ex("E(x)"), ex("E(2*x)"));
}

TEST(EPoly, NormalizeUpToUnits)
{
    const EPoly f = ep("3*E(x)*(E(y) + 2)");
    auto [u, g] = normalize_epoly(f);
    EXPECT_EQ(g, ep("E(y) + 2"));
    EXPECT_EQ(u.to_epoly() * g, f);
}

TEST(EPoly, SupportLine)
{
    EXPECT_EQ(support_line(ep("E(4*x)-1")), ex("x"));
    EXPECT_EQ(support_line(ep("E(-2*x+2*y)-3")), ex("x-y"));
    EXPECT_THROW(support_line(ep("E(x)")), DomainError);
}
