#include <gtest/gtest.h>

#include <ritt/associate.hpp>

#include "oracle/oracle.hpp"
#include "util.hpp"

using namespace ritt;
using ritt::testing::ep;
using ritt::testing::lp;

namespace {

Exponent ex(const std::string& s)
{
    return exp(ep(s)).terms().begin()->first;
}

EPoly round_trip(const EPoly& f, BasisStrategy s)
{
    const SupportBasis b = support_basis(f, s);
    const Associate a = to_associate(f, b);
    return a.unit.to_epoly() * from_associate(a.q, b);
}

} // namespace

TEST(SupportBasis, SingleLine)
{
    const SupportBasis b = support_basis(ep("E(2*x)-1"));
    ASSERT_EQ(b.rank(), 1u);
    EXPECT_EQ(b.nu[0], ex("2*x"));
    EXPECT_EQ(b.exponent_matrix, (std::vector<std::vector<int>>{{0}, {1}}));
}

TEST(SupportBasis, EchelonRescalesByDenominators)
{
    // mu = (4x, 2x+2y) gives coordinate 1/2, M = 2, nu = (2x, x+y).
    const EPoly f = ep("E(4*x)+2*E(2*x)+1-E(2*x+2*y)");
    const SupportBasis b = support_basis(f, BasisStrategy::echelon);
    ASSERT_EQ(b.rank(), 2u);
    EXPECT_EQ(b.nu[0], ex("2*x"));
    EXPECT_EQ(b.nu[1], ex("x+y"));
    const Associate a = to_associate(f, b);
    EXPECT_EQ(a.q, lp(2, "y1^2+2*y1+1-y2^2"));
    EXPECT_EQ(a.unit.to_epoly(), EPoly(1));
}

TEST(SupportBasis, LatticeBasisSpansExponentLattice)
{
    // The exponent lattice of {4x, 2x, 0, 2x+2y} is 2Z x + 2Z y.
    const EPoly f = ep("E(4*x)+2*E(2*x)+1-E(2*x+2*y)");
    for (auto s : {BasisStrategy::lattice, BasisStrategy::lattice_reversed}) {
        const SupportBasis b = support_basis(f, s);
        ASSERT_EQ(b.rank(), 2u);
        const Exponent u = b.nu[0], v = b.nu[1];
        const bool ok = (u == ex("2*x") && v == ex("2*y")) || (u == ex("2*y") && v == ex("2*x"));
        EXPECT_TRUE(ok);
    }
}

TEST(SupportBasis, IdentityForIndependentAtoms)
{
    const SupportBasis b = support_basis(ep("E(x)+E(y)"));
    ASSERT_EQ(b.rank(), 2u);
    const Associate a = to_associate(ep("E(x)+E(y)"), b);
    EXPECT_EQ(a.q.size(), 2u);
    for (const auto& row : b.exponent_matrix) {
        int s = 0;
        for (int v : row)
            s += v;
        EXPECT_EQ(s, 1);
    }
}

TEST(SupportBasis, RejectsZeroAndUnits)
{
    EXPECT_THROW(support_basis(EPoly::zero(1)), DomainError);
    EXPECT_THROW(support_basis(ep("3*E(x)")), DomainError);
}

TEST(Associate, Examples)
{
    const EPoly f = ep("E(2*x)-1");
    const Associate a = to_associate(f, support_basis(f));
    EXPECT_EQ(a.q, lp(1, "y1-1"));
    EXPECT_EQ(a.unit.to_epoly(), EPoly(1));

    const EPoly g = ep("E(x)+E(y)+1");
    const Associate b = to_associate(g, support_basis(g));
    EXPECT_EQ(b.q, lp(2, "y1+y2+1"));
}

TEST(Associate, MismatchedBasisThrows)
{
    const SupportBasis b = support_basis(ep("E(2*x)-1"));
    EXPECT_THROW(to_associate(ep("E(3*x)-1"), b), DomainError);
    EXPECT_THROW(from_associate(lp(2, "y1+y2"), b), DomainError);
}

TEST(Associate, NegativeExponentsGoToUnit)
{
    const EPoly f = ep("E(-x) + 2 + E(x)");
    const Associate a = to_associate(f, support_basis(f));
    EXPECT_EQ(a.q, lp(1, "y1^2+2*y1+1"));
    EXPECT_EQ(a.unit.to_epoly(), ep("E(-x)"));
}

TEST(FromAssociate, InverseAndScalings)
{
    const EPoly f = ep("E(2*x)-1");
    const SupportBasis b = support_basis(f);
    EXPECT_EQ(from_associate(lp(1, "y1-1"), b, {1}, {1}), f);
    EXPECT_EQ(from_associate(lp(1, "y1-1"), b, {3}, {3}), f);
    EXPECT_EQ(from_associate(lp(1, "y1-1"), b, {1}, {2}), ep("E(x)-1"));
    EXPECT_THROW(from_associate(lp(1, "y1-1"), b, {0}, {1}), DomainError);
}

TEST(FromAssociate, HalfScalingRoundTrip)
{
    const EPoly f = ep("E(4*x)+2*E(2*x)+1-E(2*x+2*y)");
    const SupportBasis b = support_basis(f, BasisStrategy::echelon);
    const LaurentPoly q = lp(2, "y1^2+y1*y2+1");
    const EPoly h = from_associate(q, b, {1, 1}, {2, 2});
    EXPECT_EQ(h, ep("E(2*x)+E(3/2*x+1/2*y)+1"));

    SupportBasis half = b;
    for (auto& nu : half.nu)
        nu = Rational(1, 2) * nu;
    const SupportBasis hb = support_basis(h, BasisStrategy::echelon);
    const Associate a = to_associate(h, hb);
    EXPECT_EQ(a.unit.to_epoly() * from_associate(a.q, hb), h);
    EXPECT_EQ(from_associate(q, half), h);
}

TEST(Associate, RoundTripProperty)
{
    for (std::uint32_t s = 1; s <= 120; ++s) {
        oracle::RandomSpec spec;
        spec.seed = s;
        spec.max_height = 2;
        spec.max_dimension = 3;
        const EPoly f = oracle::random_epoly(spec);
        if (f.size() < 2)
            continue;
        for (auto st : {BasisStrategy::lattice, BasisStrategy::lattice_reversed, BasisStrategy::echelon,
                        BasisStrategy::echelon_reversed})
            EXPECT_EQ(round_trip(f, st), f) << "seed " << s;
    }
}

TEST(Associate, RankIsSupportDimension)
{
    for (std::uint32_t s = 1; s <= 80; ++s) {
        oracle::RandomSpec spec;
        spec.seed = s;
        spec.max_dimension = 3;
        const EPoly f = oracle::random_epoly(spec);
        if (f.size() < 2)
            continue;
        EXPECT_EQ(support_basis(f).rank(), support(f).dimension) << "seed " << s;
    }
}

TEST(Associate, ProductOfAssociatesUpToMonomial)
{
    const CoeffPoly w = CoeffPoly::variable(5);
    for (std::uint32_t s = 1; s <= 60; ++s) {
        oracle::RandomSpec spec;
        spec.seed = s;
        const EPoly g = normalize_epoly(oracle::random_epoly(spec)).second;
        spec.seed = s + 4000;
        const EPoly h = normalize_epoly(oracle::random_epoly(spec)).second;
        const EPoly f = g * h;
        if (g.size() < 2 || h.size() < 2)
            continue;
        // One basis covering the exponents of f, g and h; the fresh
        // coefficient variable keeps the three supports from cancelling.
        const SupportBasis b = support_basis(f + EPoly(w) * g + EPoly(w * w) * h);
        auto express = [&](const EPoly& e) {
            std::vector<Exponent> es;
            for (const auto& [a, c] : e.terms())
                es.push_back(a);
            const auto co = detail::coordinates_in(b.nu, es);
            LaurentPoly q(b.rank());
            std::size_t k = 0;
            for (const auto& [a, c] : e.terms()) {
                ExponentVector row;
                for (const auto& r : co[k])
                    row.push_back(detail::to_int_checked(r));
                q.add_term(row, c);
                ++k;
            }
            return q;
        };
        EXPECT_EQ(laurent_normalize(express(g) * express(h)).qpos, laurent_normalize(express(f)).qpos)
            << "seed " << s;
    }
}

TEST(Associate, SimpleIffEssentiallyOneVariable)
{
    for (std::uint32_t s = 1; s <= 80; ++s) {
        oracle::RandomSpec spec;
        spec.seed = s;
        spec.max_dimension = 2;
        const EPoly f = oracle::random_epoly(spec);
        if (f.size() < 2)
            continue;
        const Associate a = to_associate(f, support_basis(f));
        const bool one = essentially_one_variable(a.q).has_value();
        EXPECT_EQ(support_dimension_mod_units(f) == 1, one) << "seed " << s;
    }
}
