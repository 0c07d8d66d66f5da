#include <gtest/gtest.h>

#include <cstdlib>
#include <cstring>
#include <random>

#include <ritt/ritt.hpp>

#include "oracle/oracle.hpp"
#include "util.hpp"

using namespace ritt;
using ritt::testing::lp;

namespace {

/// Upper bound on instance counts of the randomized suites (--oracle-budget).
long g_budget = -1;

long budget(long wanted)
{
    return g_budget < 0 ? wanted : std::min(wanted, g_budget);
}

std::size_t count_with_repeats(const ClassicalFactorization& f)
{
    std::size_t n = 0;
    for (const auto& [g, e] : f.factors)
        n += e;
    return n;
}

EPoly rnd(std::uint32_t seed)
{
    oracle::RandomSpec spec;
    spec.seed = seed;
    spec.max_height = 2;
    spec.max_terms = 4;
    spec.max_dimension = 2;
    return oracle::random_epoly(spec);
}

struct Parts {
    std::map<CoeffPoly, unsigned, decltype(&coeffpoly_less)> classical{&coeffpoly_less};
    std::map<EPoly, unsigned, decltype(&epoly_less)> nonsimple{&epoly_less};
    std::map<Exponent, EPoly, ExponentLess> blocks;

    void add(const Factorization& f)
    {
        for (const auto& [c, e] : f.classical)
            classical[c] += e;
        for (const auto& [g, e] : f.nonsimple)
            nonsimple[g] += e;
        for (const auto& b : f.simple_blocks) {
            auto it = blocks.find(b.support_line);
            if (it == blocks.end())
                blocks.emplace(b.support_line, b.block);
            else
                it->second = it->second * b.block;
        }
    }

    bool operator==(const Parts& o) const
    {
        if (classical != o.classical || nonsimple != o.nonsimple || blocks.size() != o.blocks.size())
            return false;
        for (const auto& [line, b] : blocks) {
            auto it = o.blocks.find(line);
            if (it == o.blocks.end() || !(it->second == b))
                return false;
        }
        return true;
    }
};

} // namespace

TEST(OracleFactor, Examples)
{
    EXPECT_EQ(oracle::oracle_factor_bounded(lp(2, "y1^3 - y2^6"), 6).factors.size(), 2u);
    EXPECT_EQ(oracle::oracle_factor_bounded(lp(2, "y1 + y2 + 1"), 6).factors.size(), 1u);
    const auto sq = oracle::oracle_factor_bounded(lp(1, "x^2"), 6);
    EXPECT_EQ(count_with_repeats(sq), 2u);
    EXPECT_EQ(sq.expand(1), lp(1, "x^2"));
}

TEST(OracleFactor, Limits)
{
    EXPECT_THROW(oracle::oracle_factor_bounded(lp(2, "y1^7 + y2 + 1"), 6), ResourceError);
    EXPECT_THROW(oracle::oracle_factor_bounded(lp(3, "y1 + y2 + y3"), 6), DomainError);
    LaurentPoly z(1);
    z.add_term({1}, CoeffPoly(Cyclo::zeta_power(3, 1)));
    z.add_term({0}, CoeffPoly(1));
    EXPECT_THROW(oracle::oracle_factor_bounded(z, 6), DomainError);
}

TEST(OracleFactor, ReconstructsAndSplits)
{
    const LaurentPoly a = lp(2, "y1^2 + y2 + 3"), b = lp(2, "y1*y2 - 2"), c = lp(2, "y1 - y2");
    const LaurentPoly q = a * b * c;
    const auto f = oracle::oracle_factor_bounded(q, 6);
    EXPECT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(f.expand(2), q);
    const LaurentPoly w = lp(2, "y1^5 + y1^3 + 1") * lp(2, "4*y1 - 3*y2 + 1");
    EXPECT_EQ(oracle::oracle_factor_bounded(w, 6).factors.size(), 2u);
    const auto g = oracle::oracle_factor_bounded(c * c * a, 6);
    EXPECT_EQ(count_with_repeats(g), 3u);
}

TEST(OraclePowerSearch, Examples)
{
    const auto t = oracle::oracle_power_search(lp(2, "y1^2+2*y1+1-y1*y2"), 4);
    std::size_t best = 0;
    std::vector<int> arg;
    for (const auto& [k, n] : t)
        if (n > best) {
            best = n;
            arg = k;
        }
    EXPECT_EQ(best, 2u);
    EXPECT_EQ(arg, (std::vector<int>{2, 2}));

    for (const auto& [k, n] : oracle::oracle_power_search(lp(2, "y1+y2+1"), 2))
        EXPECT_EQ(n, 1u);

    EXPECT_THROW(oracle::oracle_power_search(lp(1, "y1-1"), 2), DomainError);
}

TEST(RandomEPoly, Deterministic)
{
    oracle::RandomSpec spec;
    spec.seed = 7;
    EXPECT_EQ(oracle::random_epoly(spec), oracle::random_epoly(spec));
    spec.seed = 8;
    EXPECT_FALSE(oracle::random_epoly(spec).is_zero());
}

TEST(RandomEPoly, RespectsSpec)
{
    for (std::uint32_t s = 1; s <= 50; ++s) {
        oracle::RandomSpec spec;
        spec.seed = s;
        spec.max_height = 1;
        EXPECT_LE(oracle::random_epoly(spec).height(), 1u);
        spec.max_height = 2;
        spec.max_dimension = 1;
        const EPoly f = oracle::random_epoly(spec);
        EXPECT_LE(support(f).dimension, 1u) << "seed " << s;
        EXPECT_LE(f.size(), 4u);
    }
}

TEST(Differential, KernelAgreesWithOracle)
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(0, 3), c(-4, 4), nt(2, 4);
    const long n = budget(500);
    long done = 0;
    for (long it = 0; done < n && it < 20 * n; ++it) {
        LaurentPoly a(2), b(2);
        for (int k = nt(rng); k > 0; --k)
            a.add_term({e(rng), e(rng)}, CoeffPoly(c(rng)));
        for (int k = nt(rng); k > 0; --k)
            b.add_term({e(rng), e(rng)}, CoeffPoly(c(rng)));
        if (a.is_zero() || b.is_zero())
            continue;
        const LaurentPoly q = a * b;
        ClassicalFactorization want;
        try {
            want = oracle::oracle_factor_bounded(q, 6, static_cast<std::uint32_t>(it));
        } catch (const ResourceError&) {
            continue;
        }
        const auto got = factor_multivariate(q);
        ASSERT_EQ(got.expand(2), q);
        ASSERT_EQ(got.factors.size(), want.factors.size()) << "instance " << it;
        for (const auto& [w, m] : want.factors) {
            bool found = false;
            for (const auto& [g, k] : got.factors) {
                auto d = exact_divide(laurent_to_flat(g), laurent_to_flat(w));
                if (k == m && d && d->is_constant())
                    found = true;
            }
            EXPECT_TRUE(found) << "instance " << it;
        }
        ++done;
    }
    EXPECT_EQ(done, n);
}

TEST(SupportContainment, FactorsOfRandomProducts)
{
    const long n = budget(500);
    for (long s = 1; s <= n; ++s) {
        const EPoly g = normalize_epoly(rnd(static_cast<std::uint32_t>(s))).second;
        const EPoly h = normalize_epoly(rnd(static_cast<std::uint32_t>(s + 100000))).second;
        const EPoly f = g * h;
        EXPECT_TRUE(support_contained(g, f)) << "seed " << s;
        EXPECT_TRUE(support_contained(h, f)) << "seed " << s;
    }
}

TEST(Pipeline, ProductsFactorAsUnionOfParts)
{
    const long n = budget(200);
    long done = 0;
    for (long s = 1; done < n && s <= 10 * n; ++s) {
        const EPoly g = rnd(static_cast<std::uint32_t>(s));
        const EPoly h = rnd(static_cast<std::uint32_t>(s + 50000));
        Parts want, got;
        try {
            want.add(factor_epoly(g));
            want.add(factor_epoly(h));
            const EPoly f = g * h;
            const auto fac = factor_epoly(f);
            ASSERT_TRUE(verify_factorization(f, fac));
            got.add(fac);
        } catch (const ResourceError&) {
            continue;
        }
        EXPECT_TRUE(got == want) << "seed " << s;
        ++done;
    }
    EXPECT_EQ(done, n);
}

int main(int argc, char** argv)
{
    ::testing::InitGoogleTest(&argc, argv);
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--oracle-budget") == 0 && i + 1 < argc)
            g_budget = std::strtol(argv[++i], nullptr, 10);
        else if (std::strncmp(argv[i], "--oracle-budget=", 16) == 0)
            g_budget = std::strtol(argv[i] + 16, nullptr, 10);
    }
    return RUN_ALL_TESTS();
}
