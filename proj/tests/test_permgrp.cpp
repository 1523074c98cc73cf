#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace yw;

TEST(PermGroup, FixtureOrders)
{
    EXPECT_EQ(fx::s3().order(), 6u);
    EXPECT_EQ(fx::c3().order(), 3u);
    EXPECT_EQ(fx::a4().order(), 12u);
}

TEST(PermGroup, A4OrderByBruteForce)
{
    // every product of generator words of length <= 12 lands in an independently closed set
    std::set<Perm> seen{{0, 1, 2, 3}};
    std::vector<Perm> gens{{1, 2, 0, 3}, {1, 0, 3, 2}};
    for (int round = 0; round < 12; ++round) {
        std::set<Perm> next = seen;
        for (auto& x : seen)
            for (auto& g : gens) next.insert(compose(g, x));
        seen.swap(next);
    }
    EXPECT_EQ(seen.size(), 12u);
    for (auto& x : seen) {
        int s = fx::parity(x);
        EXPECT_EQ(s, 1);
    }
}

TEST(PermGroup, IdentityFirstAndClosed)
{
    auto g = fx::a4();
    EXPECT_EQ(g.element(0), (Perm{0, 1, 2, 3}));
    for (std::size_t a = 0; a < g.order(); ++a) {
        EXPECT_EQ(g.mul(a, g.inv(a)), 0u);
        for (std::size_t b = 0; b < g.order(); ++b) EXPECT_TRUE(g.contains(compose(g.element(a), g.element(b))));
    }
}

TEST(PermGroup, CapExceeded)
{
    EXPECT_THROW((void)close_group(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 100), GroupTooLarge);
}

TEST(PermGroup, CompositionConvention)
{
    Perm g{1, 0, 2}, h{1, 2, 0};
    Perm gh = compose(g, h);
    for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(gh[x], g[h[x]]);
}

TEST(Sylow, Orders)
{
    auto s3 = fx::s3();
    auto a4 = fx::a4();
    EXPECT_EQ(sylow_subgroup(s3, 3).size(), 3u);
    EXPECT_EQ(sylow_subgroup(s3, 2).size(), 2u);
    EXPECT_EQ(sylow_subgroup(s3, 5).size(), 1u);
    EXPECT_EQ(sylow_subgroup(a4, 3).size(), 3u);
    EXPECT_EQ(sylow_subgroup(a4, 2).size(), 4u);
    EXPECT_TRUE(s3.is_subgroup(sylow_subgroup(s3, 3)));
}

TEST(SubgroupClasses, Fixtures)
{
    auto s3 = fx::s3();
    auto a4 = fx::a4();
    auto c3 = fx::c3();
    auto l1 = subgroup_class_reps(s3, sylow_subgroup(s3, 3));
    auto l2 = subgroup_class_reps(a4, sylow_subgroup(a4, 3));
    auto l3 = subgroup_class_reps(c3, sylow_subgroup(c3, 3));
    EXPECT_EQ(l1.reps.size(), 2u);
    EXPECT_EQ(l2.reps.size(), 2u);
    EXPECT_EQ(l3.reps.size(), 2u);
    EXPECT_EQ(l1.reps.front().size(), 1u);
    EXPECT_EQ(l1.reps.back().size(), 3u);
}

TEST(SubgroupClasses, KleinFourInA4)
{
    // V4 has 5 subgroups: 1, three conjugate C2, V4
    auto a4 = fx::a4();
    auto l = subgroup_class_reps(a4, sylow_subgroup(a4, 2));
    EXPECT_EQ(l.reps.size(), 3u);
}

TEST(CosetAction, Sizes)
{
    auto s3 = fx::s3();
    auto a4 = fx::a4();
    EXPECT_EQ(coset_action(s3, sylow_subgroup(s3, 3)).num_cosets, 2u);
    EXPECT_EQ(coset_action(a4, sylow_subgroup(a4, 3)).num_cosets, 4u);
    auto whole = coset_action(a4, a4.all());
    EXPECT_EQ(whole.num_cosets, 1u);
    for (auto& img : whole.generator_images) EXPECT_EQ(img, (Perm{0}));
}

TEST(CosetAction, NotSubgroup)
{
    auto s3 = fx::s3();
    ElementSet bad{0, 1};
    if (s3.is_subgroup(bad)) bad = {0, 1, 2};
    EXPECT_THROW((void)coset_action(s3, bad), std::invalid_argument);
}

// Properties over seeded random groups: Lagrange, homomorphism law, class exhaustiveness.
class RandomGroups : public ::testing::TestWithParam<int> {};

TEST_P(RandomGroups, Properties)
{
    auto g = random_small_group(static_cast<std::uint64_t>(GetParam()) * 7919 + 3);
    for (std::size_t p : {2u, 3u}) {
        auto syl = sylow_subgroup(g, p);
        EXPECT_EQ(syl.size(), p_part(g.order(), p));
        auto cl = subgroup_class_reps(g, syl);
        ASSERT_FALSE(cl.reps.empty());
        EXPECT_EQ(cl.reps.front().size(), 1u);
        bool has_sylow = false;
        for (auto& q : cl.reps) {
            EXPECT_EQ(g.order() % q.size(), 0u);
            EXPECT_TRUE(g.is_subgroup(q));
            has_sylow = has_sylow || q == syl;
            auto ca = coset_action(g, q);
            EXPECT_EQ(ca.num_cosets * q.size(), g.order());
            for (std::size_t a = 0; a < g.order(); a += 3)
                for (std::size_t b = 0; b < g.order(); b += 2)
                    EXPECT_EQ(ca.element_image(g, g.mul(a, b)),
                              compose(ca.element_image(g, a), ca.element_image(g, b)));
        }
        EXPECT_TRUE(has_sylow);
        // every subgroup of the Sylow is conjugate to exactly one rep
        for (auto& h : all_subgroups(g, syl)) {
            int hits = 0;
            for (auto& q : cl.reps) hits += conjugate_in(g, h, q);
            EXPECT_EQ(hits, 1);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGroups, ::testing::Range(0, 20));
