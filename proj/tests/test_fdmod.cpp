#include <gtest/gtest.h>

#include <yw/tensor.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace yw;
using namespace oracle;

namespace {

Algebra upper_triangular(Field f)
{
    // basis E11, E12, E22
    std::vector<Matrix> left(3, Matrix(f, 3, 3));
    left[0](0, 0) = 1, left[0](1, 1) = 1;
    left[1](1, 2) = 1;
    left[2](2, 2) = 1;
    return Algebra(f, std::move(left), Vec{1, 0, 1}, std::nullopt, true);
}

struct S3Setup {
    PermGroup g = fx::s3();
    Algebra a = group_algebra(g, 3);
    Module triv = fx::triv(g, a), sgn = fx::sgn(g, a);
    Module perm = permutation_module(g, a, sylow_subgroup(g, 3));
    Module ptriv = fx::pim_of(a, triv), psgn = fx::pim_of(a, sgn);
};

}  // namespace

TEST(RegularModule, Decomposition)
{
    auto kc3 = group_algebra(fx::c3(), 3);
    EXPECT_EQ(regular_module(kc3).dim(), 3u);
    EXPECT_TRUE(is_indecomposable(regular_module(kc3)));
    S3Setup s;
    auto d = decompose(regular_module(s.a));
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d.num_classes, 2u);
    EXPECT_EQ(d.incl[0].cols(), 3u);
    EXPECT_EQ(d.incl[1].cols(), 3u);
    auto k = ground_algebra(Field(3));
    EXPECT_EQ(regular_module(k).dim(), 1u);
    EXPECT_NO_THROW(regular_module(s.a).validate());
}

TEST(HomSpace, Fixtures)
{
    S3Setup s;
    Module reg = regular_module(s.a);
    EXPECT_EQ(hom_space(reg, reg).dim(), 6u);
    EXPECT_EQ(hom_space(reg, s.perm).dim(), 2u);
    EXPECT_EQ(hom_space(s.triv, s.sgn).dim(), 0u);
    EXPECT_EQ(brute_hom_dim(reg, s.perm), 2u);
    EXPECT_EQ(brute_hom_dim(s.triv, s.sgn), 0u);
    auto kc3 = group_algebra(fx::c3(), 3);
    EXPECT_THROW((void)hom_space(s.triv, regular_module(kc3)), std::invalid_argument);
}

TEST(HomSpace, MatchesBruteForceAndIntertwines)
{
    S3Setup s;
    std::vector<Module> ms{regular_module(s.a), s.triv, s.sgn, s.perm, s.ptriv, s.psgn};
    for (auto& u : ms)
        for (auto& v : ms) {
            MapSpace h = hom_space(u, v);
            EXPECT_EQ(h.dim(), brute_hom_dim(u, v));
            for (auto& phi : h.basis)
                for (std::size_t b = 0; b < s.a.dim(); ++b) EXPECT_EQ(phi * u.act(b), v.act(b) * phi);
        }
}

TEST(Decompose, PermutationModule)
{
    S3Setup s;
    auto d = decompose(s.perm);
    ASSERT_EQ(d.size(), 2u);
    Matrix sum(s.a.field(), 2, 2);
    for (std::size_t i = 0; i < d.size(); ++i) {
        sum += d.incl[i] * d.proj[i];
        for (std::size_t j = 0; j < d.size(); ++j) {
            Matrix pj = d.proj[i] * d.incl[j];
            EXPECT_EQ(pj, i == j ? Matrix::identity(s.a.field(), pj.rows()) : Matrix(s.a.field(), pj.rows(), pj.cols()));
        }
    }
    EXPECT_TRUE(sum.is_identity());
    auto ps = parts(s.perm, d);
    int nt = 0, ns = 0;
    for (auto& m : ps) {
        EXPECT_EQ(m.dim(), 1u);
        nt += is_isomorphic(m, s.triv).has_value();
        ns += is_isomorphic(m, s.sgn).has_value();
    }
    EXPECT_EQ(nt, 1);
    EXPECT_EQ(ns, 1);
    auto kc3 = group_algebra(fx::c3(), 3);
    auto dc = decompose(regular_module(kc3));
    EXPECT_EQ(dc.size(), 1u);
    EXPECT_EQ(dc.multiplicity(0), 1u);
}

TEST(Decompose, SummandsAreLocal)
{
    S3Setup s;
    Module big = direct_sum({regular_module(s.a), s.perm, s.ptriv});
    auto d = decompose(big);
    EXPECT_EQ(d.size(), 5u);
    EXPECT_EQ(d.num_classes, 4u);
    for (auto& m : parts(big, d)) {
        Algebra end = endomorphism_algebra(hom_space(m, m));
        EXPECT_TRUE(is_local(end));
    }
}

TEST(IsIsomorphic, Fixtures)
{
    S3Setup s;
    auto self = is_isomorphic(s.ptriv, s.ptriv);
    ASSERT_TRUE(self.has_value());
    EXPECT_TRUE(is_invertible(*self));
    EXPECT_FALSE(is_isomorphic(s.triv, s.sgn).has_value());
    EXPECT_FALSE(is_isomorphic(s.ptriv, s.psgn).has_value());
    Rng rng(5);
    Module moved = change_basis(s.ptriv, random_invertible(s.a.field(), 3, rng));
    auto iso = is_isomorphic(s.ptriv, moved);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(is_invertible(*iso));
    EXPECT_TRUE(is_homomorphism(*iso, s.ptriv, moved));
}

TEST(IsIsomorphic, LargeHomUsesDecompositionFallback)
{
    S3Setup s;
    Rng rng(9);
    Module x = direct_sum({s.ptriv, s.ptriv, s.psgn, s.triv, s.triv});
    Module y = change_basis(direct_sum({s.triv, s.psgn, s.ptriv, s.triv, s.ptriv}), random_invertible(s.a.field(), 11, rng));
    auto iso = is_isomorphic(x, y, 3);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(is_invertible(*iso));
    EXPECT_TRUE(is_homomorphism(*iso, x, y));
    Module z = direct_sum({s.ptriv, s.psgn, s.psgn, s.triv, s.triv});
    EXPECT_FALSE(is_isomorphic(x, z).has_value());
}

TEST(Projective, Fixtures)
{
    S3Setup s;
    EXPECT_TRUE(is_projective(regular_module(s.a)));
    EXPECT_FALSE(is_projective(s.triv));
    EXPECT_TRUE(is_projective(s.ptriv));
    auto g = fx::s3();
    auto a5 = group_algebra(g, 5);
    EXPECT_TRUE(is_projective(fx::triv(g, a5)));
}

TEST(Dual, Fixtures)
{
    S3Setup s;
    Module dt = dual(s.triv);
    EXPECT_EQ(dt.dim(), 1u);
    EXPECT_TRUE(dt.algebra().same_as(s.a.opposite()));
    // pull back along the antipode A -> A^op
    Module back = restrict_along(dt, s.a, antipode(s.g, 3));
    EXPECT_TRUE(is_isomorphic(back, s.triv).has_value());
    EXPECT_TRUE(is_isomorphic(dual(regular_module(s.a)), right_regular_module(s.a)).has_value());
    for (auto& m : {s.perm, s.ptriv, regular_module(s.a)}) {
        EXPECT_EQ(dual(m).dim(), m.dim());
        EXPECT_EQ(dual(dual(m)), m);
    }
}

TEST(Injective, Fixtures)
{
    S3Setup s;
    EXPECT_TRUE(is_injective(regular_module(s.a)));
    EXPECT_FALSE(is_injective(s.triv));
    auto g = fx::s3();
    auto a5 = group_algebra(g, 5);
    for (auto& m : {fx::triv(g, a5), fx::sgn(g, a5), permutation_module(g, a5, sylow_subgroup(g, 3))})
        EXPECT_TRUE(is_injective(m));
}

TEST(Nakayama, Fixtures)
{
    S3Setup s;
    Module reg = regular_module(s.a);
    EXPECT_TRUE(is_isomorphic(nakayama(reg), reg).has_value());
    EXPECT_TRUE(is_isomorphic(nakayama(s.ptriv), s.ptriv).has_value());
    EXPECT_TRUE(is_isomorphic(nakayama(s.psgn), s.psgn).has_value());
}

TEST(Nakayama, NonSymmetricConsistency)
{
    Algebra t = upper_triangular(Field(3));
    for (auto& e : lift_idempotents(t)) {
        Module ae = left_ideal(t, e);
        Module ea = submodule(right_regular_module(t), Subspace::column_space(t.left_matrix(e)));
        ASSERT_TRUE(ea.algebra().same_as(t.opposite()));
        EXPECT_TRUE(is_isomorphic(nakayama(ae), dual(ea)).has_value());
    }
    // nu(P_i) is the injective hull of S_i: P1 goes to P2, P2 to the simple S2
    auto es = lift_idempotents(t);
    int moved = 0;
    for (auto& e : es) moved += !is_isomorphic(nakayama(left_ideal(t, e)), left_ideal(t, e)).has_value();
    EXPECT_EQ(moved, 2);
}

TEST(Tensor, Fixtures)
{
    S3Setup s;
    Bimodule reg = regular_bimodule(s.a);
    for (auto& u : {s.triv, s.perm, s.ptriv}) {
        Module t = tensor_module(reg, u);
        EXPECT_EQ(t.dim(), u.dim());
        EXPECT_TRUE(is_isomorphic(t, u).has_value());
    }
    for (auto& e : pim_data(s.a).idempotents) {
        Module ae = left_ideal(s.a, e);
        Module ea = submodule(right_regular_module(s.a), Subspace::column_space(s.a.left_matrix(e)));
        EXPECT_EQ(tensor_dim(ea, ae), corner(s.a, e).alg.dim());
        EXPECT_EQ(brute_tensor_dim(ea, ae), corner(s.a, e).alg.dim());
    }
    Module dps = dual(s.psgn);
    EXPECT_EQ(brute_tensor_dim(dps, s.triv), 0u);
    EXPECT_EQ(tensor_dim(dps, s.triv), 0u);
    EXPECT_EQ(tensor_dim(dual(s.ptriv), s.triv), 1u);
}

TEST(Tensor, GeneratorsSufficeRandom)
{
    S3Setup s;
    std::vector<Module> ms{s.triv, s.sgn, s.perm, s.ptriv, s.psgn, regular_module(s.a)};
    for (auto& v : ms)
        for (auto& u : ms) EXPECT_EQ(tensor_dim(dual(v), u), brute_tensor_dim(dual(v), u));
}

TEST(Bimodule, RegularValidAndEnveloping)
{
    S3Setup s;
    Bimodule r = regular_bimodule(s.a);
    EXPECT_NO_THROW(r.validate());
    Module env = r.enveloping_module();
    EXPECT_EQ(env.algebra().dim(), 36u);
    EXPECT_NO_THROW(env.validate());
    // bimodule endomorphisms of A are the center
    EXPECT_EQ(hom_space(r, r).dim(), center_space(s.a).dim());
    EXPECT_EQ(hom_space(env, env).dim(), center_space(s.a).dim());
    EXPECT_EQ(hom_space(r, r, Side::Left).dim(), 6u);
}

// Properties on seeded random groups at p = 2, 3.
class RandomModules : public ::testing::TestWithParam<int> {};

TEST_P(RandomModules, SymmetricAlgebraProperties)
{
    auto g = random_small_group(static_cast<std::uint64_t>(GetParam()) * 15485863 + 1, 24);
    for (std::uint64_t p : {2u, 3u}) {
        auto a = group_algebra(g, p);
        auto cl = subgroup_class_reps(g, sylow_subgroup(g, p));
        std::vector<Module> ms;
        for (auto& q : cl.reps) ms.push_back(permutation_module(g, a, q));
        ms.push_back(permutation_module(g, a, g.all()));
        for (auto& pm : pim_data(a).pims) ms.push_back(pm);
        for (auto& m : ms) {
            EXPECT_EQ(is_injective(m), is_projective(m));
            EXPECT_EQ(dual(dual(m)), m);
        }
        for (auto& pm : pim_data(a).pims) EXPECT_TRUE(is_isomorphic(nakayama(pm), pm).has_value());
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomModules, ::testing::Range(0, 20));
