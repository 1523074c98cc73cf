#include <gtest/gtest.h>

#include <yw/cartan.hpp>

#include "fixtures.hpp"

using namespace yw;

namespace {

Vec sum_of(const Algebra& a, const std::vector<Vec>& xs)
{
    Vec s = a.zero();
    for (auto& x : xs) s = a.add(s, x);
    return s;
}

void expect_complete_orthogonal(const Algebra& a, const std::vector<Vec>& es)
{
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j)
            EXPECT_EQ(a.mul(es[i], es[j]), i == j ? es[i] : a.zero()) << i << "," << j;
    EXPECT_EQ(sum_of(a, es), a.unit());
}

// Elements killed by every linear character: an upper bound for the radical.
std::size_t joint_kernel_of_characters(const PermGroup& g, const Algebra& kg, const std::vector<Module>& chars)
{
    Matrix sys(kg.field(), chars.size(), kg.dim());
    for (std::size_t c = 0; c < chars.size(); ++c)
        for (std::size_t x = 0; x < kg.dim(); ++x) sys(c, x) = chars[c].act(x)(0, 0);
    (void)g;
    return kernel(sys).rows();
}

}  // namespace

TEST(GroupAlgebra, Basics)
{
    auto a = group_algebra(fx::s3(), 3);
    EXPECT_EQ(a.dim(), 6u);
    ASSERT_TRUE(a.symform().has_value());
    EXPECT_TRUE(a.symform_ok());
    EXPECT_NO_THROW(a.validate());
    EXPECT_FALSE(a.is_commutative());
    auto c = group_algebra(fx::c3(), 3);
    EXPECT_EQ(c.dim(), 3u);
    EXPECT_TRUE(c.is_commutative());
    EXPECT_EQ(group_algebra(fx::a4(), 3).dim(), 12u);
}

TEST(GroupAlgebra, SymmetricFormGram)
{
    for (auto g : {fx::s3(), fx::a4()}) {
        auto a = group_algebra(g, 3);
        Matrix gram = a.gram();
        EXPECT_EQ(gram, gram.transpose());
        EXPECT_TRUE(is_invertible(gram));
    }
}

TEST(Validate, RejectsNonAssociative)
{
    Field f(3);
    auto good = truncated_polynomial_algebra(f, 3);
    std::vector<Matrix> left = good.lefts();
    left[1](0, 2) = 1;  // t * t^2 = 1 while t^2 * t = 0
    EXPECT_THROW(Algebra(f, left, good.unit(), std::nullopt, true), std::invalid_argument);
}

TEST(Radical, Fixtures)
{
    auto c3 = fx::c3();
    auto kc3 = group_algebra(c3, 3);
    EXPECT_EQ(radical(kc3).dim(), 2u);
    auto kc3_2 = group_algebra(c3, 2);
    EXPECT_EQ(radical(kc3_2).dim(), 0u);

    auto s3 = fx::s3();
    auto ks3 = group_algebra(s3, 3);
    // J(kS3) is the joint kernel of the two linear characters, the only simples at p = 3
    const std::size_t oracle = joint_kernel_of_characters(s3, ks3, {fx::triv(s3, ks3), fx::sgn(s3, ks3)});
    EXPECT_EQ(oracle, 4u);
    EXPECT_EQ(radical(ks3).dim(), oracle);
}

TEST(Radical, TruncatedPolynomial)
{
    auto a = truncated_polynomial_algebra(Field(5), 4);
    EXPECT_EQ(radical(a).dim(), 3u);
    EXPECT_EQ(radical_series_dims(a), (std::vector<std::size_t>{4, 3, 2, 1, 0}));
}

TEST(Idempotents, Fixtures)
{
    auto kc3 = group_algebra(fx::c3(), 3);
    auto e1 = lift_idempotents(kc3);
    ASSERT_EQ(e1.size(), 1u);
    EXPECT_EQ(e1[0], kc3.unit());

    auto ks3 = group_algebra(fx::s3(), 3);
    auto e2 = lift_idempotents(ks3);
    EXPECT_EQ(e2.size(), 2u);
    expect_complete_orthogonal(ks3, e2);
    for (auto& e : e2) EXPECT_TRUE(is_primitive_idempotent(ks3, e));

    auto kk = diagonal_algebra(Field(3), 2);
    auto e3 = lift_idempotents(kk);
    ASSERT_EQ(e3.size(), 2u);
    EXPECT_EQ(e3[0], (Vec{0, 1}));
    EXPECT_EQ(e3[1], (Vec{1, 0}));
}

TEST(Idempotents, MatrixAlgebraAtTwo)
{
    auto m = matrix_algebra(Field(2), 3);
    auto es = lift_idempotents(m);
    EXPECT_EQ(es.size(), 3u);
    expect_complete_orthogonal(m, es);
}

TEST(Blocks, Fixtures)
{
    auto ks3 = group_algebra(fx::s3(), 3);
    EXPECT_EQ(central_primitive_idempotents(ks3).size(), 1u);
    EXPECT_EQ(center_space(ks3).dim(), 3u);

    auto ka4 = group_algebra(fx::a4(), 3);
    auto bs = central_primitive_idempotents(ka4);
    ASSERT_EQ(bs.size(), 2u);
    expect_complete_orthogonal(ka4, bs);
    std::vector<std::size_t> dims;
    for (auto& b : bs) {
        EXPECT_TRUE(ka4.is_central(b));
        dims.push_back(rank(ka4.left_matrix(b)));
    }
    EXPECT_EQ(dims, (std::vector<std::size_t>{3, 9}));

    auto d4 = diagonal_algebra(Field(5), 4);
    EXPECT_EQ(central_primitive_idempotents(d4).size(), 4u);
}

TEST(Corner, Fixtures)
{
    auto ks3 = group_algebra(fx::s3(), 3);
    EXPECT_EQ(corner(ks3, ks3.unit()).alg.dim(), 6u);
    EXPECT_THROW((void)corner(ks3, ks3.zero()), std::invalid_argument);
    auto s3 = fx::s3();
    Module ptriv = fx::pim_of(ks3, fx::triv(s3, ks3));
    const PimData& pd = pim_data(ks3);
    for (std::size_t i = 0; i < pd.idempotents.size(); ++i) {
        Subalgebra c = corner(ks3, pd.idempotents[i]);
        EXPECT_EQ(c.alg.unit(), c.from_parent(pd.idempotents[i]));
        if (left_ideal(ks3, pd.idempotents[i]).dim() == ptriv.dim() &&
            is_isomorphic(left_ideal(ks3, pd.idempotents[i]), ptriv)) {
            EXPECT_EQ(c.alg.dim(), hom_space(ptriv, ptriv).dim());
        }
        EXPECT_EQ(c.alg.dim(), 2u);
    }
    auto m2 = matrix_algebra(Field(3), 2);
    Vec e11(4, 0);
    e11[0] = 1;
    EXPECT_EQ(corner(m2, e11).alg.dim(), 1u);
}

TEST(Opposite, Involution)
{
    auto ks3 = group_algebra(fx::s3(), 3);
    Algebra op = ks3.opposite();
    EXPECT_TRUE(op.opposite().same_as(ks3));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(op.product_basis(i, j), ks3.product_basis(j, i));
    EXPECT_TRUE(is_algebra_map(ks3, op, antipode(fx::s3(), 3)));
    EXPECT_FALSE(is_algebra_map(ks3, ks3, antipode(fx::s3(), 3)));

    auto kc3 = group_algebra(fx::c3(), 3);
    Algebra cop = kc3.opposite();
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(cop.left(i), kc3.left(i));

    auto m2 = matrix_algebra(Field(3), 2);
    Matrix tr(Field(3), 4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) tr(b * 2 + a, a * 2 + b) = 1;
    EXPECT_TRUE(is_algebra_map(m2, m2.opposite(), tr));
}

TEST(Cartan, Fixtures)
{
    auto s3 = fx::s3();
    auto ks3 = group_algebra(s3, 3);
    auto cd = cartan_matrix(ks3);
    EXPECT_EQ(cd.c, (std::vector<std::vector<long>>{{2, 1}, {1, 2}}));
    EXPECT_EQ(cd.simple_dims, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(std::labs(integer_determinant(cd.c)), 3);
    // oracle: composition factors of each PIM, matched against triv and sgn
    const PimData& pd = pim_data(ks3);
    Module t = fx::triv(s3, ks3), s = fx::sgn(s3, ks3);
    auto sc = simple_for_class(ks3);
    for (std::size_t i = 0; i < pd.pims.size(); ++i) {
        auto cf = composition_factors(pd.pims[i], 11);
        std::size_t nt = 0, ns = 0;
        for (std::size_t k = 0; k < cf.simples.size(); ++k) {
            if (hom_space(cf.simples[k], t).dim()) nt += cf.multiplicity[k];
            if (hom_space(cf.simples[k], s).dim()) ns += cf.multiplicity[k];
        }
        const auto& simples = simple_modules(ks3);
        for (std::size_t j = 0; j < 2; ++j) {
            const bool is_triv = hom_space(simples[sc[j]], t).dim() > 0;
            EXPECT_EQ(cd.c[i][j], static_cast<long>(is_triv ? nt : ns));
        }
    }

    auto kc3 = group_algebra(fx::c3(), 3);
    auto cc = cartan_matrix(kc3);
    EXPECT_EQ(cc.c, (std::vector<std::vector<long>>{{3}}));

    auto m = matrix_algebra(Field(5), 2);
    auto cm = cartan_matrix(diagonal_algebra(Field(5), 3));
    EXPECT_EQ(cm.c, (std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(cartan_matrix(m).c, (std::vector<std::vector<long>>{{1}}));
}

TEST(Cartan, IntegerDeterminant)
{
    EXPECT_EQ(integer_determinant({{2, 1}, {1, 2}}), 3);
    EXPECT_EQ(integer_determinant({{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(integer_determinant({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}), 4);
    EXPECT_EQ(integer_determinant({{1, 2}, {2, 4}}), 0);
}

TEST(DerivedInvariants, GroupAlgebras)
{
    EXPECT_EQ(derived_invariants(group_algebra(fx::s3(), 3)), (DerivedInvariants{2, 3, 3}));
    EXPECT_EQ(derived_invariants(group_algebra(fx::c3(), 3)), (DerivedInvariants{1, 3, 3}));
}

TEST(EndoAlgebra, Dimensions)
{
    auto s3 = fx::s3();
    auto ks3 = group_algebra(s3, 3);
    std::vector<Module> xs{regular_module(ks3), permutation_module(s3, ks3, sylow_subgroup(s3, 3))};
    auto d = endo_algebra(ks3, xs);
    std::size_t oracle = 0;
    for (auto& u : xs)
        for (auto& v : xs) oracle += hom_space(u, v).dim();
    EXPECT_EQ(oracle, 12u);
    EXPECT_EQ(d.E.dim(), oracle);
    EXPECT_NO_THROW(d.E.validate());
    expect_complete_orthogonal(d.E, d.proj_idems);

    auto c3 = fx::c3();
    auto kc3 = group_algebra(c3, 3);
    auto d2 = endo_algebra(kc3, {regular_module(kc3), permutation_module(c3, kc3, c3.all())});
    EXPECT_EQ(d2.E.dim(), 6u);
}

TEST(EndoAlgebra, RegularGivesOpposite)
{
    auto ks3 = group_algebra(fx::s3(), 3);
    auto d = endo_algebra(ks3, {regular_module(ks3)});
    ASSERT_EQ(d.E.dim(), 6u);
    // a -> right multiplication by a is an algebra map A^op -> End_A(A)
    Matrix phi(ks3.field(), 6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        Vec c = d.element(ks3.right(i));
        for (std::size_t k = 0; k < 6; ++k) phi(k, i) = c[k];
    }
    EXPECT_TRUE(is_invertible(phi));
    EXPECT_TRUE(is_algebra_map(ks3.opposite(), d.E, phi));
}

TEST(BasicAlgebra, A4PrincipalBlock)
{
    auto a4 = fx::a4();
    auto ka4 = group_algebra(a4, 3);
    auto bs = central_primitive_idempotents(ka4);
    Subalgebra blk = block_algebra(ka4, bs[principal_block_index(ka4, bs)]);
    EXPECT_EQ(blk.alg.dim(), 3u);
    Subalgebra basic = basic_algebra(blk.alg);
    EXPECT_EQ(basic.alg.dim(), 3u);
    EXPECT_TRUE(is_local(basic.alg));
    EXPECT_TRUE(basic.alg.is_commutative());
    EXPECT_EQ(radical_series_dims(basic.alg), (std::vector<std::size_t>{3, 2, 1, 0}));
}

// Structural properties on seeded random groups at p = 2, 3.
class RandomAlgebras : public ::testing::TestWithParam<int> {};

TEST_P(RandomAlgebras, IdempotentsBlocksRadical)
{
    auto g = random_small_group(static_cast<std::uint64_t>(GetParam()) * 104729 + 17, 24);
    for (std::uint64_t p : {2u, 3u}) {
        auto a = group_algebra(g, p);
        auto es = lift_idempotents(a);
        expect_complete_orthogonal(a, es);
        auto bs = central_primitive_idempotents(a);
        expect_complete_orthogonal(a, bs);
        for (auto& b : bs) EXPECT_TRUE(a.is_central(b));
        auto series = radical_series_dims(a);
        EXPECT_EQ(series.back(), 0u);
        const Subspace& j = radical(a);
        Quotient q = quotient_algebra(a, j);
        EXPECT_EQ(radical(q.alg).dim(), 0u);
        // dim A = sum of multiplicity times PIM dimension
        const PimData& pd = pim_data(a);
        std::size_t total = 0;
        for (std::size_t c = 0; c < pd.pims.size(); ++c) total += pd.multiplicity[c] * pd.pims[c].dim();
        EXPECT_EQ(total, a.dim());
        Decomposition d = decompose(regular_module(a));
        EXPECT_EQ(d.size(), es.size());
        auto cd = cartan_matrix(a);
        for (std::size_t i = 0; i < cd.c.size(); ++i) {
            std::size_t s = 0;
            for (std::size_t k = 0; k < cd.c.size(); ++k) s += static_cast<std::size_t>(cd.c[i][k]) * cd.simple_dims[k];
            EXPECT_EQ(s, cd.pim_dims[i]);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomAlgebras, ::testing::Range(0, 20));
