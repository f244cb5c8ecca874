#include "minorlab/matrix.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace minorlab;
using minorlab::testing::Z;

namespace {

DenseMatrix grid(std::initializer_list<std::initializer_list<long>> rows, FieldTag f = {})
{
    DenseMatrix m(f, rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row)
            m.set(i, j++, Z(v, f));
        ++i;
    }
    return m;
}

SequenceSpec fib_from(std::size_t shift)
{
    return SequenceSpec::gibonacci(GibonacciParams::fibonacci(), shift);
}

std::vector<MatrixSpec> sample_specs()
{
    const FieldTag f5(5);
    const auto fib = fib_from(1);
    return {
        {{}, 6, family::Pascal{fib, SequenceSpec::arithmetic(Z(1), Z(2))}, {}},
        {{}, 6, family::Seven{SequenceSpec::arithmetic(Z(1), Z(1)), SequenceSpec::periodic({Z(1)}, {Z(0), Z(1)})}, {}},
        {{}, 6, family::Toeplitz{SequenceSpec::alternate(fib), fib}, {}},
        {f5, 5, family::ToeplitzAbc{parse_scalar("1/2+1/2*s", f5), parse_scalar("1/2-1/2*s", f5), Z(1, f5)}, {}},
        {{}, 7, family::BespokeA{}, {}},
        {{}, 7, family::BespokeB{}, {}},
        {{}, 7, family::BespokeC{}, {}},
        {{}, 7, family::BespokeD{}, {}},
        {{}, 5, family::UnipotentL{}, {}},
        {{}, 5, family::UnipotentU{}, {}},
        {{}, 6, family::FactorL{Z(2), Z(-1), Z(3)}, {}},
    };
}

} // namespace

TEST(DenseMatrix, BasicsAndProduct)
{
    const auto a = grid({{1, 2}, {3, 4}});
    const auto b = grid({{0, 1}, {1, 0}});
    EXPECT_EQ(a * b, grid({{2, 1}, {4, 3}}));
    EXPECT_EQ(transpose(a), grid({{1, 3}, {2, 4}}));
    EXPECT_EQ(a * DenseMatrix::identity({}, 2), a);
    EXPECT_EQ(a.leading_block(1), grid({{1}}));
    EXPECT_TRUE(a.all_integer());
    EXPECT_THROW(a.leading_block(3), std::out_of_range);
}

TEST(DenseMatrix, FieldChecks)
{
    DenseMatrix m(FieldTag(2), 2);
    EXPECT_THROW(m.set(0, 0, Z(1)), MathError);
    EXPECT_THROW(m.set(2, 0, Z(1, FieldTag(2))), std::out_of_range);
    EXPECT_THROW(DenseMatrix({}, 2) * DenseMatrix(FieldTag(2), 2), MathError);
}

TEST(DenseMatrix, HessenbergShape)
{
    EXPECT_TRUE(grid({{1, 2, 3}, {4, 5, 6}, {0, 7, 8}}).is_upper_hessenberg());
    EXPECT_FALSE(grid({{1, 2, 3}, {4, 5, 6}, {9, 7, 8}}).is_upper_hessenberg());
}

TEST(Builders, SatisfyTheirDefiningRules)
{
    for (const auto& spec : sample_specs()) {
        const auto m = build(spec);
        EXPECT_EQ(m.order(), spec.order) << family_name(spec.family);
        EXPECT_TRUE(satisfies_family_rule(spec, m)) << family_name(spec.family);
    }
}

TEST(Builders, RuleCheckerNoticesTampering)
{
    for (const auto& spec : sample_specs()) {
        auto m = build(spec);
        m.add(spec.order - 1, spec.order - 1, Z(1, spec.field));
        EXPECT_FALSE(satisfies_family_rule(spec, m)) << family_name(spec.family);
    }
}

TEST(Builders, DisplayedCorners)
{
    auto four = [](Family fam) { return build(MatrixSpec{{}, 4, std::move(fam), {}}); };
    EXPECT_EQ(four(family::BespokeA{}), grid({{1, 1, 1, 1}, {1, 2, 2, 1}, {1, 4, 6, 6}, {1, 7, 14, 20}}));
    EXPECT_EQ(four(family::BespokeB{}),
              grid({{2, 3, 4, 5}, {-3, -4, -6, -9}, {-27, -37, -51, -70}, {-125, -170, -231, -313}}));
    EXPECT_EQ(four(family::BespokeC{}), grid({{2, 1, 3, -1}, {1, 1, 2, 0}, {-2, -2, -1, -2}, {-1, -10, -9, -9}}));
    EXPECT_EQ(four(family::BespokeD{}), grid({{1, 1, 1, 1}, {4, 1, 2, 3}, {9, 0, 1, 3}, {16, 0, 0, 1}}));
    EXPECT_EQ(four(family::UnipotentL{}), grid({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}));
    EXPECT_EQ(four(family::UnipotentU{}), transpose(four(family::UnipotentL{})));
}

TEST(Builders, ToeplitzOfFibonacciWindow)
{
    const auto fib = fib_from(1);
    const auto t = build(MatrixSpec{{}, 4, family::Toeplitz{SequenceSpec::alternate(fib), fib}, {}});
    EXPECT_EQ(t, grid({{1, 1, 2, 3}, {-1, 1, 1, 2}, {2, -1, 1, 1}, {-3, 2, -1, 1}}));
}

TEST(Builders, FactorsOfToeplitzGibonacci)
{
    // G = G^(1,2,1,1): (1,2,3,5,...)
    const auto H = build_factor_H(Z(1), Z(2), Z(1), 3);
    EXPECT_EQ(H, grid({{1, 2, 3, 5}, {-2, 1, 2, 3}, {0, -3, 0, 0}, {0, 0, -3, 0}}));
    EXPECT_TRUE(H.is_upper_hessenberg());
    const auto L = build_factor_L(Z(1), Z(2), Z(1), 3);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(L(i, i), Z(1));
}

TEST(Builders, Errors)
{
    const auto one_then_zero = SequenceSpec::head_then_constant({Z(1)}, Z(0));
    const auto two_then_zero = SequenceSpec::head_then_constant({Z(2)}, Z(0));
    EXPECT_THROW(build(MatrixSpec{{}, 3, family::Toeplitz{one_then_zero, two_then_zero}, {}}), MathError);
    EXPECT_THROW(build(MatrixSpec{FieldTag(5), 3, family::BespokeA{}, {}}), MathError);
    EXPECT_THROW(build(MatrixSpec{{}, 3, family::BespokeA{}, {{3, 0, Z(1)}}}), std::out_of_range);
    EXPECT_THROW(build(MatrixSpec{{}, 0, family::BespokeA{}, {}}), std::invalid_argument);
    EXPECT_THROW(build(MatrixSpec{{}, 4, family::Pascal{SequenceSpec::explicit_terms({Z(1), Z(2)}), one_then_zero}, {}}),
                 std::out_of_range);
}

TEST(Builders, ModifiersApplyAfterConstruction)
{
    const auto base = MatrixSpec{{}, 3, family::ToeplitzAbc{Z(1), Z(2), Z(3)}, {}};
    auto modified = base;
    modified.modifiers = {{0, 0, Z(2)}, {1, 2, Z(-1)}, {0, 0, Z(1)}};
    auto m = build(modified);
    EXPECT_EQ(m, grid({{6, 1, 1}, {2, 3, 0}, {2, 2, 3}}));
    EXPECT_TRUE(satisfies_family_rule(modified, build(base)));
}

TEST(Builders, SequenceTermsMoveIntoMatrixField)
{
    const FieldTag gi(-1);
    const auto tri = SequenceSpec::head_then_constant({Z(1), Z(1)}, Z(0));
    const auto m = build(MatrixSpec{gi, 3, family::Toeplitz{tri, tri}, {{1, 1, QuadScalar::radical(gi)}}});
    EXPECT_EQ(m.field(), gi);
    EXPECT_EQ(m(1, 1), Z(1, gi) + QuadScalar::radical(gi));
}
