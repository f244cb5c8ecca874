#include "minorlab/scalar.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace minorlab;
using minorlab::testing::Rng;
using minorlab::testing::S;
using minorlab::testing::Z;

class FieldAxioms : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(FieldAxioms, HoldOnRandomElements)
{
    const FieldTag f(GetParam());
    Rng rng(1000 + static_cast<std::uint64_t>(GetParam() + 10));
    const QuadScalar zero = QuadScalar::zero(f), one = QuadScalar::one(f);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = rng.scalar(f), y = rng.scalar(f), z = rng.scalar(f);
        ASSERT_EQ(x + y, y + x);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x + zero, x);
        ASSERT_EQ(x * one, x);
        ASSERT_EQ(x - x, zero);
        ASSERT_EQ(x + (-x), zero);
        if (!x.is_zero()) {
            ASSERT_EQ(x * (one / x), one);
            ASSERT_EQ((y / x) * x, y);
        }
        ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
        ASSERT_EQ(x.conjugate().conjugate(), x);
        ASSERT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
        ASSERT_EQ(parse_scalar(to_string(x), f), x) << to_string(x);
    }
}

INSTANTIATE_TEST_SUITE_P(Radicands, FieldAxioms, ::testing::Values(0, -1, 2, 5));

TEST(FieldTag, RejectsNonSquarefreeAndOne)
{
    EXPECT_THROW(FieldTag(1), MathError);
    EXPECT_THROW(FieldTag(4), MathError);
    EXPECT_THROW(FieldTag(-12), MathError);
    EXPECT_NO_THROW(FieldTag(-1));
    EXPECT_NO_THROW(FieldTag(30));
    EXPECT_TRUE(FieldTag().is_rational());
}

TEST(QuadScalar, GoldenRatioIdentities)
{
    const FieldTag f5(5);
    const auto phi = S("1/2+1/2*s", f5);
    const auto Phi = S("1/2-1/2*s", f5);
    EXPECT_EQ(phi + Phi, Z(1, f5));
    EXPECT_EQ(phi * Phi, Z(-1, f5));
    EXPECT_EQ(phi * phi, phi + 1L);
    EXPECT_EQ(phi.norm(), Rational(-1));
    EXPECT_EQ(phi.conjugate(), Phi);
}

TEST(QuadScalar, GaussianUnit)
{
    const FieldTag gi(-1);
    const auto i = QuadScalar::radical(gi);
    EXPECT_EQ(i * i, Z(-1, gi));
    EXPECT_EQ(S("i", gi), i);
    EXPECT_EQ(S("2-3*i", gi), Z(2, gi) - i * 3L);
    EXPECT_EQ(Z(1, gi) / i, -i);
}

TEST(QuadScalar, DivisionByZeroThrows)
{
    EXPECT_THROW(Z(1) / Z(0), MathError);
    EXPECT_THROW(Z(1, FieldTag(2)) / Rational(0), MathError);
}

TEST(QuadScalar, MixedFieldsThrow)
{
    EXPECT_THROW(Z(1, FieldTag(2)) + Z(1, FieldTag(5)), MathError);
    EXPECT_THROW(QuadScalar::radical(FieldTag(2)).in_field(FieldTag(5)), MathError);
    EXPECT_EQ(Z(3, FieldTag(2)).in_field(FieldTag(5)), Z(3, FieldTag(5)));
}

TEST(QuadScalar, IntPowZeroToZeroIsOne)
{
    EXPECT_EQ(int_pow(Z(0), 0), Z(1));
    EXPECT_EQ(int_pow(Z(0), 3), Z(0));
    EXPECT_EQ(int_pow(S("1+s", FieldTag(2)), 2), S("3+2*s", FieldTag(2)));
}

TEST(QuadScalar, Integrality)
{
    EXPECT_TRUE(Z(-4).is_integer());
    EXPECT_FALSE(S("1/2").is_integer());
    EXPECT_FALSE(S("1+s", FieldTag(3)).is_integer());
}

TEST(ScalarText, PrintsCanonicalForms)
{
    const FieldTag f(2);
    EXPECT_EQ(to_string(S("6/4")), "3/2");
    EXPECT_EQ(to_string(S("0")), "0");
    EXPECT_EQ(to_string(S("1+s", f)), "1+s");
    EXPECT_EQ(to_string(S("1-s", f)), "1-s");
    EXPECT_EQ(to_string(S("s", f)), "s");
    EXPECT_EQ(to_string(S("-1*s", f)), "-1*s");
    EXPECT_EQ(to_string(S("-3/2+3/2*s", f)), "-3/2+3/2*s");
    EXPECT_EQ(to_string(S("2*s", f)), "2*s");
    EXPECT_EQ(to_string(S(" 7 ", f)), "7");
}

TEST(ScalarText, RejectsMalformedInput)
{
    const FieldTag f(5);
    for (const char* bad : {"", "1/0", "s", "1+", "x", "1 2", "--1", "3*"})
        EXPECT_THROW(parse_scalar(bad, FieldTag{}), ParseError) << bad;
    EXPECT_THROW(parse_scalar("i", f), ParseError);
    EXPECT_THROW(parse_scalar("1+s+s", f), ParseError);
}
