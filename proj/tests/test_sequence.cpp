#include "minorlab/sequence.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace minorlab;
using minorlab::testing::Rng;
using minorlab::testing::Z;

namespace {

std::vector<QuadScalar> ints(std::initializer_list<long> xs, FieldTag f = {})
{
    std::vector<QuadScalar> out;
    for (long x : xs)
        out.push_back(Z(x, f));
    return out;
}

} // namespace

TEST(Gibonacci, NamedSequences)
{
    EXPECT_EQ(materialize(SequenceSpec::gibonacci(GibonacciParams::fibonacci()), 10).terms,
              ints({0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
    EXPECT_EQ(materialize(SequenceSpec::gibonacci(GibonacciParams::lucas()), 6).terms, ints({2, 1, 3, 4, 7, 11, 18}));
    EXPECT_EQ(materialize(SequenceSpec::gibonacci(GibonacciParams::pell()), 6).terms, ints({0, 1, 2, 5, 12, 29, 70}));
    EXPECT_EQ(materialize(SequenceSpec::gibonacci(GibonacciParams::jacobsthal()), 6).terms, ints({0, 1, 1, 3, 5, 11, 21}));
}

TEST(Gibonacci, ShiftAndNegativeIndex)
{
    EXPECT_EQ(materialize(SequenceSpec::gibonacci(GibonacciParams::fibonacci(), 3), 3).terms, ints({2, 3, 5, 8}));
    EXPECT_EQ(gibonacci_term(GibonacciParams::barred(Z(3)), -1), Z(1));
    EXPECT_THROW(gibonacci_term(GibonacciParams::lucas(), -1), std::out_of_range);
    EXPECT_THROW(gibonacci_term(GibonacciParams::barred(Z(1)), -2), std::out_of_range);
}

TEST(SequenceKinds, Materialize)
{
    EXPECT_EQ(materialize(SequenceSpec::head_then_constant(ints({2, -1}), Z(0)), 4).terms, ints({2, -1, 0, 0, 0}));
    EXPECT_EQ(materialize(SequenceSpec::periodic(ints({2}), ints({-1, 1})), 5).terms, ints({2, -1, 1, -1, 1, -1}));
    EXPECT_EQ(materialize(SequenceSpec::arithmetic(Z(1), Z(3)), 3).terms, ints({1, 4, 7, 10}));
    EXPECT_EQ(materialize(SequenceSpec::geometric_affine(Z(2), Z(2), Z(-1)), 3).terms, ints({1, 3, 7, 15}));
    EXPECT_EQ(materialize(SequenceSpec::explicit_terms(ints({4, 5})), 1).terms, ints({4, 5}));
    EXPECT_THROW(materialize(SequenceSpec::explicit_terms(ints({4, 5})), 2), std::out_of_range);
}

TEST(SequenceKinds, FieldsMustAgree)
{
    EXPECT_THROW(SequenceSpec::explicit_terms({Z(1), Z(1, FieldTag(5))}), MathError);
    EXPECT_EQ(SequenceSpec::arithmetic(Z(0, FieldTag(-1)), Z(1, FieldTag(-1))).field(), FieldTag(-1));
}

TEST(Transforms, ConstantTail)
{
    // (2,3,3,...): check_3 = 2 + 3*7 = 23, hat = (2, 1, -1, 1, ...)
    const auto w = materialize(SequenceSpec::head_then_constant(ints({2}), Z(3)), 5);
    EXPECT_EQ(binomial_transform(w)[3], Z(23));
    EXPECT_EQ(inverse_binomial_transform(w).terms, ints({2, 1, -1, 1, -1, 1}));
}

TEST(Transforms, FibonacciWindow)
{
    const auto fib1 = SequenceSpec::gibonacci(GibonacciParams::fibonacci(), 1);
    EXPECT_EQ(materialize(SequenceSpec::binomial(fib1), 5).terms, ints({1, 2, 5, 13, 34, 89}));
    EXPECT_EQ(materialize(SequenceSpec::binomial(SequenceSpec::alternate(fib1)), 5).terms, ints({1, 0, 1, 1, 2, 3}));
    EXPECT_EQ(materialize(SequenceSpec::alternate(fib1), 4).terms, ints({1, -1, 2, -3, 5}));
}

TEST(Transforms, InverseUndoesBinomial)
{
    Rng rng(7);
    for (std::int64_t d : {0, -1, 2, 5}) {
        const FieldTag f(d);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<QuadScalar> t;
            for (long i = 0, len = rng.uniform(1, 15); i < len; ++i)
                t.push_back(rng.scalar(f));
            const auto spec = SequenceSpec::explicit_terms(t);
            EXPECT_EQ(materialize(SequenceSpec::inverse_binomial(SequenceSpec::binomial(spec)), t.size() - 1).terms, t);
            EXPECT_EQ(materialize(SequenceSpec::binomial(SequenceSpec::inverse_binomial(spec)), t.size() - 1).terms, t);
        }
    }
}

TEST(Transforms, RecurrenceCoefficients)
{
    EXPECT_EQ(transformed_recurrence_coeffs(Z(1), TransformVariant::binomial), std::make_pair(Z(3), Z(-1)));
    EXPECT_EQ(transformed_recurrence_coeffs(Z(2), TransformVariant::binomial_of_alternate), std::make_pair(Z(0), Z(2)));
}

TEST(Binomial, Coefficients)
{
    EXPECT_EQ(binomial_coefficient(6, 2), 15);
    EXPECT_EQ(binomial_coefficient(3, 5), 0);
    EXPECT_EQ(binomial_coefficient(0, 0), 1);
}
