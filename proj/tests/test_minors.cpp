#include "minorlab/minors.hpp"

#include "minorlab/identities.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace minorlab;
using minorlab::testing::Rng;
using minorlab::testing::S;
using minorlab::testing::Z;

namespace {

// Cofactor expansion along row 0: an oracle independent of elimination.
QuadScalar det_laplace(const DenseMatrix& m)
{
    const std::size_t n = m.order();
    if (n == 1)
        return m(0, 0);
    QuadScalar total = QuadScalar::zero(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        DenseMatrix minor(m.field(), n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != col)
                    minor.set(i - 1, jj++, m(i, j));
        const QuadScalar term = m(0, col) * det_laplace(minor);
        total = col % 2 == 0 ? total + term : total - term;
    }
    return total;
}

DenseMatrix random_matrix(Rng& rng, FieldTag f, std::size_t n, bool integer, bool hessenberg = false)
{
    DenseMatrix m(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (hessenberg && i > j + 1)
                continue;
            if (rng.uniform(0, 5) == 0)
                continue; // sprinkle zeros so pivoting paths get exercised
            m.set(i, j, integer ? Z(rng.uniform(-5, 5), f) : rng.scalar(f));
        }
    return m;
}

} // namespace

TEST(Oracle, AgreesWithCofactorExpansion)
{
    Rng rng(31);
    for (std::int64_t d : {0, -1, 2, 5})
        for (int trial = 0; trial < 40; ++trial) {
            const auto m = random_matrix(rng, FieldTag(d), static_cast<std::size_t>(rng.uniform(1, 5)), trial % 2 == 0);
            ASSERT_EQ(det_oracle(m), det_laplace(m)) << "d=" << d << " trial " << trial;
        }
}

TEST(Oracle, SingularAndPermuted)
{
    DenseMatrix m({}, 3);
    m.set(0, 1, Z(1));
    m.set(1, 0, Z(1));
    m.set(2, 2, Z(1));
    EXPECT_EQ(det_oracle(m), Z(-1));
    m.set(2, 2, Z(0));
    EXPECT_EQ(det_oracle(m), Z(0));
}

TEST(LeadingMinors, StrategiesAgree)
{
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const FieldTag f(trial % 3 == 0 ? 0 : 5);
        const auto m = random_matrix(rng, f, static_cast<std::size_t>(rng.uniform(1, 7)), trial % 2 == 0);
        const auto slow = leading_minors(m, MinorStrategy::per_block);
        const auto fast = leading_minors(m, MinorStrategy::single_pass);
        ASSERT_EQ(slow.values, fast.values) << "trial " << trial;
        for (std::size_t k = 0; k < m.order(); ++k)
            ASSERT_EQ(slow.values[k], det_oracle(m.leading_block(k + 1)));
    }
}

TEST(LeadingMinors, ZeroLeadingMinorDoesNotDerail)
{
    // T_{F~,F}: d_0 = F_0 = 0, later minors 2^(n-1) F_n.
    const auto fib = SequenceSpec::gibonacci(GibonacciParams::fibonacci());
    const auto m = build(MatrixSpec{{}, 7, family::Toeplitz{SequenceSpec::alternate(fib), fib}, {}});
    const auto fast = leading_minors(m, MinorStrategy::single_pass).values;
    const std::vector<long> want = {0, 1, 2, 8, 24, 80, 256};
    for (std::size_t k = 0; k < want.size(); ++k)
        EXPECT_EQ(fast[k], Z(want[k])) << k;
}

TEST(Hessenberg, MatchesOracle)
{
    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const FieldTag f(trial % 4 == 0 ? 0 : (trial % 4 == 1 ? -1 : 2));
        const auto h = random_matrix(rng, f, static_cast<std::size_t>(rng.uniform(1, 8)), trial % 3 == 0, true);
        ASSERT_EQ(det_hessenberg(h).values, leading_minors(h).values) << "trial " << trial;
    }
}

TEST(Hessenberg, DiagonalAndDisplayedH)
{
    DenseMatrix diag({}, 3);
    diag.set(0, 0, Z(2));
    diag.set(1, 1, Z(3));
    diag.set(2, 2, Z(5));
    EXPECT_EQ(det_hessenberg(diag).values.back(), Z(30));
    EXPECT_EQ(det_hessenberg(build_factor_H(Z(1), Z(1), Z(1), 4)).values.back(), Z(8));
    EXPECT_THROW(det_hessenberg(build(MatrixSpec{{}, 3, family::ToeplitzAbc{Z(1), Z(1), Z(1)}, {}})),
                 std::invalid_argument);
}

TEST(ToeplitzAbc, WorkedValues)
{
    const FieldTag f5(5);
    const auto phi = S("1/2+1/2*s", f5), Phi = S("1/2-1/2*s", f5);
    for (auto method : {ToeplitzMethod::recurrence, ToeplitzMethod::closed}) {
        EXPECT_EQ(det_toeplitz_abc(phi, Phi, Z(1, f5), 6, method), Z(13, f5));
        EXPECT_EQ(det_toeplitz_abc(-phi, -Phi, Z(0, f5), 6, method), Z(5, f5));
        EXPECT_EQ(det_toeplitz_abc(Z(3), Z(3), Z(3), 5, method), Z(0));
        EXPECT_EQ(det_toeplitz_abc(Z(1), Z(1), Z(2), 4, method), Z(5));
        EXPECT_EQ(det_toeplitz_abc(Z(1), Z(2), Z(3), 1, method), Z(3));
        EXPECT_EQ(det_toeplitz_abc(Z(1), Z(2), Z(3), 2, method), Z(7));
    }
    EXPECT_THROW(det_toeplitz_abc(Z(1), Z(1), Z(1), 0, ToeplitzMethod::closed), std::invalid_argument);
}

TEST(ToeplitzAbc, MethodsAgreeWithOracle)
{
    Rng rng(34);
    for (std::int64_t d : {0, 5, -1, 2})
        for (int trial = 0; trial < 30; ++trial) {
            const FieldTag f(d);
            const auto a = rng.scalar(f), c = rng.scalar(f);
            const auto b = trial % 3 == 0 ? a : rng.scalar(f);
            const auto minors = leading_minors(build(MatrixSpec{f, 8, family::ToeplitzAbc{a, b, c}, {}})).values;
            for (long n = 1; n <= 8; ++n) {
                ASSERT_EQ(det_toeplitz_abc(a, b, c, n, ToeplitzMethod::recurrence), minors[n - 1]);
                ASSERT_EQ(det_toeplitz_abc(a, b, c, n, ToeplitzMethod::closed), minors[n - 1]);
            }
        }
}

TEST(Theorem31Form, WorkedValues)
{
    EXPECT_EQ(det_toeplitz_gibonacci(Z(1), Z(1), Z(1), 2), Z(3));
    EXPECT_EQ(det_toeplitz_gibonacci(Z(0), Z(1), Z(1), 5), Z(80));
    EXPECT_EQ(det_toeplitz_gibonacci(Z(-2), Z(7), Z(3), 0), Z(-2));
    // 2b = ar: the power vanishes from n = 2 on, 0^0 = 1 at n = 1.
    EXPECT_EQ(det_toeplitz_gibonacci(Z(2), Z(1), Z(1), 1), Z(5));
    EXPECT_EQ(det_toeplitz_gibonacci(Z(2), Z(1), Z(1), 2), Z(0));
}

TEST(EngineNames, Stable)
{
    EXPECT_STREQ(engine_name(MinorEngine::oracle), "oracle");
    EXPECT_STREQ(engine_name(MinorEngine::hessenberg), "hessenberg");
}
