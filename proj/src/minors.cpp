#include "minorlab/minors.hpp"

#include <stdexcept>
#include <utility>

namespace minorlab {

const char* engine_name(MinorEngine engine)
{
    switch (engine) {
    case MinorEngine::oracle:
        return "oracle";
    case MinorEngine::hessenberg:
        return "hessenberg";
    case MinorEngine::toeplitz_closed:
        return "toeplitz_closed";
    case MinorEngine::toeplitz_gibonacci:
        return "toeplitz_gibonacci";
    }
    return "unknown";
}

namespace {

QuadScalar det_bareiss_integer(const DenseMatrix& m)
{
    const std::size_t n = m.order();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j).rational_part().get_num();

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            return QuadScalar::zero(m.field());
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    BigInt det = sign * a[n - 1][n - 1];
    return QuadScalar(m.field(), Rational(det));
}

QuadScalar det_gauss_field(const DenseMatrix& m)
{
    const std::size_t n = m.order();
    std::vector<std::vector<QuadScalar>> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i].push_back(m(i, j));

    QuadScalar det = QuadScalar::one(m.field());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero())
            ++p;
        if (p == n)
            return QuadScalar::zero(m.field());
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero())
                continue;
            const QuadScalar factor = a[i][k] / a[k][k];
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] -= factor * a[k][j];
        }
    }
    return det;
}

} // namespace

QuadScalar det_oracle(const DenseMatrix& m)
{
    if (m.order() == 0)
        return QuadScalar::one(m.field());
    return m.all_integer() ? det_bareiss_integer(m) : det_gauss_field(m);
}

MinorSequence leading_minors(const DenseMatrix& m, MinorStrategy strategy)
{
    const std::size_t n = m.order();
    MinorSequence out{{}, MinorEngine::oracle};
    out.values.reserve(n);

    std::size_t done = 0;
    if (strategy == MinorStrategy::single_pass && n > 0) {
        // After step k-1 of pivotless Bareiss, a[k][k] is the k-th leading minor.
        std::vector<std::vector<QuadScalar>> a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i].push_back(m(i, j));
        QuadScalar prev = QuadScalar::one(m.field());
        for (std::size_t k = 0; k < n; ++k) {
            out.values.push_back(a[k][k]);
            ++done;
            if (a[k][k].is_zero())
                break;
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            prev = a[k][k];
        }
    }
    for (std::size_t k = done; k < n; ++k)
        out.values.push_back(det_oracle(m.leading_block(k + 1)));
    return out;
}

MinorSequence det_hessenberg(const DenseMatrix& h)
{
    if (!h.is_upper_hessenberg())
        throw std::invalid_argument("matrix is not upper Hessenberg");
    const std::size_t n = h.order();
    const FieldTag f = h.field();

    // prior[i] = d_{i-1}, with d_{-1} = 1.
    std::vector<QuadScalar> prior{QuadScalar::one(f)};
    for (std::size_t k = 0; k < n; ++k) {
        // d_k = sum_i (-1)^(k-i) h_{i,k} (prod_{j=i+1..k} h_{j,j-1}) d_{i-1}
        QuadScalar sum = QuadScalar::zero(f);
        QuadScalar chain = QuadScalar::one(f);
        for (std::size_t step = 0; step <= k; ++step) {
            const std::size_t i = k - step;
            if (step > 0)
                chain *= h(i + 1, i);
            if (chain.is_zero())
                break;
            QuadScalar term = h(i, k) * chain * prior[i];
            if (step % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        prior.push_back(std::move(sum));
    }
    prior.erase(prior.begin());
    return MinorSequence{std::move(prior), MinorEngine::hessenberg};
}

QuadScalar det_toeplitz_abc(const QuadScalar& a, const QuadScalar& b, const QuadScalar& c, long n,
                            ToeplitzMethod method)
{
    if (n < 1)
        throw std::invalid_argument("T_n(a,b,c) requires n >= 1");
    if (a.field() != c.field() || b.field() != c.field())
        throw MathError("T_n(a,b,c) entries must share one field");
    if (n == 1)
        return c;
    if (n == 2)
        return c * c - a * b;

    if (method == ToeplitzMethod::recurrence) {
        const QuadScalar p = c * 2L - a - b;
        const QuadScalar q = (c - a) * (c - b);
        QuadScalar older = c;
        QuadScalar newer = c * c - a * b;
        for (long k = 3; k <= n; ++k) {
            QuadScalar next = p * newer - q * older;
            older = std::move(newer);
            newer = std::move(next);
        }
        return newer;
    }

    const auto un = static_cast<unsigned long>(n);
    if (a == b && b == c)
        return QuadScalar::zero(c.field());
    if (a == b)
        return (c + a * (n - 1)) * int_pow(c - a, un - 1);
    return (b * int_pow(c - a, un) - a * int_pow(c - b, un)) / (b - a);
}

QuadScalar det_toeplitz_gibonacci(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r, std::size_t n)
{
    if (n == 0)
        return a;
    const FieldTag f = r.field();
    const auto G = materialize(SequenceSpec::gibonacci({a, b, r, QuadScalar::one(f)}), n).terms;
    return int_pow(b * 2L - a * r, n - 1) * (a * G[n - 1] + b * G[n]);
}

} // namespace minorlab
