#pragma once

// Leading principal minors by three independent routes: exact elimination,
// the upper-Hessenberg expansion recurrence, and closed forms for
// T_n(a,b,c) and T_{G~,G}(n).

#include "minorlab/matrix.hpp"
#include "minorlab/scalar.hpp"

#include <vector>

namespace minorlab {

enum class MinorEngine { oracle, hessenberg, toeplitz_closed, toeplitz_gibonacci };

const char* engine_name(MinorEngine engine);

/// values[k] is the determinant of the (k+1) x (k+1) leading block.
struct MinorSequence {
    std::vector<QuadScalar> values;
    MinorEngine engine = MinorEngine::oracle;
};

/// Exact determinant. Integer matrices go through fraction-free (Bareiss)
/// elimination over Z; everything else through Gaussian elimination in the
/// field. Both pivot on the first nonzero entry of the column.
QuadScalar det_oracle(const DenseMatrix& m);

enum class MinorStrategy {
    /// One det_oracle call per leading block.
    per_block,
    /// A single pivotless Bareiss pass whose pivots are the minors; falls back
    /// to per-block evaluation from the first zero pivot onward.
    single_pass,
};

MinorSequence leading_minors(const DenseMatrix& m, MinorStrategy strategy = MinorStrategy::per_block);

/// Minors of an upper Hessenberg matrix in O(n^2) scalar operations.
/// Throws std::invalid_argument if the matrix is not upper Hessenberg.
MinorSequence det_hessenberg(const DenseMatrix& h);

enum class ToeplitzMethod { recurrence, closed };

/// det T_n(a,b,c) where T_n has order n (det T_1 = c). Throws
/// std::invalid_argument for n < 1.
QuadScalar det_toeplitz_abc(const QuadScalar& a, const QuadScalar& b, const QuadScalar& c, long n,
                            ToeplitzMethod method);

/// Closed form of det T_{G~,G}(n) for G = G^(a,b,r,1): a at n = 0, else
/// (2b - ar)^(n-1) (a G_{n-1} + b G_n) with 0^0 = 1.
QuadScalar det_toeplitz_gibonacci(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r, std::size_t n);

} // namespace minorlab
