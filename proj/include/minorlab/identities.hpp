#pragma once

// Structural claims about the matrix families: equimodularity, the L*H
// factorization of T_{G~,G}, the Gibonacci addition and Cassini-type
// identities, and naming of minor sequences.

#include "minorlab/matrix.hpp"
#include "minorlab/minors.hpp"
#include "minorlab/sequence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minorlab {

struct Divergence {
    std::size_t index;       // minor index k (block of order k+1)
    std::size_t spec_a;      // always 0, the reference spec
    std::size_t spec_b;
    QuadScalar value_a;
    QuadScalar value_b;
};

struct EquimodularReport {
    std::vector<MatrixSpec> specs;
    std::size_t upto = 0;
    bool verdict = false;
    std::optional<Divergence> first_divergence;
    /// Minors of the first spec for indices 0..upto.
    std::vector<QuadScalar> common_minors;
};

/// Compares leading minors 0..upto of every spec against the first one.
/// Each spec is built at order max(spec.order, upto + 1).
/// Throws std::invalid_argument for fewer than two specs, MathError for
/// mixed fields.
EquimodularReport check_equimodular(const std::vector<MatrixSpec>& specs, std::size_t upto);

/// T_{a,b}, T_{b,a}, P_{chk a, chk b}, P_{chk b, chk a}, A_{chk a, b}, A_{chk b, a}.
std::vector<MatrixSpec> six_matrix_specs(const SequenceSpec& alpha, const SequenceSpec& beta, std::size_t order);

/// Builds the six-matrix family and checks it is equimodular through `upto`.
/// Throws MathError when alpha_0 != beta_0.
EquimodularReport six_matrix_family(const SequenceSpec& alpha, const SequenceSpec& beta, std::size_t upto);

/// T_{G~,G}(n) as a matrix spec, G = G^(a,b,r,1).
MatrixSpec toeplitz_alternating_gibonacci(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r,
                                          std::size_t n);

/// Entrywise T_{G~,G}(n) == L(n) * H(n).
bool verify_factorization(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r, std::size_t n);

/// G-bar_{n+m} = G-bar_n G-bar_{m-1} + G-bar_{n+1} G-bar_m and
/// G-bar_{m+1} G-bar_{m-1} - G-bar_m^2 = (-1)^m, with G-bar = G^(0,1,r,1).
bool verify_gibonacci_identities(const QuadScalar& r, std::size_t m, std::size_t n);

enum class NamedSequence { fibonacci, lucas, pell, jacobsthal };

const char* sequence_symbol(NamedSequence s);
GibonacciParams named_params(NamedSequence s, FieldTag field = {});

/// X_k for any integer k; negative indices use the backward recurrence.
QuadScalar named_term(NamedSequence s, long k, FieldTag field = {});

/// values[n] = coeff * rho^max(n-1,0) * X_{sigma n + tau}.
struct SequenceMatch {
    NamedSequence sequence;
    long sigma;
    long tau;
    Rational rho;
    long coeff;

    std::string describe() const;
};

/// Search grid, fixed so results are reproducible.
struct IdentifyGrid {
    static constexpr long sigma_values[] = {1, 2};
    static constexpr long tau_min = -4;
    static constexpr long tau_max = 4;
    static constexpr long coeff_values[] = {1, -1};
    /// rho values as numerator/denominator pairs.
    static constexpr long rho_values[][2] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1},
                                             {1, 2}, {1, 3}, {-1, 1}, {-2, 1}, {-3, 1}};
};

/// Every grid candidate agreeing with all given values. Never claims
/// uniqueness; an empty result is valid. Requires at least 4 values.
std::vector<SequenceMatch> identify_minor_sequence(const std::vector<QuadScalar>& values);

} // namespace minorlab
