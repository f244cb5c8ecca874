#pragma once

// Recovers the Toeplitz families T_n(a,b,c) whose minors satisfy a target
// recurrence det T_n = r det T_{n-1} + s det T_{n-2}.

#include "minorlab/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace minorlab {

struct RecurrenceTarget {
    QuadScalar r;
    QuadScalar s;
    QuadScalar c;
};

/// Pairs (a, b) with 2c - a - b = r and (c - a)(c - b) = -s.
struct SolvedFamily {
    std::vector<std::pair<QuadScalar, QuadScalar>> solutions;
    /// r^2 + 4s.
    Rational discriminant;
    /// Set when sqrt(discriminant) is irrational.
    std::optional<FieldTag> extension_needed;
    /// Discriminant zero: one solution, listed once.
    bool repeated_root = false;
};

/// Squarefree kernel f and cofactor k with |value| = k^2 f, for value != 0.
std::pair<BigInt, BigInt> squarefree_decomposition(const BigInt& value);

/// Throws MathError for irrational r or s, or when c carries a radicand
/// different from the one the solution needs.
SolvedFamily solve_family(const RecurrenceTarget& target);

/// c X_n + s X_{n-1} with X = G^(0,1,r,s); n >= 1.
QuadScalar predicted_minor(const RecurrenceTarget& target, long n);

} // namespace minorlab
