#pragma once

// Declarative sequence generators and the alternating, binomial and inverse
// binomial transforms.

#include "minorlab/scalar.hpp"

#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace minorlab {

/// G_0 = a, G_1 = b, G_n = r G_{n-1} + s G_{n-2}.
struct GibonacciParams {
    QuadScalar a;
    QuadScalar b;
    QuadScalar r;
    QuadScalar s;

    static GibonacciParams fibonacci(FieldTag field = {});
    static GibonacciParams lucas(FieldTag field = {});
    static GibonacciParams pell(FieldTag field = {});
    static GibonacciParams jacobsthal(FieldTag field = {});
    /// G-bar = G^(0,1,r,1).
    static GibonacciParams barred(const QuadScalar& r);

    FieldTag field() const { return a.field(); }
    bool is_barred() const { return a.is_zero() && b.is_one() && s.is_one(); }
};

class SequenceSpec;

enum class TransformKind { alternate, binomial, inverse_binomial };

namespace seq {

struct Gibonacci {
    GibonacciParams params;
    std::size_t shift = 0;
};

struct HeadThenConstant {
    std::vector<QuadScalar> head;
    QuadScalar tail;
};

/// Index i < |head| reads head[i]; otherwise cycle[(i - |head|) mod |cycle|].
struct Periodic {
    std::vector<QuadScalar> head;
    std::vector<QuadScalar> cycle;
};

struct Arithmetic {
    QuadScalar start;
    QuadScalar step;
};

/// u * t^i + v.
struct GeometricAffine {
    QuadScalar u;
    QuadScalar t;
    QuadScalar v;
};

struct Explicit {
    std::vector<QuadScalar> terms;
};

struct Transformed {
    TransformKind kind;
    std::shared_ptr<const SequenceSpec> inner;
};

} // namespace seq

/// Immutable description of an infinite (or explicit, finite) sequence.
class SequenceSpec {
public:
    using Kind = std::variant<seq::Gibonacci, seq::HeadThenConstant, seq::Periodic, seq::Arithmetic,
                              seq::GeometricAffine, seq::Explicit, seq::Transformed>;

    explicit SequenceSpec(Kind kind);

    static SequenceSpec gibonacci(GibonacciParams params, std::size_t shift = 0);
    static SequenceSpec head_then_constant(std::vector<QuadScalar> head, QuadScalar tail);
    static SequenceSpec periodic(std::vector<QuadScalar> head, std::vector<QuadScalar> cycle);
    static SequenceSpec arithmetic(QuadScalar start, QuadScalar step);
    static SequenceSpec geometric_affine(QuadScalar u, QuadScalar t, QuadScalar v);
    static SequenceSpec explicit_terms(std::vector<QuadScalar> terms);

    static SequenceSpec alternate(SequenceSpec inner);
    static SequenceSpec binomial(SequenceSpec inner);
    static SequenceSpec inverse_binomial(SequenceSpec inner);

    const Kind& kind() const { return kind_; }
    FieldTag field() const;

private:
    Kind kind_;
};

/// Terms 0..n of a spec.
struct SequenceWindow {
    SequenceSpec spec;
    std::vector<QuadScalar> terms;

    std::size_t size() const { return terms.size(); }
    const QuadScalar& operator[](std::size_t i) const { return terms[i]; }
};

/// Terms 0..n. Throws std::out_of_range when an explicit spec is exhausted.
SequenceWindow materialize(const SequenceSpec& spec, std::size_t n);

SequenceWindow alternate_transform(const SequenceWindow& window);
/// check-alpha_i = sum_k C(i,k) alpha_k.
SequenceWindow binomial_transform(const SequenceWindow& window);
/// hat-alpha_i = sum_k (-1)^(i+k) C(i,k) alpha_k.
SequenceWindow inverse_binomial_transform(const SequenceWindow& window);

/// Exact G_n by iteration. n = -1 is only defined for the barred family
/// G^(0,1,r,1), where it is 1.
QuadScalar gibonacci_term(const GibonacciParams& params, long n);

enum class TransformVariant { binomial, binomial_of_alternate };

/// Second-order recurrence satisfied by the binomial transform of G^(a,b,r,1)
/// (resp. of its alternating-sign version): X_i = c1 X_{i-1} + c2 X_{i-2}.
std::pair<QuadScalar, QuadScalar> transformed_recurrence_coeffs(const QuadScalar& r, TransformVariant variant);

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial_coefficient(unsigned long n, unsigned long k);

} // namespace minorlab
