#pragma once

// Square matrices over Q(sqrt(d)) and builders for the structured families:
// generalized Pascal triangles, 7-matrices, Toeplitz matrices, the bespoke
// families A, B, C, D, the unipotent triangles and the L/H factors of
// T_{G~,G}.

#include "minorlab/scalar.hpp"
#include "minorlab/sequence.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace minorlab {

/// Row-major square matrix indexed from (0,0).
class DenseMatrix {
public:
    DenseMatrix(FieldTag field, std::size_t order);

    static DenseMatrix identity(FieldTag field, std::size_t order);

    FieldTag field() const { return field_; }
    std::size_t order() const { return order_; }

    const QuadScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    /// Throws MathError if the value's field differs from the matrix field.
    void set(std::size_t i, std::size_t j, QuadScalar value);
    void add(std::size_t i, std::size_t j, const QuadScalar& delta);

    /// Top-left (k x k) block.
    DenseMatrix leading_block(std::size_t k) const;

    bool is_upper_hessenberg() const;
    bool all_integer() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    FieldTag field_;
    std::size_t order_;
    std::vector<QuadScalar> entries_;
};

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

namespace family {

struct Pascal {
    SequenceSpec alpha;
    SequenceSpec beta;
};
struct Seven {
    SequenceSpec alpha;
    SequenceSpec beta;
};
struct Toeplitz {
    SequenceSpec alpha;
    SequenceSpec beta;
};
/// Diagonal c, strict upper part a, strict lower part b.
struct ToeplitzAbc {
    QuadScalar a;
    QuadScalar b;
    QuadScalar c;
};
struct BespokeA {};
struct BespokeB {};
struct BespokeC {};
struct BespokeD {};
struct UnipotentL {};
struct UnipotentU {};
struct FactorL {
    QuadScalar a;
    QuadScalar b;
    QuadScalar r;
};
struct FactorH {
    QuadScalar a;
    QuadScalar b;
    QuadScalar r;
};

} // namespace family

using Family = std::variant<family::Pascal, family::Seven, family::Toeplitz, family::ToeplitzAbc, family::BespokeA,
                            family::BespokeB, family::BespokeC, family::BespokeD, family::UnipotentL,
                            family::UnipotentU, family::FactorL, family::FactorH>;

/// Adds delta * E_{ij} after the family is built.
struct Modifier {
    std::size_t i;
    std::size_t j;
    QuadScalar delta;
};

struct MatrixSpec {
    FieldTag field;
    std::size_t order = 1;
    Family family;
    std::vector<Modifier> modifiers;
};

const char* family_name(const Family& family);

/// Materializes the spec. Throws MathError on a gamma mismatch (alpha_0 !=
/// beta_0), a field mismatch or a bespoke family outside Q, and
/// std::out_of_range for a modifier outside the matrix.
DenseMatrix build(const MatrixSpec& spec);

DenseMatrix build_factor_L(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r, std::size_t n);
DenseMatrix build_factor_H(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r, std::size_t n);

/// Re-checks that `m` obeys the defining rule of the spec's family at every
/// cell, ignoring modifiers. Independent of the builders' fill order.
bool satisfies_family_rule(const MatrixSpec& spec, const DenseMatrix& m);

} // namespace minorlab
