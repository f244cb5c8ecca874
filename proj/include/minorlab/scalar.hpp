#pragma once

// Exact arithmetic in Q(sqrt(d)) for a fixed squarefree radicand d.
//
// Every matrix entry and determinant in the library is a QuadScalar. The
// rational components are GMP rationals, so there is no rounding anywhere.
// d = 0 denotes the plain rationals, d = 5 houses the golden ratio and its
// conjugate, d = -1 houses the imaginary unit.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minorlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown on violated preconditions of exact arithmetic (field mismatch,
/// division by zero, non-squarefree radicand).
class MathError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when text input does not follow the scalar or spec grammar.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_squarefree(std::int64_t value);

/// Radicand of the ambient quadratic field.
class FieldTag {
public:
    constexpr FieldTag() = default;
    /// Throws MathError unless d == 0 or d is squarefree and != 1.
    explicit FieldTag(std::int64_t d);

    static FieldTag rationals() { return FieldTag{}; }

    std::int64_t d() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    friend bool operator==(FieldTag, FieldTag) = default;

private:
    std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldTag field);

/// Element p + q*sqrt(d). Always canonical: q == 0 whenever d == 0.
class QuadScalar {
public:
    /// Zero of Q.
    QuadScalar() = default;
    QuadScalar(FieldTag field, Rational p, Rational q = 0);

    static QuadScalar zero(FieldTag field) { return QuadScalar(field, 0); }
    static QuadScalar one(FieldTag field) { return QuadScalar(field, 1); }
    /// sqrt(d) itself; MathError for the rational field.
    static QuadScalar radical(FieldTag field);

    FieldTag field() const { return field_; }
    const Rational& rational_part() const { return p_; }
    const Rational& radical_part() const { return q_; }

    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    bool is_one() const { return p_ == 1 && sgn(q_) == 0; }
    bool is_rational() const { return sgn(q_) == 0; }
    /// True when the value is an integer (radical part zero, denominator one).
    bool is_integer() const;

    /// p^2 - d*q^2; zero iff the element is zero.
    Rational norm() const;
    /// p - q*sqrt(d).
    QuadScalar conjugate() const;
    /// Same value viewed in another field. Only rational values can move.
    QuadScalar in_field(FieldTag target) const;

    QuadScalar operator-() const;
    QuadScalar& operator+=(const QuadScalar& rhs);
    QuadScalar& operator-=(const QuadScalar& rhs);
    QuadScalar& operator*=(const QuadScalar& rhs);
    QuadScalar& operator/=(const QuadScalar& rhs);

    QuadScalar& operator+=(const Rational& rhs);
    QuadScalar& operator-=(const Rational& rhs);
    QuadScalar& operator*=(const Rational& rhs);
    QuadScalar& operator/=(const Rational& rhs);

    friend bool operator==(const QuadScalar& a, const QuadScalar& b)
    {
        return a.field_ == b.field_ && a.p_ == b.p_ && a.q_ == b.q_;
    }

private:
    void require_same_field(const QuadScalar& other, const char* op) const;

    FieldTag field_;
    Rational p_ = 0;
    Rational q_ = 0;
};

inline QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
inline QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
inline QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
inline QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

inline QuadScalar operator+(QuadScalar a, const Rational& b) { return a += b; }
inline QuadScalar operator-(QuadScalar a, const Rational& b) { return a -= b; }
inline QuadScalar operator*(QuadScalar a, const Rational& b) { return a *= b; }
inline QuadScalar operator/(QuadScalar a, const Rational& b) { return a /= b; }
inline QuadScalar operator+(const Rational& a, QuadScalar b) { return b += a; }
inline QuadScalar operator*(const Rational& a, QuadScalar b) { return b *= a; }
inline QuadScalar operator-(const Rational& a, const QuadScalar& b) { return -b + a; }

inline QuadScalar operator+(QuadScalar a, long b) { return a += Rational(b); }
inline QuadScalar operator-(QuadScalar a, long b) { return a -= Rational(b); }
inline QuadScalar operator*(QuadScalar a, long b) { return a *= Rational(b); }
inline QuadScalar operator/(QuadScalar a, long b) { return a /= Rational(b); }
inline QuadScalar operator*(long a, QuadScalar b) { return b *= Rational(a); }
inline QuadScalar operator-(long a, const QuadScalar& b) { return -b + Rational(a); }

/// x^k with the convention x^0 = 1 for every x, including 0.
QuadScalar int_pow(const QuadScalar& x, unsigned long k);

/// Parses `term (("+"|"-") term)?` where `term := rat | rat "*" rad | rad`.
/// "s" is sqrt(d); "i" is an alias only when d == -1.
QuadScalar parse_scalar(std::string_view text, FieldTag field);

/// Canonical text in the same grammar: lowest terms, "p+q*s", zero parts omitted.
std::string to_string(const QuadScalar& x);
std::string to_string(const Rational& x);

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

} // namespace minorlab
