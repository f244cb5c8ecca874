#include "minorlab/solver.hpp"

#include "minorlab/sequence.hpp"

#include <stdexcept>

namespace minorlab {

std::pair<BigInt, BigInt> squarefree_decomposition(const BigInt& value)
{
    if (value == 0)
        throw MathError("squarefree decomposition of zero");
    BigInt rest = abs(value);
    BigInt kernel = 1;
    BigInt cofactor = 1;
    for (BigInt p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            cofactor *= p;
        }
        if (rest % p == 0) {
            rest /= p;
            kernel *= p;
        }
    }
    kernel *= rest;
    return {kernel, cofactor};
}

SolvedFamily solve_family(const RecurrenceTarget& target)
{
    if (!target.r.is_rational() || !target.s.is_rational())
        throw MathError("target recurrence coefficients must be rational");
    const Rational r = target.r.rational_part();
    const Rational s = target.s.rational_part();

    SolvedFamily out;
    out.discriminant = r * r + 4 * s;

    // u = c - a and v = c - b are the roots of x^2 - r x - s.
    FieldTag field = target.c.field();
    Rational root_rational = 0; // sqrt(disc) = root_rational           (rational case)
    Rational root_radical = 0;  //            = root_radical * sqrt(d)  (quadratic case)
    if (sgn(out.discriminant) != 0) {
        // disc = N/M = N M / M^2 and N M = k^2 f.
        const BigInt num = out.discriminant.get_num();
        const BigInt den = out.discriminant.get_den();
        auto [kernel, cofactor] = squarefree_decomposition(num * den);
        const std::int64_t d = sgn(num) < 0 ? -kernel.get_si() : kernel.get_si();
        if (d == 1) {
            root_rational = Rational(cofactor, den);
        } else {
            FieldTag needed(d);
            out.extension_needed = needed;
            if (field != needed) {
                if (!target.c.is_rational())
                    throw MathError("c lies in a different quadratic field than the solutions");
                field = needed;
            }
            root_radical = Rational(cofactor, den);
        }
    } else {
        out.repeated_root = true;
    }

    const QuadScalar c = target.c.in_field(field);
    const QuadScalar root = QuadScalar(field, root_rational, 0) +
                            (sgn(root_radical) != 0 ? QuadScalar::radical(field) * root_radical : QuadScalar::zero(field));
    const QuadScalar u = (QuadScalar(field, r) + root) / 2L;
    const QuadScalar v = (QuadScalar(field, r) - root) / 2L;
    out.solutions.emplace_back(c - u, c - v);
    if (!out.repeated_root)
        out.solutions.emplace_back(c - v, c - u);
    return out;
}

QuadScalar predicted_minor(const RecurrenceTarget& target, long n)
{
    if (n < 1)
        throw std::invalid_argument("predicted minor requires n >= 1");
    FieldTag f = target.c.field();
    const QuadScalar r = target.r.in_field(f);
    const QuadScalar s = target.s.in_field(f);
    const GibonacciParams X{QuadScalar::zero(f), QuadScalar::one(f), r, s};
    return target.c * gibonacci_term(X, n) + s * gibonacci_term(X, n - 1);
}

} // namespace minorlab
