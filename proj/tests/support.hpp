#pragma once

#include "minorlab/scalar.hpp"

#include <cstdint>
#include <random>

namespace minorlab::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi)
    {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long range = 9, long max_den = 5) { return Rational(uniform(-range, range), uniform(1, max_den)); }

    QuadScalar scalar(FieldTag f)
    {
        return QuadScalar(f, rational(), f.is_rational() ? Rational(0) : rational());
    }

    QuadScalar nonzero(FieldTag f)
    {
        QuadScalar x = scalar(f);
        while (x.is_zero())
            x = scalar(f);
        return x;
    }

private:
    std::mt19937_64 engine_;
};

inline QuadScalar Z(long v, FieldTag f = {})
{
    return QuadScalar(f, v);
}

inline QuadScalar S(const char* text, FieldTag f = {})
{
    return parse_scalar(text, f);
}

} // namespace minorlab::testing
