#include "minorlab/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minorlab {

EquimodularReport check_equimodular(const std::vector<MatrixSpec>& specs, std::size_t upto)
{
    if (specs.size() < 2)
        throw std::invalid_argument("equimodularity needs at least two matrices");
    for (const auto& s : specs)
        if (s.field != specs.front().field)
            throw MathError("equimodular specs must share one field");

    EquimodularReport report{specs, upto, true, std::nullopt, {}};
    std::vector<std::vector<QuadScalar>> minors;
    minors.reserve(specs.size());
    for (const auto& spec : specs) {
        MatrixSpec sized = spec;
        sized.order = std::max(spec.order, upto + 1);
        auto values = leading_minors(build(sized), MinorStrategy::per_block).values;
        values.resize(upto + 1);
        minors.push_back(std::move(values));
    }
    report.common_minors = minors.front();

    // First divergence: lowest minor index, then lowest spec index.
    for (std::size_t k = 0; k <= upto && report.verdict; ++k)
        for (std::size_t s = 1; s < specs.size(); ++s)
            if (minors[s][k] != minors[0][k]) {
                report.verdict = false;
                report.first_divergence = Divergence{k, 0, s, minors[0][k], minors[s][k]};
                break;
            }
    return report;
}

std::vector<MatrixSpec> six_matrix_specs(const SequenceSpec& alpha, const SequenceSpec& beta, std::size_t order)
{
    const FieldTag f = alpha.field();
    const auto ca = SequenceSpec::binomial(alpha);
    const auto cb = SequenceSpec::binomial(beta);
    return {
        MatrixSpec{f, order, family::Toeplitz{alpha, beta}, {}},
        MatrixSpec{f, order, family::Toeplitz{beta, alpha}, {}},
        MatrixSpec{f, order, family::Pascal{ca, cb}, {}},
        MatrixSpec{f, order, family::Pascal{cb, ca}, {}},
        MatrixSpec{f, order, family::Seven{ca, beta}, {}},
        MatrixSpec{f, order, family::Seven{cb, alpha}, {}},
    };
}

EquimodularReport six_matrix_family(const SequenceSpec& alpha, const SequenceSpec& beta, std::size_t upto)
{
    const auto a0 = materialize(alpha, 0)[0];
    const auto b0 = materialize(beta, 0)[0];
    if (a0 != b0)
        throw MathError("alpha and beta must start with a common first term");
    return check_equimodular(six_matrix_specs(alpha, beta, upto + 1), upto);
}

MatrixSpec toeplitz_alternating_gibonacci(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r,
                                          std::size_t n)
{
    const FieldTag f = r.field();
    const auto G = SequenceSpec::gibonacci({a, b, r, QuadScalar::one(f)});
    return MatrixSpec{f, n + 1, family::Toeplitz{SequenceSpec::alternate(G), G}, {}};
}

bool verify_factorization(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r, std::size_t n)
{
    const DenseMatrix T = build(toeplitz_alternating_gibonacci(a, b, r, n));
    return T == build_factor_L(a, b, r, n) * build_factor_H(a, b, r, n);
}

bool verify_gibonacci_identities(const QuadScalar& r, std::size_t m, std::size_t n)
{
    const auto params = GibonacciParams::barred(r);
    auto G = [&](std::size_t k, long shift = 0) { return gibonacci_term(params, static_cast<long>(k) + shift); };
    const bool addition = G(n + m) == G(n) * G(m, -1) + G(n + 1) * G(m);
    const QuadScalar sign = QuadScalar(r.field(), m % 2 == 0 ? 1 : -1);
    const bool cassini = G(m + 1) * G(m, -1) - G(m) * G(m) == sign;
    return addition && cassini;
}

const char* sequence_symbol(NamedSequence s)
{
    switch (s) {
    case NamedSequence::fibonacci:
        return "F";
    case NamedSequence::lucas:
        return "L";
    case NamedSequence::pell:
        return "P";
    case NamedSequence::jacobsthal:
        return "J";
    }
    return "?";
}

GibonacciParams named_params(NamedSequence s, FieldTag field)
{
    switch (s) {
    case NamedSequence::fibonacci:
        return GibonacciParams::fibonacci(field);
    case NamedSequence::lucas:
        return GibonacciParams::lucas(field);
    case NamedSequence::pell:
        return GibonacciParams::pell(field);
    case NamedSequence::jacobsthal:
        return GibonacciParams::jacobsthal(field);
    }
    throw std::invalid_argument("unknown named sequence");
}

QuadScalar named_term(NamedSequence s, long k, FieldTag field)
{
    const auto p = named_params(s, field);
    if (k >= 0)
        return gibonacci_term(p, k);
    // X_{j-2} = (X_j - r X_{j-1}) / s, walking down from (X_1, X_0).
    QuadScalar upper = p.b;
    QuadScalar lower = p.a;
    for (long j = 0; j > k; --j) {
        QuadScalar next = (upper - p.r * lower) / p.s;
        upper = std::move(lower);
        lower = std::move(next);
    }
    return lower;
}

std::string SequenceMatch::describe() const
{
    std::ostringstream os;
    if (coeff < 0)
        os << '-';
    if (rho != 1)
        os << '(' << to_string(rho) << ")^(n-1)*";
    os << sequence_symbol(sequence) << "_{";
    if (sigma != 1)
        os << sigma;
    os << 'n';
    if (tau > 0)
        os << '+' << tau;
    else if (tau < 0)
        os << tau;
    os << '}';
    return os.str();
}

std::vector<SequenceMatch> identify_minor_sequence(const std::vector<QuadScalar>& values)
{
    if (values.size() < 4)
        throw std::invalid_argument("identification needs at least 4 values");
    const FieldTag f = values.front().field();
    std::vector<SequenceMatch> matches;

    for (auto seq : {NamedSequence::fibonacci, NamedSequence::lucas, NamedSequence::pell, NamedSequence::jacobsthal})
        for (long sigma : IdentifyGrid::sigma_values)
            for (long tau = IdentifyGrid::tau_min; tau <= IdentifyGrid::tau_max; ++tau)
                for (const auto& rho_pair : IdentifyGrid::rho_values) {
                    const Rational rho(rho_pair[0], rho_pair[1]);
                    for (long coeff : IdentifyGrid::coeff_values) {
                        bool ok = true;
                        Rational power = 1;
                        for (std::size_t n = 0; n < values.size() && ok; ++n) {
                            if (n >= 2)
                                power *= rho;
                            const QuadScalar x = named_term(seq, sigma * static_cast<long>(n) + tau, f);
                            ok = values[n] == x * Rational(power * coeff);
                        }
                        if (ok)
                            matches.push_back(SequenceMatch{seq, sigma, tau, rho, coeff});
                    }
                }
    return matches;
}

} // namespace minorlab
