#include "minorlab/sequence.hpp"

#include <stdexcept>
#include <string>

namespace minorlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_field(const std::vector<QuadScalar>& values, FieldTag field)
{
    for (const auto& v : values)
        if (v.field() != field)
            throw MathError("sequence terms must share one field");
}

void require_field(std::initializer_list<const QuadScalar*> values)
{
    FieldTag field = (*values.begin())->field();
    for (const auto* v : values)
        if (v->field() != field)
            throw MathError("sequence parameters must share one field");
}

} // namespace

GibonacciParams GibonacciParams::fibonacci(FieldTag f)
{
    return {QuadScalar(f, 0), QuadScalar(f, 1), QuadScalar(f, 1), QuadScalar(f, 1)};
}

GibonacciParams GibonacciParams::lucas(FieldTag f)
{
    return {QuadScalar(f, 2), QuadScalar(f, 1), QuadScalar(f, 1), QuadScalar(f, 1)};
}

GibonacciParams GibonacciParams::pell(FieldTag f)
{
    return {QuadScalar(f, 0), QuadScalar(f, 1), QuadScalar(f, 2), QuadScalar(f, 1)};
}

GibonacciParams GibonacciParams::jacobsthal(FieldTag f)
{
    return {QuadScalar(f, 0), QuadScalar(f, 1), QuadScalar(f, 1), QuadScalar(f, 2)};
}

GibonacciParams GibonacciParams::barred(const QuadScalar& r)
{
    FieldTag f = r.field();
    return {QuadScalar(f, 0), QuadScalar(f, 1), r, QuadScalar(f, 1)};
}

SequenceSpec::SequenceSpec(Kind kind) : kind_(std::move(kind))
{
    std::visit(overloaded{
                   [](const seq::Gibonacci& g) { require_field({&g.params.a, &g.params.b, &g.params.r, &g.params.s}); },
                   [](const seq::HeadThenConstant& h) { require_field(h.head, h.tail.field()); },
                   [](const seq::Periodic& p) {
                       if (p.cycle.empty())
                           throw std::invalid_argument("periodic sequence needs a nonempty cycle");
                       require_field(p.head, p.cycle.front().field());
                       require_field(p.cycle, p.cycle.front().field());
                   },
                   [](const seq::Arithmetic& a) { require_field({&a.start, &a.step}); },
                   [](const seq::GeometricAffine& g) { require_field({&g.u, &g.t, &g.v}); },
                   [](const seq::Explicit& e) {
                       if (!e.terms.empty())
                           require_field(e.terms, e.terms.front().field());
                   },
                   [](const seq::Transformed& t) {
                       if (!t.inner)
                           throw std::invalid_argument("transform without inner sequence");
                   },
               },
               kind_);
}

SequenceSpec SequenceSpec::gibonacci(GibonacciParams params, std::size_t shift)
{
    return SequenceSpec(seq::Gibonacci{std::move(params), shift});
}

SequenceSpec SequenceSpec::head_then_constant(std::vector<QuadScalar> head, QuadScalar tail)
{
    return SequenceSpec(seq::HeadThenConstant{std::move(head), std::move(tail)});
}

SequenceSpec SequenceSpec::periodic(std::vector<QuadScalar> head, std::vector<QuadScalar> cycle)
{
    return SequenceSpec(seq::Periodic{std::move(head), std::move(cycle)});
}

SequenceSpec SequenceSpec::arithmetic(QuadScalar start, QuadScalar step)
{
    return SequenceSpec(seq::Arithmetic{std::move(start), std::move(step)});
}

SequenceSpec SequenceSpec::geometric_affine(QuadScalar u, QuadScalar t, QuadScalar v)
{
    return SequenceSpec(seq::GeometricAffine{std::move(u), std::move(t), std::move(v)});
}

SequenceSpec SequenceSpec::explicit_terms(std::vector<QuadScalar> terms)
{
    return SequenceSpec(seq::Explicit{std::move(terms)});
}

SequenceSpec SequenceSpec::alternate(SequenceSpec inner)
{
    return SequenceSpec(seq::Transformed{TransformKind::alternate, std::make_shared<const SequenceSpec>(std::move(inner))});
}

SequenceSpec SequenceSpec::binomial(SequenceSpec inner)
{
    return SequenceSpec(seq::Transformed{TransformKind::binomial, std::make_shared<const SequenceSpec>(std::move(inner))});
}

SequenceSpec SequenceSpec::inverse_binomial(SequenceSpec inner)
{
    return SequenceSpec(
        seq::Transformed{TransformKind::inverse_binomial, std::make_shared<const SequenceSpec>(std::move(inner))});
}

FieldTag SequenceSpec::field() const
{
    return std::visit(overloaded{
                          [](const seq::Gibonacci& g) { return g.params.field(); },
                          [](const seq::HeadThenConstant& h) { return h.tail.field(); },
                          [](const seq::Periodic& p) { return p.cycle.front().field(); },
                          [](const seq::Arithmetic& a) { return a.start.field(); },
                          [](const seq::GeometricAffine& g) { return g.u.field(); },
                          [](const seq::Explicit& e) { return e.terms.empty() ? FieldTag{} : e.terms.front().field(); },
                          [](const seq::Transformed& t) { return t.inner->field(); },
                      },
                      kind_);
}

BigInt binomial_coefficient(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace {

std::vector<QuadScalar> apply_transform(TransformKind kind, const std::vector<QuadScalar>& in)
{
    std::vector<QuadScalar> out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        switch (kind) {
        case TransformKind::alternate:
            out.push_back(i % 2 == 0 ? in[i] : -in[i]);
            break;
        case TransformKind::binomial:
        case TransformKind::inverse_binomial: {
            QuadScalar sum = QuadScalar::zero(in[i].field());
            for (std::size_t k = 0; k <= i; ++k) {
                Rational c(binomial_coefficient(i, k));
                if (kind == TransformKind::inverse_binomial && (i + k) % 2 == 1)
                    c = -c;
                sum += in[k] * c;
            }
            out.push_back(std::move(sum));
            break;
        }
        }
    }
    return out;
}

} // namespace

SequenceWindow materialize(const SequenceSpec& spec, std::size_t n)
{
    const std::size_t count = n + 1;
    std::vector<QuadScalar> terms;
    terms.reserve(count);

    std::visit(overloaded{
                   [&](const seq::Gibonacci& g) {
                       QuadScalar prev = g.params.a;
                       QuadScalar cur = g.params.b;
                       for (std::size_t i = 0; i < g.shift + count; ++i) {
                           if (i >= g.shift)
                               terms.push_back(prev);
                           QuadScalar next = g.params.r * cur + g.params.s * prev;
                           prev = std::move(cur);
                           cur = std::move(next);
                       }
                   },
                   [&](const seq::HeadThenConstant& h) {
                       for (std::size_t i = 0; i < count; ++i)
                           terms.push_back(i < h.head.size() ? h.head[i] : h.tail);
                   },
                   [&](const seq::Periodic& p) {
                       for (std::size_t i = 0; i < count; ++i)
                           terms.push_back(i < p.head.size() ? p.head[i] : p.cycle[(i - p.head.size()) % p.cycle.size()]);
                   },
                   [&](const seq::Arithmetic& a) {
                       QuadScalar cur = a.start;
                       for (std::size_t i = 0; i < count; ++i) {
                           terms.push_back(cur);
                           cur += a.step;
                       }
                   },
                   [&](const seq::GeometricAffine& g) {
                       QuadScalar power = QuadScalar::one(g.u.field());
                       for (std::size_t i = 0; i < count; ++i) {
                           terms.push_back(g.u * power + g.v);
                           power *= g.t;
                       }
                   },
                   [&](const seq::Explicit& e) {
                       if (e.terms.size() < count)
                           throw std::out_of_range("explicit sequence has " + std::to_string(e.terms.size()) +
                                                   " terms, " + std::to_string(count) + " requested");
                       terms.assign(e.terms.begin(), e.terms.begin() + static_cast<std::ptrdiff_t>(count));
                   },
                   [&](const seq::Transformed& t) { terms = apply_transform(t.kind, materialize(*t.inner, n).terms); },
               },
               spec.kind());
    return SequenceWindow{spec, std::move(terms)};
}

SequenceWindow alternate_transform(const SequenceWindow& window)
{
    return {SequenceSpec::alternate(window.spec), apply_transform(TransformKind::alternate, window.terms)};
}

SequenceWindow binomial_transform(const SequenceWindow& window)
{
    return {SequenceSpec::binomial(window.spec), apply_transform(TransformKind::binomial, window.terms)};
}

SequenceWindow inverse_binomial_transform(const SequenceWindow& window)
{
    return {SequenceSpec::inverse_binomial(window.spec), apply_transform(TransformKind::inverse_binomial, window.terms)};
}

QuadScalar gibonacci_term(const GibonacciParams& params, long n)
{
    if (n < -1)
        throw std::out_of_range("gibonacci index below -1");
    if (n == -1) {
        if (!params.is_barred())
            throw std::out_of_range("index -1 is only defined for the barred sequence G^(0,1,r,1)");
        return QuadScalar::one(params.field());
    }
    QuadScalar prev = params.a;
    QuadScalar cur = params.b;
    for (long i = 0; i < n; ++i) {
        QuadScalar next = params.r * cur + params.s * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return prev;
}

std::pair<QuadScalar, QuadScalar> transformed_recurrence_coeffs(const QuadScalar& r, TransformVariant variant)
{
    if (variant == TransformVariant::binomial)
        return {r + 2L, -r};
    return {2L - r, r};
}

} // namespace minorlab
