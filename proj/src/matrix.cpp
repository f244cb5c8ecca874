#include "minorlab/matrix.hpp"

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

QuadScalar integer(FieldTag field, long v)
{
    return QuadScalar(field, v);
}

std::vector<QuadScalar> window_in(const SequenceSpec& spec, std::size_t n, FieldTag field)
{
    std::vector<QuadScalar> terms = materialize(spec, n).terms;
    for (auto& t : terms)
        t = t.in_field(field);
    return terms;
}

struct Boundary {
    std::vector<QuadScalar> alpha;
    std::vector<QuadScalar> beta;
};

Boundary boundary(const SequenceSpec& alpha, const SequenceSpec& beta, std::size_t order, FieldTag field)
{
    Boundary out{window_in(alpha, order - 1, field), window_in(beta, order - 1, field)};
    if (out.alpha.front() != out.beta.front())
        throw MathError("alpha_0 = " + to_string(out.alpha.front()) + " differs from beta_0 = " +
                        to_string(out.beta.front()) + "; the sequences must start with a common term");
    return out;
}

void require_rational_field(FieldTag field, const char* name)
{
    if (!field.is_rational())
        throw MathError(std::string(name) + " is defined over the integers only (field d = 0)");
}

// G-bar_{-1}, G-bar_0, ..., G-bar_n; index k stored at k + 1.
std::vector<QuadScalar> barred_terms(const QuadScalar& r, std::size_t n)
{
    std::vector<QuadScalar> out;
    out.push_back(QuadScalar::one(r.field()));
    auto window = materialize(SequenceSpec::gibonacci(GibonacciParams::barred(r)), n + 1).terms;
    out.insert(out.end(), window.begin(), window.end());
    return out;
}

QuadScalar sign(long k, QuadScalar x)
{
    return k % 2 == 0 ? x : -x;
}

} // namespace

DenseMatrix::DenseMatrix(FieldTag field, std::size_t order)
    : field_(field), order_(order), entries_(order * order, QuadScalar::zero(field))
{
}

DenseMatrix DenseMatrix::identity(FieldTag field, std::size_t order)
{
    DenseMatrix m(field, order);
    for (std::size_t i = 0; i < order; ++i)
        m.set(i, i, QuadScalar::one(field));
    return m;
}

void DenseMatrix::set(std::size_t i, std::size_t j, QuadScalar value)
{
    if (i >= order_ || j >= order_)
        throw std::out_of_range("matrix index out of range");
    if (value.field() != field_)
        throw MathError("matrix entry field mismatch");
    entries_[i * order_ + j] = std::move(value);
}

void DenseMatrix::add(std::size_t i, std::size_t j, const QuadScalar& delta)
{
    if (i >= order_ || j >= order_)
        throw std::out_of_range("modifier (" + std::to_string(i) + "," + std::to_string(j) + ") outside order " +
                                std::to_string(order_));
    entries_[i * order_ + j] += delta;
}

DenseMatrix DenseMatrix::leading_block(std::size_t k) const
{
    if (k > order_)
        throw std::out_of_range("leading block larger than matrix");
    DenseMatrix out(field_, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.entries_[i * k + j] = (*this)(i, j);
    return out;
}

bool DenseMatrix::is_upper_hessenberg() const
{
    for (std::size_t i = 2; i < order_; ++i)
        for (std::size_t j = 0; j + 1 < i; ++j)
            if (!(*this)(i, j).is_zero())
                return false;
    return true;
}

bool DenseMatrix::all_integer() const
{
    for (const auto& e : entries_)
        if (!e.is_integer())
            return false;
    return true;
}

DenseMatrix transpose(const DenseMatrix& m)
{
    DenseMatrix out(m.field(), m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            out.set(j, i, m(i, j));
    return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.field() != b.field())
        throw MathError("matrix product field mismatch");
    if (a.order() != b.order())
        throw std::invalid_argument("matrix product order mismatch");
    const std::size_t n = a.order();
    DenseMatrix out(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QuadScalar sum = QuadScalar::zero(a.field());
            for (std::size_t k = 0; k < n; ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero())
                    sum += a(i, k) * b(k, j);
            out.set(i, j, std::move(sum));
        }
    return out;
}

const char* family_name(const Family& family)
{
    return std::visit(overloaded{
                          [](const family::Pascal&) { return "pascal"; },
                          [](const family::Seven&) { return "seven"; },
                          [](const family::Toeplitz&) { return "toeplitz"; },
                          [](const family::ToeplitzAbc&) { return "toeplitz_abc"; },
                          [](const family::BespokeA&) { return "bespoke_A"; },
                          [](const family::BespokeB&) { return "bespoke_B"; },
                          [](const family::BespokeC&) { return "bespoke_C"; },
                          [](const family::BespokeD&) { return "bespoke_D"; },
                          [](const family::UnipotentL&) { return "unipotent_L"; },
                          [](const family::UnipotentU&) { return "unipotent_U"; },
                          [](const family::FactorL&) { return "factor_L"; },
                          [](const family::FactorH&) { return "factor_H"; },
                      },
                      family);
}

DenseMatrix build_factor_L(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r, std::size_t n)
{
    const FieldTag f = r.field();
    if (a.field() != f || b.field() != f)
        throw MathError("factor L parameters must share one field");
    const auto gbar = barred_terms(r, n);
    auto G = [&](long k) { return gbar[static_cast<std::size_t>(k + 1)]; };

    DenseMatrix L(f, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const long li = static_cast<long>(i);
        L.set(i, 0, sign(li, G(li - 1)));
        // Columns j >= 1 repeat column 1 shifted down by j - 1.
        for (std::size_t j = 1; j <= i + 1 && j <= n; ++j) {
            const long k = li - static_cast<long>(j) + 1;
            L.set(i, j, sign(k + 1, G(k)));
        }
    }
    return L;
}

DenseMatrix build_factor_H(const QuadScalar& a, const QuadScalar& b, const QuadScalar& r, std::size_t n)
{
    const FieldTag f = r.field();
    if (a.field() != f || b.field() != f)
        throw MathError("factor H parameters must share one field");
    const auto G = materialize(SequenceSpec::gibonacci({a, b, r, QuadScalar::one(f)}), n).terms;

    DenseMatrix H(f, n + 1);
    H.set(0, 0, G[0]);
    for (std::size_t j = 1; j <= n; ++j)
        H.set(0, j, G[j]);
    if (n >= 1) {
        H.set(1, 0, -G[1]);
        for (std::size_t j = 1; j <= n; ++j)
            H.set(1, j, G[j - 1]);
    }
    const QuadScalar sub = r * a - b * 2L;
    for (std::size_t i = 2; i <= n; ++i)
        H.set(i, i - 1, sub);
    return H;
}

DenseMatrix build(const MatrixSpec& spec)
{
    if (spec.order == 0)
        throw std::invalid_argument("matrix order must be at least 1");
    const FieldTag f = spec.field;
    const std::size_t N = spec.order;
    DenseMatrix m(f, N);

    std::visit(overloaded{
                   [&](const family::Pascal& p) {
                       auto bd = boundary(p.alpha, p.beta, N, f);
                       for (std::size_t i = 0; i < N; ++i) {
                           m.set(i, 0, bd.alpha[i]);
                           m.set(0, i, bd.beta[i]);
                       }
                       for (std::size_t i = 1; i < N; ++i)
                           for (std::size_t j = 1; j < N; ++j)
                               m.set(i, j, m(i, j - 1) + m(i - 1, j));
                   },
                   [&](const family::Seven& s) {
                       auto bd = boundary(s.alpha, s.beta, N, f);
                       for (std::size_t i = 0; i < N; ++i) {
                           m.set(i, 0, bd.alpha[i]);
                           m.set(0, i, bd.beta[i]);
                       }
                       for (std::size_t i = 1; i < N; ++i)
                           for (std::size_t j = 1; j < N; ++j)
                               m.set(i, j, m(i - 1, j - 1) + m(i - 1, j));
                   },
                   [&](const family::Toeplitz& t) {
                       auto bd = boundary(t.alpha, t.beta, N, f);
                       for (std::size_t i = 0; i < N; ++i)
                           for (std::size_t j = 0; j < N; ++j)
                               m.set(i, j, i >= j ? bd.alpha[i - j] : bd.beta[j - i]);
                   },
                   [&](const family::ToeplitzAbc& t) {
                       const QuadScalar a = t.a.in_field(f), b = t.b.in_field(f), c = t.c.in_field(f);
                       for (std::size_t i = 0; i < N; ++i)
                           for (std::size_t j = 0; j < N; ++j)
                               m.set(i, j, i == j ? c : (i < j ? a : b));
                   },
                   [&](const family::BespokeA&) {
                       require_rational_field(f, "bespoke_A");
                       for (std::size_t i = 0; i < N; ++i)
                           for (std::size_t j = 0; j < N; ++j)
                               m.set(i, j,
                                     i * j == 0 ? integer(f, 1)
                                                : m(i, j - 1) + m(i - 1, j) + (static_cast<long>(i) - static_cast<long>(j)));
                   },
                   [&](const family::BespokeB&) {
                       require_rational_field(f, "bespoke_B");
                       for (std::size_t j = 0; j < N; ++j)
                           m.set(0, j, integer(f, static_cast<long>(j) + 2));
                       for (std::size_t i = 1; i < N; ++i) {
                           const long li = static_cast<long>(i);
                           m.set(i, 0, m(i - 1, 0) * 4L + (li * li - 7 * li - 5));
                           for (std::size_t j = 1; j < N; ++j)
                               m.set(i, j, m(i, j - 1) + m(i - 1, j) - 2 * (li + static_cast<long>(j)));
                       }
                   },
                   [&](const family::BespokeC&) {
                       require_rational_field(f, "bespoke_C");
                       for (std::size_t j = 0; j < N; ++j)
                           m.set(0, j, j <= 1 ? integer(f, 2 - static_cast<long>(j)) : m(0, j - 2) * 2L - m(0, j - 1));
                       for (std::size_t i = 1; i < N; ++i) {
                           BigInt pow3;
                           mpz_ui_pow_ui(pow3.get_mpz_t(), 3, i - 1);
                           BigInt numer = 5 * (pow3 - 2 * static_cast<long>(i) - 1);
                           if (numer % 2 != 0)
                               throw MathError("bespoke_C column term is not an integer at row " + std::to_string(i));
                           m.set(i, 0, m(i - 1, 0) * 3L + Rational(BigInt(numer / 2)));
                           for (std::size_t j = 1; j < N; ++j)
                               m.set(i, j, m(i - 1, j - 1) + m(i - 1, j) - 2 * static_cast<long>(i));
                       }
                   },
                   [&](const family::BespokeD&) {
                       require_rational_field(f, "bespoke_D");
                       for (std::size_t i = 0; i < N; ++i)
                           for (std::size_t j = 0; j < N; ++j) {
                               if (i == 0)
                                   m.set(i, j, integer(f, 1));
                               else if (j == 0)
                                   m.set(i, j, integer(f, static_cast<long>((i + 1) * (i + 1))));
                               else
                                   m.set(i, j, QuadScalar(f, Rational(binomial_coefficient(j, i))));
                           }
                   },
                   [&](const family::UnipotentL&) {
                       for (std::size_t i = 0; i < N; ++i)
                           for (std::size_t j = 0; j <= i; ++j)
                               m.set(i, j, QuadScalar(f, Rational(binomial_coefficient(i, j))));
                   },
                   [&](const family::UnipotentU&) {
                       for (std::size_t i = 0; i < N; ++i)
                           for (std::size_t j = i; j < N; ++j)
                               m.set(i, j, QuadScalar(f, Rational(binomial_coefficient(j, i))));
                   },
                   [&](const family::FactorL& p) {
                       m = build_factor_L(p.a.in_field(f), p.b.in_field(f), p.r.in_field(f), N - 1);
                   },
                   [&](const family::FactorH& p) {
                       m = build_factor_H(p.a.in_field(f), p.b.in_field(f), p.r.in_field(f), N - 1);
                   },
               },
               spec.family);

    for (const auto& mod : spec.modifiers)
        m.add(mod.i, mod.j, mod.delta.in_field(f));
    return m;
}

namespace {

// Each checker states the family's defining rule directly, cell by cell.
bool check_boundary(const DenseMatrix& m, const SequenceSpec& alpha, const SequenceSpec& beta)
{
    const std::size_t N = m.order();
    auto a = window_in(alpha, N - 1, m.field());
    auto b = window_in(beta, N - 1, m.field());
    for (std::size_t i = 0; i < N; ++i)
        if (m(i, 0) != a[i] || m(0, i) != b[i])
            return false;
    return true;
}

} // namespace

bool satisfies_family_rule(const MatrixSpec& spec, const DenseMatrix& m)
{
    const std::size_t N = m.order();
    const FieldTag f = m.field();
    auto all_cells = [&](auto&& rule) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (!rule(i, j))
                    return false;
        return true;
    };
    auto interior = [&](auto&& rule) {
        for (std::size_t i = 1; i < N; ++i)
            for (std::size_t j = 1; j < N; ++j)
                if (!rule(i, j))
                    return false;
        return true;
    };
    auto L = [](std::size_t x) { return static_cast<long>(x); };

    return std::visit(
        overloaded{
            [&](const family::Pascal& p) {
                return check_boundary(m, p.alpha, p.beta) &&
                       interior([&](auto i, auto j) { return m(i, j) == m(i, j - 1) + m(i - 1, j); });
            },
            [&](const family::Seven& s) {
                return check_boundary(m, s.alpha, s.beta) &&
                       interior([&](auto i, auto j) { return m(i, j) == m(i - 1, j - 1) + m(i - 1, j); });
            },
            [&](const family::Toeplitz& t) {
                return check_boundary(m, t.alpha, t.beta) &&
                       interior([&](auto i, auto j) { return m(i, j) == m(i - 1, j - 1); });
            },
            [&](const family::ToeplitzAbc& t) {
                return all_cells([&](auto i, auto j) {
                    const QuadScalar& want = i == j ? t.c : (i < j ? t.a : t.b);
                    return m(i, j) == want.in_field(f);
                });
            },
            [&](const family::BespokeA&) {
                return all_cells([&](auto i, auto j) {
                    if (i * j == 0)
                        return m(i, j).is_one();
                    return m(i, j) == m(i, j - 1) + m(i - 1, j) + (L(i) - L(j));
                });
            },
            [&](const family::BespokeB&) {
                return all_cells([&](auto i, auto j) {
                    if (i == 0)
                        return m(i, j) == integer(f, L(j) + 2);
                    if (j == 0)
                        return m(i, j) == m(i - 1, 0) * 4L + (L(i) * L(i) - 7 * L(i) - 5);
                    return m(i, j) == m(i, j - 1) + m(i - 1, j) - 2 * (L(i) + L(j));
                });
            },
            [&](const family::BespokeC&) {
                return all_cells([&](auto i, auto j) {
                    if (i == 0 && j <= 1)
                        return m(i, j) == integer(f, 2 - L(j));
                    if (i == 0)
                        return m(i, j) == m(i, j - 2) * 2L - m(i, j - 1);
                    if (j == 0) {
                        QuadScalar pow3 = int_pow(integer(f, 3), i - 1);
                        QuadScalar extra = (pow3 - (2 * L(i) + 1)) * 5L / 2L;
                        return m(i, j) == m(i - 1, 0) * 3L + extra;
                    }
                    return m(i, j) == m(i - 1, j - 1) + m(i - 1, j) - 2 * L(i);
                });
            },
            [&](const family::BespokeD&) {
                return all_cells([&](auto i, auto j) {
                    if (i == 0)
                        return m(i, j).is_one();
                    if (j == 0)
                        return m(i, j) == integer(f, L((i + 1) * (i + 1)));
                    if (j == 1)
                        return m(i, j) == integer(f, i == 1 ? 1 : 0);
                    // Truncated upper Pascal triangle, shifted rule.
                    return m(i, j) == m(i - 1, j - 1) + m(i, j - 1);
                });
            },
            [&](const family::UnipotentL&) {
                return all_cells([&](auto i, auto j) {
                    if (j == 0)
                        return m(i, j).is_one();
                    if (i == 0)
                        return m(i, j).is_zero();
                    return m(i, j) == m(i - 1, j - 1) + m(i - 1, j);
                });
            },
            [&](const family::UnipotentU&) {
                return all_cells([&](auto i, auto j) {
                    if (i == 0)
                        return m(i, j).is_one();
                    if (j == 0)
                        return m(i, j).is_zero();
                    return m(i, j) == m(i - 1, j - 1) + m(i, j - 1);
                });
            },
            [&](const family::FactorL& p) {
                const auto gbar = barred_terms(p.r.in_field(f), N);
                return all_cells([&](auto i, auto j) {
                    if (j <= 1) {
                        const std::size_t k = i + j; // G-bar_{i+j-1} lives at index i+j
                        return m(i, j) == sign(L(i + j), gbar[k]);
                    }
                    if (i == 0)
                        return m(i, j).is_zero();
                    return m(i, j) == m(i - 1, j - 1);
                });
            },
            [&](const family::FactorH& p) {
                const QuadScalar a = p.a.in_field(f), b = p.b.in_field(f), r = p.r.in_field(f);
                const auto G = materialize(SequenceSpec::gibonacci({a, b, r, QuadScalar::one(f)}), N).terms;
                return all_cells([&](auto i, auto j) {
                    if (i <= 1 && j == 0)
                        return m(i, j) == sign(L(i), G[i]);
                    if (i <= 1)
                        return m(i, j) == G[j - i];
                    if (i == j + 1)
                        return m(i, j) == r * G[0] - G[1] * 2L;
                    return m(i, j).is_zero();
                });
            },
        },
        spec.family);
}

} // namespace minorlab
