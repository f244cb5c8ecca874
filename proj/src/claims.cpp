#include "minorlab/claims.hpp"

#include "minorlab/identities.hpp"
#include "minorlab/matrix.hpp"
#include "minorlab/minors.hpp"
#include "minorlab/sequence.hpp"
#include "minorlab/solver.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace minorlab {

namespace {

using Expected = std::function<QuadScalar(long n)>;

class Claim {
public:
    Claim(std::string suite, std::string name) { result_.suite = std::move(suite), result_.name = std::move(name); }

    template <class Describe>
    void check(bool ok, Describe&& describe)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
    }

    /// Runs `body`, turning any exception into a failed case.
    template <class Body>
    void guarded(Body&& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return std::string("exception: ") + e.what(); });
        }
    }

    ClaimResult result() const { return result_; }

private:
    ClaimResult result_;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    /// p + q sqrt(d) with p, q in halves of [-3, 3].
    QuadScalar scalar(FieldTag f)
    {
        Rational p(uniform(-6, 6), 2);
        Rational q = f.is_rational() ? Rational(0) : Rational(uniform(-6, 6), 2);
        return QuadScalar(f, p, q);
    }

private:
    std::mt19937_64 engine_;
};

QuadScalar Z(long v, FieldTag f = {})
{
    return QuadScalar(f, v);
}

QuadScalar X(NamedSequence s, long k, FieldTag f = {})
{
    return named_term(s, k, f);
}

constexpr auto Fib = NamedSequence::fibonacci;
constexpr auto Luc = NamedSequence::lucas;
constexpr auto Pel = NamedSequence::pell;
constexpr auto Jac = NamedSequence::jacobsthal;

std::vector<QuadScalar> oracle_minors(const MatrixSpec& spec)
{
    return leading_minors(build(spec), MinorStrategy::per_block).values;
}

/// Compares oracle minors 0..upto of `spec` against expected(n).
ClaimResult minor_claim(const std::string& suite, const std::string& name, MatrixSpec spec, long upto,
                        const Expected& expected)
{
    Claim claim(suite, name);
    claim.guarded([&] {
        spec.order = static_cast<std::size_t>(upto + 1);
        const auto minors = oracle_minors(spec);
        for (long n = 0; n <= upto; ++n) {
            const QuadScalar want = expected(n);
            claim.check(minors[static_cast<std::size_t>(n)] == want, [&] {
                return "n=" + std::to_string(n) + ": minor " + to_string(minors[static_cast<std::size_t>(n)]) +
                       ", expected " + to_string(want);
            });
        }
    });
    return claim.result();
}

std::vector<QuadScalar> scalars(std::initializer_list<long> values, FieldTag f = {})
{
    std::vector<QuadScalar> out;
    for (long v : values)
        out.push_back(Z(v, f));
    return out;
}

bool block_equals(const DenseMatrix& m, const std::vector<std::vector<long>>& rows)
{
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (m(i, j) != Z(rows[i][j], m.field()))
                return false;
    return true;
}

// -- T_{G~,G}: L*H factorization and closed-form minors --------------------

std::vector<ClaimResult> suite_toeplitz_gibonacci()
{
    const std::string suite = "toeplitz-gibonacci";
    Claim closed(suite, "oracle minors of T_{G~,G}(n) equal (2b-ar)^(n-1)(aG_{n-1}+bG_n), a at n=0");
    Claim factor(suite, "T_{G~,G}(n) = L(n) H(n) entrywise");
    Claim hessenberg(suite, "Hessenberg expansion of H(n) gives the same minors");
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long r = 1; r <= 3; ++r) {
                const auto A = Z(a), B = Z(b), R = Z(r);
                auto where = [&](long n) {
                    std::ostringstream os;
                    os << "a=" << a << " b=" << b << " r=" << r << " n=" << n;
                    return os.str();
                };
                closed.guarded([&] {
                    const auto minors = oracle_minors(toeplitz_alternating_gibonacci(A, B, R, 10));
                    const auto hess = det_hessenberg(build_factor_H(A, B, R, 10)).values;
                    for (long n = 0; n <= 10; ++n) {
                        const auto un = static_cast<std::size_t>(n);
                        const auto want = det_toeplitz_gibonacci(A, B, R, un);
                        closed.check(minors[un] == want, [&] {
                            return where(n) + ": oracle " + to_string(minors[un]) + ", closed " + to_string(want);
                        });
                        hessenberg.check(hess[un] == minors[un], [&] {
                            return where(n) + ": hessenberg " + to_string(hess[un]) + ", oracle " + to_string(minors[un]);
                        });
                        factor.check(verify_factorization(A, B, R, un), [&] { return where(n); });
                    }
                });
            }
    return {closed.result(), factor.result(), hessenberg.result()};
}

// -- Shifted Fibonacci / Pell windows ---------------------------------------

std::vector<ClaimResult> shifted_suite(const std::string& suite, NamedSequence seq, const std::string& label)
{
    Claim general(suite, "minors of T_{a~,a}, a_i = " + label + "_{m+i}, equal (" + label + "_{m-1}+" + label +
                             "_{m+1})^(n-1) " + label + "_{2m+n}, m<=5, n<=12");
    Claim rewrite(suite, "n = 0 value " + label + "_m equals (" + label + "_{m-1}+" + label + "_{m+1})^(-1) " + label +
                             "_{2m}");
    Claim m0(suite, "m = 0 gives 2^(n-1) " + label + "_n");
    Claim m1(suite, "m = 1 gives F_{n+2}");

    for (long m = 0; m <= 5; ++m) {
        general.guarded([&] {
            const auto alpha = SequenceSpec::gibonacci(named_params(seq), static_cast<std::size_t>(m));
            MatrixSpec spec{FieldTag{}, 13, family::Toeplitz{SequenceSpec::alternate(alpha), alpha}, {}};
            const auto minors = oracle_minors(spec);
            const QuadScalar base = X(seq, m - 1) + X(seq, m + 1);
            for (long n = 0; n <= 12; ++n) {
                const auto& got = minors[static_cast<std::size_t>(n)];
                const QuadScalar want = n == 0 ? X(seq, m) : int_pow(base, n - 1) * X(seq, 2 * m + n);
                general.check(got == want, [&] {
                    return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": minor " + to_string(got) +
                           ", expected " + to_string(want);
                });
                if (m == 0 && n >= 1) {
                    const QuadScalar special = int_pow(Z(2), n - 1) * X(seq, n);
                    m0.check(got == special, [&] { return "n=" + std::to_string(n) + ": " + to_string(got); });
                }
                if (m == 1 && seq == Fib) {
                    m1.check(got == X(Fib, n + 2), [&] { return "n=" + std::to_string(n) + ": " + to_string(got); });
                }
            }
            rewrite.check(X(seq, 2 * m) / base == X(seq, m), [&] { return "m=" + std::to_string(m); });
        });
    }
    std::vector<ClaimResult> out{general.result(), rewrite.result(), m0.result()};
    if (seq == Fib)
        out.push_back(m1.result());
    return out;
}

// -- Six equimodular Fibonacci matrices -------------------------------------

std::vector<ClaimResult> suite_six_fibonacci()
{
    const std::string suite = "six-fibonacci";
    Claim equi(suite, "six matrices built from a = (F_{i+1}) are equimodular with minors F_{n+2}, n<=10");
    Claim shown(suite, "displayed 4x4 corners of the six matrices");
    Claim transforms(suite, "binomial transforms: chk a = (F_{2i+1}), chk a~ = (F_{i-1}), i<=20");

    const auto alpha = SequenceSpec::gibonacci(GibonacciParams::fibonacci(), 1);
    const auto alt = SequenceSpec::alternate(alpha);
    equi.guarded([&] {
        const auto report = check_equimodular(six_matrix_specs(alt, alpha, 11), 10);
        equi.check(report.verdict, [&] {
            const auto& d = *report.first_divergence;
            return "diverges at n=" + std::to_string(d.index) + " spec " + std::to_string(d.spec_b);
        });
        for (long n = 0; n <= 10; ++n)
            equi.check(report.common_minors[static_cast<std::size_t>(n)] == X(Fib, n + 2),
                       [&] { return "n=" + std::to_string(n); });
    });
    shown.guarded([&] {
        const std::vector<std::vector<std::vector<long>>> displayed = {
            {{1, 1, 2, 3}, {-1, 1, 1, 2}, {2, -1, 1, 1}, {-3, 2, -1, 1}},
            {{1, -1, 2, -3}, {1, 1, -1, 2}, {2, 1, 1, -1}, {3, 2, 1, 1}},
            {{1, 2, 5, 13}, {0, 2, 7, 20}, {1, 3, 10, 30}, {1, 4, 14, 44}},
            {{1, 0, 1, 1}, {2, 2, 3, 4}, {5, 7, 10, 14}, {13, 20, 30, 44}},
            {{1, 1, 2, 3}, {0, 2, 3, 5}, {1, 2, 5, 8}, {1, 3, 7, 13}},
            {{1, -1, 2, -3}, {2, 0, 1, -1}, {5, 2, 1, 0}, {13, 7, 3, 1}},
        };
        const auto specs = six_matrix_specs(alt, alpha, 4);
        for (std::size_t k = 0; k < specs.size(); ++k)
            shown.check(block_equals(build(specs[k]), displayed[k]), [&] { return "matrix " + std::to_string(k); });
    });
    transforms.guarded([&] {
        const auto w = materialize(alpha, 20);
        const auto chk = binomial_transform(w);
        const auto chk_alt = binomial_transform(alternate_transform(w));
        for (long i = 0; i <= 20; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            transforms.check(chk[ui] == X(Fib, 2 * i + 1) && chk_alt[ui] == X(Fib, i - 1),
                             [&] { return "i=" + std::to_string(i); });
        }
    });
    return {equi.result(), shown.result(), transforms.result()};
}

// -- Six-matrix equimodularity for random sequences -------------------------

std::vector<ClaimResult> suite_six_matrix_random()
{
    const std::string suite = "six-matrix-random";
    Claim equi(suite, "T_{a,b}, T_{b,a}, P_{chk a,chk b}, P_{chk b,chk a}, A_{chk a,b}, A_{chk b,a} equimodular, 50 "
                       "random integer pairs, n<=6");
    Claim reject(suite, "sequences with different first terms are rejected");
    Rng rng(0x5eed22);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> a(7), b(7);
        a[0] = b[0] = rng.uniform(-5, 5);
        for (std::size_t i = 1; i < 7; ++i) {
            a[i] = rng.uniform(-5, 5);
            b[i] = rng.uniform(-5, 5);
        }
        auto as_spec = [](const std::vector<long>& v) {
            std::vector<QuadScalar> t;
            for (long x : v)
                t.push_back(Z(x));
            return SequenceSpec::explicit_terms(std::move(t));
        };
        equi.guarded([&] {
            const auto report = six_matrix_family(as_spec(a), as_spec(b), 6);
            equi.check(report.verdict, [&] {
                const auto& d = *report.first_divergence;
                return "trial " + std::to_string(trial) + " diverges at n=" + std::to_string(d.index);
            });
        });
    }
    bool threw = false;
    try {
        six_matrix_family(SequenceSpec::explicit_terms(scalars({1, 2, 3})), SequenceSpec::explicit_terms(scalars({2, 2, 3})),
                       2);
    } catch (const MathError&) {
        threw = true;
    }
    reject.check(threw, [] { return "no error for alpha_0 != beta_0"; });
    return {equi.result(), reject.result()};
}

// -- T_n(a,b,c): recurrence, closed form, oracle -----------------------------

std::vector<ClaimResult> suite_toeplitz_abc()
{
    const std::string suite = "toeplitz-abc";
    Claim agree(suite, "recurrence, closed form and oracle agree for 200 random (a,b,c) over d in {0,5,-1,2}, n<=10");
    Claim coverage(suite, "samples cover a=b=c (minor 0 for n>=2), a=b!=c and a!=b");
    Claim gst(suite, "T_n(phi,Phi,1) = F_{n+1} and T_n(-phi,-Phi,0) = F_{n-1}, n<=10");
    Rng rng(0xabc23);
    std::size_t seen[3] = {0, 0, 0};
    const std::int64_t radicands[] = {0, 5, -1, 2};
    for (int trial = 0; trial < 200; ++trial) {
        const FieldTag f(radicands[trial % 4]);
        QuadScalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
        switch ((trial / 4) % 4) {
        case 0:
            b = a;
            c = a;
            break;
        case 1:
            b = a;
            if (c == a)
                c += Rational(1);
            break;
        default:
            if (b == a)
                b += Rational(1);
            break;
        }
        seen[a == b && b == c ? 0 : (a == b ? 1 : 2)]++;
        agree.guarded([&] {
            const auto minors = oracle_minors(MatrixSpec{f, 10, family::ToeplitzAbc{a, b, c}, {}});
            for (long n = 1; n <= 10; ++n) {
                const auto rec = det_toeplitz_abc(a, b, c, n, ToeplitzMethod::recurrence);
                const auto cls = det_toeplitz_abc(a, b, c, n, ToeplitzMethod::closed);
                const auto& orc = minors[static_cast<std::size_t>(n - 1)];
                agree.check(rec == orc && cls == orc, [&] {
                    return "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c) + " d=" +
                           std::to_string(f.d()) + " n=" + std::to_string(n) + ": rec " + to_string(rec) + ", closed " +
                           to_string(cls) + ", oracle " + to_string(orc);
                });
                if (a == b && b == c && n >= 2)
                    coverage.check(orc.is_zero(), [&] { return "a=b=c=" + to_string(a); });
            }
        });
    }
    coverage.check(seen[0] > 0 && seen[1] > 0 && seen[2] > 0, [] { return "a case class was never sampled"; });

    gst.guarded([&] {
        const FieldTag f5(5);
        const QuadScalar phi(f5, Rational(1, 2), Rational(1, 2)), Phi(f5, Rational(1, 2), Rational(-1, 2));
        for (long n = 1; n <= 10; ++n) {
            gst.check(det_toeplitz_abc(phi, Phi, Z(1, f5), n, ToeplitzMethod::closed) == X(Fib, n + 1, f5) &&
                          det_toeplitz_abc(-phi, -Phi, Z(0, f5), n, ToeplitzMethod::closed) == X(Fib, n - 1, f5),
                      [&] { return "n=" + std::to_string(n); });
        }
    });
    return {agree.result(), coverage.result(), gst.result()};
}

// -- Recurrence families (Fibonacci, Pell, Jacobsthal targets) ----------------

struct Specialization {
    long c;
    std::function<QuadScalar(long)> value;
    std::string label;
};

ClaimResult recurrence_family_claim(const std::string& suite, const std::string& name, long r, long s,
                                    const std::vector<std::pair<QuadScalar, QuadScalar>>& quoted_offsets,
                                    const std::function<QuadScalar(const QuadScalar&)>& det2,
                                    const std::vector<Specialization>& specials, const std::vector<Rational>& cs)
{
    Claim claim(suite, name);
    claim.guarded([&] {
        std::vector<Rational> all_c = cs;
        for (const auto& sp : specials)
            all_c.emplace_back(sp.c);
        for (const auto& cval : all_c) {
            const RecurrenceTarget target{Z(r), Z(s), QuadScalar(FieldTag{}, cval)};
            const SolvedFamily fam = solve_family(target);
            const FieldTag f = fam.extension_needed.value_or(FieldTag{});
            const QuadScalar c(f, cval);
            const std::string where = "c=" + to_string(cval);

            // Quoted pairs: (c + off_a, c + off_b) in either order.
            std::vector<std::pair<QuadScalar, QuadScalar>> quoted;
            for (const auto& [oa, ob] : quoted_offsets)
                quoted.emplace_back(c + oa, c + ob);
            bool same = fam.solutions.size() == quoted.size();
            for (const auto& sol : fam.solutions)
                same = same && std::find(quoted.begin(), quoted.end(), sol) != quoted.end();
            claim.check(same, [&] { return where + ": solver pairs differ from the quoted family"; });

            std::vector<std::vector<QuadScalar>> per_solution;
            for (const auto& [a, b] : fam.solutions) {
                auto minors = oracle_minors(MatrixSpec{f, 15, family::ToeplitzAbc{a, b, c}, {}});
                for (long n = 1; n <= 15; ++n) {
                    const auto& got = minors[static_cast<std::size_t>(n - 1)];
                    const QuadScalar want = predicted_minor(RecurrenceTarget{Z(r, f), Z(s, f), c}, n);
                    claim.check(got == want, [&] {
                        return where + " a=" + to_string(a) + " n=" + std::to_string(n) + ": oracle " + to_string(got) +
                               ", predicted " + to_string(want);
                    });
                    if (n >= 3) {
                        const auto& m1 = minors[static_cast<std::size_t>(n - 2)];
                        const auto& m2 = minors[static_cast<std::size_t>(n - 3)];
                        claim.check(got == m1 * r + m2 * s, [&] { return where + " recurrence fails at n=" + std::to_string(n); });
                    }
                }
                claim.check(minors[0] == c && minors[1] == det2(c), [&] { return where + ": seeds"; });
                per_solution.push_back(std::move(minors));
            }
            if (per_solution.size() == 2)
                claim.check(per_solution[0] == per_solution[1], [&] { return where + ": swapped solutions differ"; });

            for (const auto& sp : specials) {
                if (Rational(sp.c) != cval)
                    continue;
                for (long n = 1; n <= 15; ++n) {
                    const QuadScalar want = sp.value(n).in_field(f);
                    const auto& got = per_solution.front()[static_cast<std::size_t>(n - 1)];
                    claim.check(got == want, [&] {
                        return where + " (" + sp.label + ") n=" + std::to_string(n) + ": " + to_string(got) +
                               ", expected " + to_string(want);
                    });
                }
            }
        }
    });
    return claim.result();
}

std::vector<ClaimResult> suite_recurrence_families()
{
    const std::string suite = "recurrence-families";
    const FieldTag f5(5), f2(2);
    const std::vector<Rational> extra_c = {Rational(-3), Rational(1, 3), Rational(7, 2)};

    const QuadScalar phi(f5, Rational(1, 2), Rational(1, 2)), Phi(f5, Rational(1, 2), Rational(-1, 2));
    auto fib = recurrence_family_claim(
        suite, "Fibonacci target (1,1): (c-phi, c-Phi, c), det T_2 = c+1, minors cF_n + F_{n-1}, n<=15", 1, 1,
        {{-phi, -Phi}, {-Phi, -phi}}, [](const QuadScalar& c) { return c + 1L; },
        {
            {3, [](long n) { return X(Luc, n + 1); }, "L_{n+1}"},
            {-2, [](long n) { return -X(Luc, n - 1); }, "-L_{n-1}"},
            {0, [](long n) { return X(Fib, n - 1); }, "F_{n-1}"},
            {1, [](long n) { return X(Fib, n + 1); }, "F_{n+1}"},
            {-1, [](long n) { return -X(Fib, n - 2); }, "-F_{n-2}"},
            {2, [](long n) { return X(Fib, n + 2); }, "F_{n+2}"},
        },
        extra_c);

    const QuadScalar root2 = QuadScalar::radical(f2);
    auto pell = recurrence_family_claim(
        suite, "Pell target (2,1): (c-1+sqrt2, c-1-sqrt2, c), det T_2 = 2c+1, minors cP_n + P_{n-1}, n<=15", 2, 1,
        {{root2 - 1L, -root2 - 1L}, {-root2 - 1L, root2 - 1L}}, [](const QuadScalar& c) { return c * 2L + 1L; },
        {
            {0, [](long n) { return X(Pel, n - 1); }, "P_{n-1}"},
            {2, [](long n) { return X(Pel, n + 1); }, "P_{n+1}"},
        },
        extra_c);

    auto jac = recurrence_family_claim(
        suite, "Jacobsthal target (1,2): (c+1, c-2, c), det T_2 = c+2, minors cJ_n + 2J_{n-1}, n<=15", 1, 2,
        {{Z(1), Z(-2)}, {Z(-2), Z(1)}}, [](const QuadScalar& c) { return c + 2L; },
        {
            {1, [](long n) { return X(Jac, n + 1); }, "J_{n+1}"},
            {3, [](long n) { return X(Jac, n + 2); }, "J_{n+2}"},
        },
        extra_c);
    return {fib, pell, jac};
}

// -- Pascal matrices with Jacobsthal minors ----------------------------------

std::vector<ClaimResult> suite_pascal_jacobsthal()
{
    const std::string suite = "pascal-jacobsthal";
    auto geo = [](long u, long t, long v) { return SequenceSpec::geometric_affine(Z(u), Z(t), Z(v)); };
    return {
        // 2^(i+1) - 1 and 2(1 - 2^(i-1)) = 2 - 2^i
        minor_claim(suite, "P_{a,b} with a_i = 2^(i+1)-1, b_i = 2(1-2^(i-1)) has minors J_{n+2}, n<=10",
                    MatrixSpec{FieldTag{}, 11, family::Pascal{geo(2, 2, -1), geo(-1, 2, 2)}, {}}, 10,
                    [](long n) { return X(Jac, n + 2); }),
        // 2^(i+2) - 1 and 2(2^(i-1) + 1) = 2^i + 2
        minor_claim(suite, "P_{a,b} with a_i = 2^(i+2)-1, b_i = 2(2^(i-1)+1) has minors J_{n+3}, n<=10",
                    MatrixSpec{FieldTag{}, 11, family::Pascal{geo(4, 2, -1), geo(1, 2, 2)}, {}}, 10,
                    [](long n) { return X(Jac, n + 3); }),
    };
}

// -- Tables of known Toeplitz, modified Toeplitz, Pascal and 7-matrices -------

SequenceSpec htc(std::vector<QuadScalar> head, QuadScalar tail)
{
    return SequenceSpec::head_then_constant(std::move(head), std::move(tail));
}

std::vector<ClaimResult> suite_table1()
{
    const std::string suite = "table1";
    const FieldTag q{}, gi(-1), f5(5);
    const QuadScalar i = QuadScalar::radical(gi);
    const QuadScalar phi(f5, Rational(1, 2), Rational(1, 2)), Phi(f5, Rational(1, 2), Rational(-1, 2));
    const auto alt = SequenceSpec::periodic(scalars({2}), scalars({-1, 1}));

    struct Row {
        std::string name;
        FieldTag field;
        SequenceSpec alpha;
        SequenceSpec beta;
        Expected expected;
    };
    const std::vector<Row> rows = {
        {"(2,1,1,..) / (2,-1,0,..) -> F_{2n+3}", q, htc(scalars({2}), Z(1)), htc(scalars({2, -1}), Z(0)),
         [](long n) { return X(Fib, 2 * n + 3); }},
        {"(2,1,1,..) / (2,1,0,..) -> F_{n+3}", q, htc(scalars({2}), Z(1)), htc(scalars({2, 1}), Z(0)),
         [](long n) { return X(Fib, n + 3); }},
        {"(1,i,0,..) / (1,i,0,..) -> F_{n+2}", gi, htc({Z(1, gi), i}, Z(0, gi)), htc({Z(1, gi), i}, Z(0, gi)),
         [gi](long n) { return X(Fib, n + 2, gi); }},
        {"(1,-1,0,..) / (1,1,0,..) -> F_{n+2}", q, htc(scalars({1, -1}), Z(0)), htc(scalars({1, 1}), Z(0)),
         [](long n) { return X(Fib, n + 2); }},
        {"(3,1,0,..) / (3,1,0,..) -> F_{2n+4}", q, htc(scalars({3, 1}), Z(0)), htc(scalars({3, 1}), Z(0)),
         [](long n) { return X(Fib, 2 * n + 4); }},
        {"(3,-1,0,..) / (3,-1,0,..) -> F_{2n+4}", q, htc(scalars({3, -1}), Z(0)), htc(scalars({3, -1}), Z(0)),
         [](long n) { return X(Fib, 2 * n + 4); }},
        {"(2,-1,1,-1,..) / (2,1,0,..) -> F_{2n+3}", q, alt, htc(scalars({2, 1}), Z(0)),
         [](long n) { return X(Fib, 2 * n + 3); }},
        {"(2,-1,1,-1,..) / (2,-1,0,..) -> F_{n+3}", q, alt, htc(scalars({2, -1}), Z(0)),
         [](long n) { return X(Fib, n + 3); }},
        {"(1,Phi,Phi,..) / (1,phi,phi,..) -> F_{n+2}", f5, htc({Z(1, f5)}, Phi), htc({Z(1, f5)}, phi),
         [f5](long n) { return X(Fib, n + 2, f5); }},
        {"(0,-Phi,-Phi,..) / (0,-phi,-phi,..) -> F_n", f5, htc({Z(0, f5)}, -Phi), htc({Z(0, f5)}, -phi),
         [f5](long n) { return X(Fib, n, f5); }},
    };
    std::vector<ClaimResult> out;
    for (const auto& row : rows)
        out.push_back(minor_claim(suite, "T_{a,b}, " + row.name,
                                  MatrixSpec{row.field, 11, family::Toeplitz{row.alpha, row.beta}, {}}, 10,
                                  row.expected));
    return out;
}

std::vector<ClaimResult> suite_table2()
{
    const std::string suite = "table2";
    const FieldTag gi(-1);
    const QuadScalar i = QuadScalar::radical(gi);
    const auto tri = htc({Z(1, gi), i}, Z(0, gi));

    std::vector<Modifier> diag;
    for (std::size_t k = 1; k <= 10; ++k)
        diag.push_back({k, k, Z(1)});

    return {
        minor_claim(suite, "T_{(1,i,0,..),(1,i,0,..)} + E_11 -> L_{n+1}",
                    MatrixSpec{gi, 11, family::Toeplitz{tri, tri}, {{1, 1, Z(1, gi)}}}, 10,
                    [gi](long n) { return X(Luc, n + 1, gi); }),
        minor_claim(suite, "T_{(1,1,1,..),(1,-1,0,..)} + sum_{i>=1} E_ii -> F_{2n+2}",
                    MatrixSpec{FieldTag{}, 11, family::Toeplitz{htc(scalars({1}), Z(1)), htc(scalars({1, -1}), Z(0))}, diag},
                    10, [](long n) { return X(Fib, 2 * n + 2); }),
        minor_claim(suite, "T_{(1,i,0,..),(1,i,0,..)} + 2E_00 -> L_{n+2}",
                    MatrixSpec{gi, 11, family::Toeplitz{tri, tri}, {{0, 0, Z(2, gi)}}}, 10,
                    [gi](long n) { return X(Luc, n + 2, gi); }),
    };
}

std::vector<ClaimResult> suite_table3()
{
    const std::string suite = "table3";
    const FieldTag q{}, gi(-1);
    const QuadScalar i = QuadScalar::radical(gi);
    std::vector<ClaimResult> out;

    for (const Rational& c : {Rational(1), Rational(2), Rational(1, 3)}) {
        const auto alpha = SequenceSpec::arithmetic(Z(1), QuadScalar(q, c));
        const auto beta = SequenceSpec::arithmetic(Z(1), QuadScalar(q, -1 / c));
        out.push_back(minor_claim(suite, "P_{a,b}, a_i = a_{i-1}+c, b_i = b_{i-1}-1/c, c=" + to_string(c) + " -> F_{n+2}",
                                  MatrixSpec{q, 11, family::Pascal{alpha, beta}, {}}, 10,
                                  [](long n) { return X(Fib, n + 2); }));
    }

    // beta_1 = x, beta_i = beta_{i+2}: beta = (1, x, 1, x, ...)
    struct Row {
        std::string name;
        FieldTag field;
        QuadScalar step;
        QuadScalar beta1;
        NamedSequence target;
    };
    const std::vector<Row> rows = {
        {"a_i = a_{i-1}+1, b = (1,0,1,0,..) -> F_{n+1}", q, Z(1), Z(0), Fib},
        {"a_i = a_{i-1}-1, b = (1,0,1,0,..) -> F_{n+1}", q, Z(-1), Z(0), Fib},
        {"a_i = a_{i-1}+i, b = (1,2i,1,2i,..) -> L_{n+1}", gi, i, i * 2L, Luc},
        {"a_i = a_{i-1}-i, b = (1,-2i,1,-2i,..) -> L_{n+1}", gi, -i, i * -2L, Luc},
    };
    for (const auto& row : rows) {
        const auto alpha = SequenceSpec::arithmetic(Z(1, row.field), row.step);
        const auto beta = SequenceSpec::periodic({Z(1, row.field)}, {row.beta1, Z(1, row.field)});
        const FieldTag f = row.field;
        const NamedSequence target = row.target;
        out.push_back(minor_claim(suite, "A_{a,b}, " + row.name, MatrixSpec{f, 11, family::Seven{alpha, beta}, {}}, 10,
                                  [f, target](long n) { return X(target, n + 1, f); }));
    }
    return out;
}

// -- Bespoke families A, B, C, D ---------------------------------------------

std::vector<ClaimResult> suite_bespoke()
{
    const std::string suite = "bespoke";
    auto spec = [](Family fam) { return MatrixSpec{FieldTag{}, 13, std::move(fam), {}}; };
    std::vector<ClaimResult> out{
        minor_claim(suite, "det A(n) = F_{n+1}, n<=12", spec(family::BespokeA{}), 12, [](long n) { return X(Fib, n + 1); }),
        minor_claim(suite, "det B(n) = L_n, n<=12", spec(family::BespokeB{}), 12, [](long n) { return X(Luc, n); }),
        minor_claim(suite, "det C(n) = L_n, n<=12", spec(family::BespokeC{}), 12, [](long n) { return X(Luc, n); }),
        minor_claim(suite, "det D(n) = (-1)^n C(n+2,2), n<=12", spec(family::BespokeD{}), 12, [](long n) {
            const Rational t(binomial_coefficient(static_cast<unsigned long>(n + 2), 2));
            return QuadScalar(FieldTag{}, n % 2 == 0 ? t : Rational(-t));
        }),
    };

    Claim shown(suite, "displayed 4x4 blocks of A, B, C, D");
    shown.guarded([&] {
        auto four = [](Family fam) { return build(MatrixSpec{FieldTag{}, 4, std::move(fam), {}}); };
        shown.check(block_equals(four(family::BespokeA{}), {{1, 1, 1, 1}, {1, 2, 2, 1}, {1, 4, 6, 6}, {1, 7, 14, 20}}),
                    [] { return "A(3)"; });
        shown.check(block_equals(four(family::BespokeB{}),
                                 {{2, 3, 4, 5}, {-3, -4, -6, -9}, {-27, -37, -51, -70}, {-125, -170, -231, -313}}),
                    [] { return "B(3)"; });
        shown.check(block_equals(four(family::BespokeC{}), {{2, 1, 3, -1}, {1, 1, 2, 0}, {-2, -2, -1, -2}, {-1, -10, -9, -9}}),
                    [] { return "C(3)"; });
        shown.check(block_equals(four(family::BespokeD{}), {{1, 1, 1, 1}, {4, 1, 2, 3}, {9, 0, 1, 3}, {16, 0, 0, 1}}),
                    [] { return "D corner"; });
    });
    out.push_back(shown.result());
    return out;
}

// -- Gibonacci identities and transform identities -------------------------------

std::vector<ClaimResult> suite_gibonacci_identities()
{
    const std::string suite = "gibonacci-identities";
    Claim transformed(suite, "binomial transforms of G and G~ satisfy (r+2,-r) and (2-r,r) recurrences, 30 terms");
    Claim split(suite, "G_n = a Gbar_{n-1} + b Gbar_n, 1<=n<=30");
    Claim addition(suite, "Gbar_{n+m} = Gbar_n Gbar_{m-1} + Gbar_{n+1} Gbar_m and Gbar_{m+1}Gbar_{m-1} - Gbar_m^2 = "
                          "(-1)^m, m,n<=20");
    Claim constant_tail(suite, "chk(c,a,a,..)_i = c + a(2^i-1); hat(c,a,a,..) = (c, a-c, c-a, ..), i<=20");

    Rng rng(0x91b0);
    for (long r = 1; r <= 3; ++r) {
        for (int sample = 0; sample < 8; ++sample) {
            const long a = rng.uniform(-5, 5), b = rng.uniform(-5, 5);
            const std::string where = "r=" + std::to_string(r) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
            transformed.guarded([&] {
                const GibonacciParams p{Z(a), Z(b), Z(r), Z(1)};
                const auto w = materialize(SequenceSpec::gibonacci(p), 29);
                const auto chk = binomial_transform(w);
                const auto chk_alt = binomial_transform(alternate_transform(w));
                const auto [c1, c2] = transformed_recurrence_coeffs(Z(r), TransformVariant::binomial);
                const auto [e1, e2] = transformed_recurrence_coeffs(Z(r), TransformVariant::binomial_of_alternate);
                transformed.check(chk[0] == Z(a) && chk[1] == Z(a + b) && chk_alt[0] == Z(a) && chk_alt[1] == Z(a - b),
                                  [&] { return where + ": seeds"; });
                for (std::size_t i = 2; i < 30; ++i) {
                    transformed.check(chk[i] == c1 * chk[i - 1] + c2 * chk[i - 2],
                                      [&] { return where + " chk i=" + std::to_string(i); });
                    transformed.check(chk_alt[i] == e1 * chk_alt[i - 1] + e2 * chk_alt[i - 2],
                                      [&] { return where + " chk~ i=" + std::to_string(i); });
                }
                const auto bar = GibonacciParams::barred(Z(r));
                for (long n = 1; n <= 30; ++n)
                    split.check(gibonacci_term(p, n) == Z(a) * gibonacci_term(bar, n - 1) + Z(b) * gibonacci_term(bar, n),
                                [&] { return where + " n=" + std::to_string(n); });
            });
        }
        addition.guarded([&] {
            for (std::size_t m = 0; m <= 20; ++m)
                for (std::size_t n = 0; n <= 20; ++n)
                    addition.check(verify_gibonacci_identities(Z(r), m, n), [&] {
                        return "r=" + std::to_string(r) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                    });
        });
    }
    for (int sample = 0; sample < 10; ++sample) {
        const long c = rng.uniform(-9, 9), a = rng.uniform(-9, 9);
        constant_tail.guarded([&] {
            const auto w = materialize(htc(scalars({c}), Z(a)), 20);
            const auto chk = binomial_transform(w);
            const auto hat = inverse_binomial_transform(w);
            for (long i = 0; i <= 20; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                const QuadScalar want_chk = Z(c) + Z(a) * (int_pow(Z(2), ui) - 1L);
                const QuadScalar want_hat = i == 0 ? Z(c) : (i % 2 == 1 ? Z(a - c) : Z(c - a));
                constant_tail.check(chk[ui] == want_chk && hat[ui] == want_hat, [&] {
                    return "c=" + std::to_string(c) + " a=" + std::to_string(a) + " i=" + std::to_string(i);
                });
            }
        });
    }
    return {transformed.result(), split.result(), addition.result(), constant_tail.result()};
}

// -- Property suites -----------------------------------------------------------

std::vector<ClaimResult> suite_properties()
{
    const std::string suite = "properties";
    Claim inversion(suite, "inverse binomial undoes binomial and vice versa on random windows, length<=12");
    Claim engines(suite, "Hessenberg engine and single-pass elimination agree with per-block oracle");
    Claim zero_lead(suite, "zero leading minors handled: T_{F~,F} and T_{P~,P} start with d_0 = 0");
    Claim swap(suite, "swapped solver pairs give identical minor sequences");
    Rng rng(0x9e01);
    const std::int64_t radicands[] = {0, -1, 2, 5};

    for (int trial = 0; trial < 100; ++trial) {
        const FieldTag f(radicands[trial % 4]);
        const auto len = static_cast<std::size_t>(rng.uniform(1, 12));
        std::vector<QuadScalar> terms;
        for (std::size_t i = 0; i < len; ++i)
            terms.push_back(rng.scalar(f));
        const auto w = materialize(SequenceSpec::explicit_terms(terms), len - 1);
        inversion.check(inverse_binomial_transform(binomial_transform(w)).terms == terms &&
                            binomial_transform(inverse_binomial_transform(w)).terms == terms,
                        [&] { return "trial " + std::to_string(trial); });
    }

    for (int trial = 0; trial < 100; ++trial) {
        engines.guarded([&] {
            const FieldTag f(radicands[trial % 4]);
            const auto order = static_cast<std::size_t>(rng.uniform(1, 8));
            DenseMatrix h(f, order);
            for (std::size_t i = 0; i < order; ++i)
                for (std::size_t j = 0; j < order; ++j)
                    if (i <= j + 1 && rng.uniform(0, 4) != 0)
                        h.set(i, j, trial % 2 == 0 ? Z(rng.uniform(-4, 4), f) : rng.scalar(f));
            const auto oracle = leading_minors(h, MinorStrategy::per_block).values;
            engines.check(det_hessenberg(h).values == oracle && leading_minors(h, MinorStrategy::single_pass).values == oracle,
                          [&] { return "trial " + std::to_string(trial); });
        });
    }

    zero_lead.guarded([&] {
        for (auto seq : {Fib, Pel}) {
            const auto G = SequenceSpec::gibonacci(named_params(seq));
            const auto m = build(MatrixSpec{FieldTag{}, 11, family::Toeplitz{SequenceSpec::alternate(G), G}, {}});
            const auto fast = leading_minors(m, MinorStrategy::single_pass).values;
            const auto slow = leading_minors(m, MinorStrategy::per_block).values;
            zero_lead.check(fast.front().is_zero() && fast == slow, [] { return "single pass diverged"; });
            for (long n = 1; n <= 10; ++n)
                zero_lead.check(slow[static_cast<std::size_t>(n)] == int_pow(Z(2), n - 1) * X(seq, n),
                                [&] { return std::string(sequence_symbol(seq)) + " n=" + std::to_string(n); });
        }
    });

    for (int trial = 0; trial < 30; ++trial) {
        swap.guarded([&] {
            const long r = rng.uniform(-3, 3), s = rng.uniform(-3, 3);
            const QuadScalar c0 = QuadScalar(FieldTag{}, Rational(rng.uniform(-6, 6), 2));
            const auto fam = solve_family({Z(r), Z(s), c0});
            const FieldTag f = fam.extension_needed.value_or(FieldTag{});
            const QuadScalar c = c0.in_field(f);
            std::vector<std::vector<QuadScalar>> seqs;
            for (const auto& [a, b] : fam.solutions) {
                seqs.push_back(oracle_minors(MatrixSpec{f, 10, family::ToeplitzAbc{a, b, c}, {}}));
                swap.check(c * 2L - a - b == Z(r, f) && (c - a) * (c - b) == Z(-s, f),
                           [&] { return "system fails for r=" + std::to_string(r) + " s=" + std::to_string(s); });
            }
            if (seqs.size() == 2)
                swap.check(seqs[0] == seqs[1], [&] { return "r=" + std::to_string(r) + " s=" + std::to_string(s); });
            else
                swap.check(fam.repeated_root, [&] { return "single solution without repeated root flag"; });
        });
    }
    return {inversion.result(), engines.result(), zero_lead.result(), swap.result()};
}

using SuiteFn = std::vector<ClaimResult> (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"toeplitz-gibonacci", suite_toeplitz_gibonacci},
        {"fibonacci-shift", [] { return shifted_suite("fibonacci-shift", Fib, "F"); }},
        {"pell-shift", [] { return shifted_suite("pell-shift", Pel, "P"); }},
        {"six-fibonacci", suite_six_fibonacci},
        {"six-matrix-random", suite_six_matrix_random},
        {"toeplitz-abc", suite_toeplitz_abc},
        {"recurrence-families", suite_recurrence_families},
        {"pascal-jacobsthal", suite_pascal_jacobsthal},
        {"table1", suite_table1},
        {"table2", suite_table2},
        {"table3", suite_table3},
        {"bespoke", suite_bespoke},
        {"gibonacci-identities", suite_gibonacci_identities},
        {"properties", suite_properties},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<ClaimResult> run_suite(std::string_view suite)
{
    for (const auto& [name, fn] : registry())
        if (name == suite)
            return fn();
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::vector<ClaimResult> run_all_suites()
{
    std::vector<ClaimResult> out;
    for (const auto& [name, fn] : registry()) {
        auto part = fn();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace minorlab
