// One line per acceptance criterion; exit status 1 if any is red.

#include "minorlab/claims.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

namespace {

struct Criterion {
    const char* label;
    std::vector<const char*> suites;
};

const Criterion criteria[] = {
    {"T_{G~,G} minors match the closed form and T = L H, (a,b,r) in [-3,3]^2 x [1,3], n<=10", {"toeplitz-gibonacci"}},
    {"shifted Fibonacci windows, m<=5, n<=12", {"fibonacci-shift"}},
    {"shifted Pell windows, m<=5, n<=12", {"pell-shift"}},
    {"six Fibonacci matrices are equimodular with minors F_{n+2}", {"six-fibonacci"}},
    {"six-matrix equimodularity on 50 random integer pairs", {"six-matrix-random"}},
    {"T_n(a,b,c): recurrence = closed form = oracle on 200 random triples", {"toeplitz-abc"}},
    {"Fibonacci, Pell and Jacobsthal Toeplitz families from the solver", {"recurrence-families"}},
    {"Pascal matrices with Jacobsthal minors", {"pascal-jacobsthal"}},
    {"tabulated Toeplitz, modified Toeplitz, Pascal and 7-matrix rows", {"table1", "table2", "table3"}},
    {"bespoke families A, B, C, D", {"bespoke"}},
    {"Gibonacci transform, split, addition and Cassini identities", {"gibonacci-identities"}},
    {"transform inversion, engine agreement, zero minors, solver symmetry", {"properties"}},
};

} // namespace

int main()
{
    int red = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        std::vector<minorlab::ClaimResult> failures;
        std::size_t claims = 0, cases = 0;
        try {
            for (const char* suite : c.suites)
                for (auto& r : minorlab::run_suite(suite)) {
                    ++claims;
                    cases += r.cases;
                    if (!r.passed)
                        failures.push_back(std::move(r));
                }
        } catch (const std::exception& e) {
            failures.push_back({"", std::string("suite aborted: ") + e.what(), false, 0, ""});
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = failures.empty() && claims > 0;
        red += ok ? 0 : 1;
        std::printf("%s criterion %2d: %s [%zu claims, %zu cases, %.2fs]\n", ok ? "PASS" : "FAIL", index, c.label,
                    claims, cases, secs);
        for (const auto& f : failures)
            std::printf("       %s: %s -- %s\n", f.suite.c_str(), f.name.c_str(), f.counterexample.c_str());
    }
    std::printf("%d/%d criteria green\n", index - red, index);
    return red == 0 ? 0 : 1;
}
