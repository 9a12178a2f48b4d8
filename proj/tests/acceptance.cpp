// One line per acceptance criterion. Each criterion runs its property suite at
// the required size and must finish inside its time budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "otype/checks.hpp"

namespace {

struct Criterion {
    int number;
    const char* suite;
    const char* description;
    double limit_seconds;
    std::size_t cases;  // 0: exhaustive suite
    std::size_t cap;    // 0: suite default
};

constexpr Criterion kCriteria[] = {
    {1, "counterexample", "o((w+1).antichain(2)) = w*2+2 > w*2+1, witness with rank cap 20", 1.0,
     0, 20},
    {2, "k0-law", "k = 0 law on 1000 random pairs", 5.0, 1000, 0},
    {3, "proof-trace", "formula equals proof trace on 500 random finite indices", 30.0, 500, 0},
    {4, "brute-force", "finite products |P|*|Q| <= 9 from the 3-element catalog", 30.0, 0, 0},
    {5, "structure", "delta + m structure on 1000 random terms", 10.0, 1000, 0},
    {6, "absorption", "ordinary sum equals natural sum without absorption, 1000 pairs", 5.0,
     1000, 0},
    {7, "expansion", "expanded formula on 1000 inputs and a*n for n <= 10", 5.0, 1000, 0},
    {8, "monotonicity", "formula strictly increasing in o(Q) on 500 pairs", 5.0, 500, 0},
    {9, "witness", "tight witnesses for alpha (x) k, all mutants rejected", 10.0, 0, 0},
};

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : kCriteria) {
        otype::checks::SuiteOptions options;
        if (c.cases != 0) {
            options.cases = c.cases;
        }
        if (c.cap != 0) {
            options.cap = c.cap;
        }
        const auto start = std::chrono::steady_clock::now();
        bool passed = false;
        std::string detail;
        try {
            const auto r = otype::checks::run_suite(c.suite, options);
            passed = r.passed;
            detail = std::to_string(r.cases) + " cases";
            if (!r.passed) {
                detail += ", " + std::to_string(r.failures) + " failures, first: " +
                          r.counterexample;
            }
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds >= c.limit_seconds) {
            passed = false;
            detail += ", over the time limit";
        }
        failed += passed ? 0 : 1;
        std::printf("[%s] %d %-15s %.3fs (limit %.0fs)  %s; %s\n", passed ? "PASS" : "FAIL",
                    c.number, c.suite, seconds, c.limit_seconds, c.description, detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n",
                static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
    return failed == 0 ? 0 : 1;
}
