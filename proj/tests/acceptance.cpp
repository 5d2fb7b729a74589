// Acceptance suite: runs every verification suite and reports one line per
// criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <vector>

#include "arrfree/verify.hpp"

using namespace arrfree;

namespace {

struct Criterion {
    std::string label;
    std::vector<std::string> suites;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 characteristic polynomials vs oracle", {"charpoly"}},
        {"2 freeness certificates", {"freeness"}},
        {"3 terao factorization", {"terao"}},
        {"4 ziegler restriction", {"ziegler"}},
        {"5 hyperplane-section criterion", {"yoshinaga"}},
        {"6 hilbert-function identity", {"hilbert"}},
        {"7 euler decomposition", {"euler"}},
        {"8 property suites", {"mobius", "saito", "linalg"}},
    };

    bool all_ok = true;
    for (const auto& crit : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string first_failure;
        for (const auto& suite : crit.suites) {
            for (const auto& r : run_suite(suite)) {
                if (!r.passed) {
                    ok = false;
                    if (first_failure.empty())
                        first_failure = r.name +
                                        (r.detail.empty() ? "" : ": " + r.detail);
                }
            }
        }
        auto secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::cout << "criterion " << crit.label << ": "
                  << (ok ? "PASS" : "FAIL") << "  (" << secs << " s)";
        if (!ok) std::cout << "  [" << first_failure << "]";
        std::cout << std::endl;
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
