#ifndef ARRFREE_VERIFY_HPP
#define ARRFREE_VERIFY_HPP

#include <string>
#include <vector>

#include "arrfree/arrangement.hpp"

namespace arrfree {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Named end-to-end verification suites over the built-in corpus.
//   mobius     lattice sizes and the defining Mobius identity
//   charpoly   closed forms and the subset-expansion oracle
//   freeness   expected certificates, re-expanded Saito determinants
//   terao      exponents against characteristic-polynomial roots
//   ziegler    restriction theorem and restricted bases, all pivots
//   yoshinaga  hyperplane-section criterion against direct certificates
//   hilbert    graded dimension formula under every FREE verdict
//   euler      dim D_d = dim D0_d + dim S_{d-1}, all pivots, d <= 5
//   saito      divisibility of the determinant on random module elements
//   linalg     kernel/rank/determinant cross-checks
std::vector<std::string> suite_names();

std::vector<CheckResult> run_suite(const std::string& name);

// The simple-arrangement test corpus shared by the suites.
std::vector<std::pair<std::string, Arrangement>> corpus();

}  // namespace arrfree

#endif
