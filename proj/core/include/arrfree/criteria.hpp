#ifndef ARRFREE_CRITERIA_HPP
#define ARRFREE_CRITERIA_HPP

#include <string>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/logder.hpp"

namespace arrfree {

struct Condition {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CriterionReport {
    std::string criterion;
    bool verdict = false;
    // A failed consistency check of an unconditional theorem; signals an
    // implementation bug, not a mathematical outcome.
    bool internal_error = false;
    std::vector<Condition> conditions;
    std::string summary;
};

// Consistency of the freeness certificate with the factorization of the
// characteristic polynomial: FREE forces sorted exponents == sorted roots.
CriterionReport terao_check(const Arrangement& a);

// Restriction theorem: a free arrangement with 1 among its exponents has a
// free Ziegler restriction with the remaining exponents, and the restricted
// D_0 part of an Euler-completed basis is a basis on the restriction.
CriterionReport ziegler_check(const Arrangement& a, std::size_t pivot);

// Flats contained in the pivot hyperplane with dim >= 1; the finite carrier
// of the localization condition along the pivot.
std::vector<Flat> flats_in_pivot(const Arrangement& a, std::size_t pivot);

// Hyperplane-section criterion at one pivot: (a) the Ziegler restriction is
// free, (b) every localization along the pivot is free. Requires ambient
// dimension >= 4; cross-validated against the direct certificate.
CriterionReport yoshinaga_check(const Arrangement& a, std::size_t pivot);

// Existential form: some pivot passes. Reports the per-pivot table.
CriterionReport yoshinaga_any(const Arrangement& a);

}  // namespace arrfree

#endif
