#ifndef ARRFREE_ARRANGEMENT_HPP
#define ARRFREE_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrfree/linalg.hpp"
#include "arrfree/poly.hpp"
#include "arrfree/rational.hpp"

namespace arrfree {

// Canonical defining form of a hyperplane: primitive integer vector with
// positive leading entry.
struct LinearForm {
    std::vector<Integer> coeffs;

    static LinearForm canonical(const std::vector<Integer>& raw);
    HomogPoly poly() const { return HomogPoly::linear(coeffs); }
    bool operator==(const LinearForm& o) const = default;
};

class Arrangement {
  public:
    Arrangement() : dim_(0) {}
    // Validates and canonicalizes; rejects zero or pairwise proportional forms.
    Arrangement(int dim, const std::vector<std::vector<Integer>>& forms,
                std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    std::size_t size() const { return forms_.size(); }
    const std::vector<LinearForm>& forms() const { return forms_; }
    const LinearForm& form(std::size_t i) const { return forms_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    // Q = product of all defining forms.
    HomogPoly defining_poly() const;

  private:
    int dim_;
    std::vector<LinearForm> forms_;
    std::vector<std::string> labels_;
};

using Multiplicity = std::vector<int>;

struct MultiArrangement {
    Arrangement arrangement;
    Multiplicity multiplicity;  // aligned with hyperplane order, entries >= 0

    MultiArrangement() = default;
    MultiArrangement(Arrangement a, Multiplicity m);
    static MultiArrangement simple(Arrangement a);  // m == 1 everywhere

    int total() const;  // |m|
    bool is_simple() const;
    // product of alpha_H^{m(H)}
    HomogPoly defining_poly() const;
};

struct Flat {
    std::vector<std::size_t> indices;  // closed set, ascending
    int dim = 0;                       // dimension of the subspace
    // Canonical echelon basis of the span of the defining forms; the
    // identity key of the flat (the subspace is its kernel).
    std::vector<std::vector<Integer>> form_space;
    long long mobius = 0;

    bool contains_hyperplane(std::size_t h) const;
};

// X <= Y in L_A (reverse inclusion of subspaces) iff the closed index set of
// X is contained in that of Y.
bool flat_leq(const Flat& x, const Flat& y);

struct IntersectionLattice {
    std::vector<Flat> flats;  // sorted by codim ascending, then index set

    const Flat& bottom() const { return flats.front(); }
    std::optional<std::size_t> find(const std::vector<std::size_t>& closed_set) const;
};

struct CharPoly {
    // coeffs[k] = coefficient of t^k; degree = dim of the arrangement.
    std::vector<Integer> coeffs;

    Integer eval(const Integer& t) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    // Nonnegative integer roots with multiplicity, ascending, when the
    // polynomial splits over Z>=0; nullopt otherwise.
    std::optional<std::vector<int>> nonneg_integer_roots() const;
    std::string str() const;
    // Factored display, e.g. "(t-1)(t^2-3t+3)" with integer roots peeled off.
    std::string factored_str() const;
    bool operator==(const CharPoly& o) const = default;
};

Arrangement build_arrangement(int dim, const std::vector<std::vector<Integer>>& forms,
                              std::vector<std::string> labels = {});

IntersectionLattice intersection_lattice(const Arrangement& a);

CharPoly char_poly(const Arrangement& a);

// Independent oracle: subset expansion sum over B of (-1)^|B| t^{dim cap B},
// valid for central arrangements. Exponential in n.
CharPoly char_poly_whitney(const Arrangement& a, std::size_t max_n = 14);

Arrangement localization(const Arrangement& a, const Flat& x);

struct ZieglerRestriction {
    MultiArrangement restricted;          // on dim-1 variables
    RatMatrix chart;                      // dim x (dim-1), columns span H0
    std::vector<std::vector<std::size_t>> groups;  // original indices per
                                                   // restricted hyperplane
};

ZieglerRestriction ziegler_restriction(const Arrangement& a, std::size_t pivot);

enum class Family { Boolean, Braid, Generic };

// boolean(l): coordinate forms; braid(l): x_i - x_j, i < j; generic(l, n):
// seeded pseudorandom forms, resampled until every subset of size <= l is
// independent.
Arrangement generate_family(Family family, int dim, int count = 0,
                            std::uint64_t seed = 0);

}  // namespace arrfree

#endif
