#ifndef ARRFREE_LOGDER_HPP
#define ARRFREE_LOGDER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/poly.hpp"

namespace arrfree {

// Homogeneous polynomial vector field sum f_i d/dz_i; all nonzero
// coefficients share one degree.
class Derivation {
  public:
    Derivation() : nvars_(0), degree_(0) {}
    Derivation(int nvars, int degree, std::vector<HomogPoly> coeffs);

    static Derivation zero(int nvars, int degree);
    // Reconstruct from the flat coordinate vector over (component, monomial).
    static Derivation from_coeffs(int nvars, int degree, const RatVector& v);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const;
    const std::vector<HomogPoly>& coeffs() const { return coeffs_; }
    const HomogPoly& coeff(int i) const { return coeffs_.at(i); }

    // Flat coordinate vector, component-major: nvars * dim S_degree entries.
    RatVector coeff_vector() const;

    HomogPoly operator()(const HomogPoly& p) const;  // apply as derivation
    Derivation operator+(const Derivation& o) const;
    Derivation operator*(const Rational& c) const;
    // Multiply every coefficient by a homogeneous polynomial.
    Derivation scale(const HomogPoly& p) const;

    bool operator==(const Derivation& o) const;

    std::string str(const std::vector<std::string>& vars = {}) const;

  private:
    int nvars_;
    int degree_;
    std::vector<HomogPoly> coeffs_;
};

HomogPoly apply_derivation(const Derivation& d, const HomogPoly& p);

Derivation euler_derivation(int nvars);

struct GradedBasis {
    int degree = 0;
    std::vector<Derivation> members;

    std::size_t dim() const { return members.size(); }
};

// Exact basis of D(A, m)_d: degree-d fields with alpha_H^{m(H)} dividing
// delta(alpha_H) for every H. Divisibility is imposed as linear membership
// in the subspace alpha^m * S_{d-m} of S_d.
GradedBasis graded_piece(const MultiArrangement& ma, int d);

// Basis of D_0(A)_d: the pivot constraint strengthened to delta(alpha) = 0.
GradedBasis d0_graded_piece(const Arrangement& a, std::size_t pivot, int d);

struct DegreeRow {
    int degree = 0;
    std::size_t dim = 0;        // dim of the graded piece
    std::size_t new_gens = 0;   // minimal generators appearing here
    std::vector<Derivation> generators;
};

struct GeneratorTable {
    std::vector<DegreeRow> rows;  // degrees 0..dmax

    std::size_t generator_count() const;
    std::vector<int> generator_degrees() const;  // sorted ascending
    std::vector<Derivation> all_generators() const;  // ascending degree
};

// Graded Nakayama: per degree, new generators are a complement of
// S_1 * (piece at degree d-1) inside the degree-d piece.
GeneratorTable minimal_generators(const MultiArrangement& ma, int dmax);

// Same construction over any degree -> basis supplier (used for D_0).
GeneratorTable minimal_generators_of(const std::function<GradedBasis(int)>& piece,
                                     int nvars, int dmax);

// M(i, j) = j-th coefficient of the i-th derivation.
std::vector<std::vector<HomogPoly>> saito_matrix(const std::vector<Derivation>& derivs);

HomogPoly poly_matrix_det(const std::vector<std::vector<HomogPoly>>& m);

struct SaitoResult {
    bool basis = false;
    Rational constant;  // det = constant * prod alpha_H^m(H); 0 when not a basis
    HomogPoly determinant;
};

// Saito's criterion: the fields form a basis of D(A, m) iff the determinant
// of their coefficient matrix is a nonzero constant multiple of
// prod alpha_H^m(H). Rechecks membership of every field first.
SaitoResult saito_check(const std::vector<Derivation>& derivs,
                        const MultiArrangement& ma);

// True iff alpha_H^m(H) divides delta(alpha_H) for all H.
bool is_member(const Derivation& d, const MultiArrangement& ma);

enum class NonFreeReason { CharPolyNonSplit, GeneratorCount, SaitoDegenerate };

struct FreenessCertificate {
    bool free = false;
    std::vector<int> exponents;       // sorted ascending when free
    std::vector<Derivation> basis;    // Saito basis when free
    Rational saito_constant;
    HomogPoly saito_determinant;
    NonFreeReason reason = NonFreeReason::GeneratorCount;
    std::string witness;              // human-readable witness for NONFREE
    CharPoly char_poly;               // populated for simple arrangements
    bool char_poly_valid = false;
    GeneratorTable table;
    bool table_valid = false;
};

// Full decision procedure: characteristic-polynomial fast path for simple
// arrangements, generator-count bound up to degree |m|, Saito determinant.
// dmax defaults to |m|, the horizon the completeness argument needs; an
// override only makes sense for exploration, not for certified verdicts.
FreenessCertificate freeness(const MultiArrangement& ma, int dmax_override = -1);
FreenessCertificate freeness(const Arrangement& a);

// Express a field tangent to the pivot hyperplane (delta(alpha) = 0) in the
// chart coordinates produced by ziegler_restriction.
Derivation restrict_derivation(const Derivation& d, const RatMatrix& chart);

}  // namespace arrfree

#endif
