#ifndef ARRFREE_POLY_HPP
#define ARRFREE_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "arrfree/linalg.hpp"
#include "arrfree/rational.hpp"

namespace arrfree {

// Exponent vector: entries sum to the degree of the monomial.
using Exponent = std::vector<int>;

// Monomials of total degree d in nvars variables, in the canonical
// lexicographic order on exponent vectors. This order fixes the
// coordinatization of every graded piece S_d used by the solvers.
std::vector<Exponent> monomials_of_degree(int nvars, int d);

// dim S_d = binom(d + nvars - 1, nvars - 1).
Integer graded_dim(int nvars, int d);

// Sparse homogeneous polynomial over Q. The zero polynomial is the empty
// term map (its declared degree is nominal).
class HomogPoly {
  public:
    HomogPoly() : nvars_(0), degree_(0) {}
    HomogPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

    static HomogPoly zero(int nvars, int degree) { return {nvars, degree}; }
    static HomogPoly constant(int nvars, const Rational& c);
    static HomogPoly variable(int nvars, int i);
    static HomogPoly monomial(int nvars, const Exponent& e, const Rational& c);
    // Linear form sum coeffs[i] * z_i.
    static HomogPoly linear(const std::vector<Integer>& coeffs);
    // Reconstruct from a coefficient vector over monomials_of_degree.
    static HomogPoly from_coeffs(int nvars, int degree, const RatVector& coeffs);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    Rational coeff(const Exponent& e) const;
    // Coefficient vector over monomials_of_degree(nvars, degree).
    RatVector coeff_vector() const;

    void add_term(const Exponent& e, const Rational& c);

    HomogPoly operator-() const;
    HomogPoly operator+(const HomogPoly& o) const;
    HomogPoly operator-(const HomogPoly& o) const;
    HomogPoly operator*(const HomogPoly& o) const;
    HomogPoly operator*(const Rational& c) const;
    bool operator==(const HomogPoly& o) const;

    HomogPoly pow(int k) const;
    HomogPoly derivative(int var) const;

    // Compose with the linear substitution z_i -> sum_j chart(i,j) * u_j.
    // chart is nvars x nvars_new.
    HomogPoly substitute_linear(const RatMatrix& chart) const;

    std::string str(const std::vector<std::string>& vars = {}) const;

  private:
    int nvars_;
    int degree_;
    std::map<Exponent, Rational> terms_;
};

HomogPoly poly_add(const HomogPoly& p, const HomogPoly& q);
HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q);

std::vector<std::string> default_var_names(int nvars);

}  // namespace arrfree

#endif
