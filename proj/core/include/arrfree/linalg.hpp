#ifndef ARRFREE_LINALG_HPP
#define ARRFREE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arrfree/rational.hpp"

namespace arrfree {

using RatVector = std::vector<Rational>;

// Dense matrix of exact rationals. Immutable use is the norm; the mutating
// accessors exist for construction only.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix from_int_rows(const std::vector<std::vector<Integer>>& rows,
                                   std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    RatMatrix transpose() const;
    RatMatrix augment(const RatMatrix& right) const;

    bool operator==(const RatMatrix& o) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct Echelon {
    RatMatrix reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per pivot row, ascending
};

// Gauss-Jordan reduction over Q.
Echelon rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of the right null space, one vector per free column in ascending
// column order, each cleared to integer entries with content 1 and first
// nonzero entry positive.
std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m);

// Exact determinant by Bareiss fraction-free elimination on the
// denominator-cleared integer matrix.
Rational det(const RatMatrix& m);

struct SpanResult {
    bool member = false;
    RatVector coords;  // v = sum coords[i] * basis[i] when member
};

// Decide membership of v in the span of the given vectors and, if a member,
// return one coordinate vector (the rref-canonical solution).
SpanResult in_span(const RatVector& v, const std::vector<RatVector>& basis);

// Canonical integer echelon basis of the row space: rref rows cleared to
// primitive integer vectors. Used as the identity key for subspaces.
std::vector<std::vector<Integer>> row_space_basis(const RatMatrix& m);

// Solve M x = b; empty when inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

}  // namespace arrfree

#endif
