#include "arrfree/linalg.hpp"

#include <algorithm>

namespace arrfree {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) return RatMatrix(0, 0);
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<Integer>>& rows,
                                   std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("from_int_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(rows[r][c]);
    }
    return m;
}

RatVector RatMatrix::row(std::size_t r) const {
    RatVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::augment(const RatMatrix& right) const {
    if (rows_ != right.rows())
        throw std::invalid_argument("augment: row count mismatch");
    RatMatrix m(rows_, cols_ + right.cols());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c)
            m.at(r, cols_ + c) = right.at(r, c);
    }
    return m;
}

Echelon rref(const RatMatrix& m) {
    Echelon e{m, {}};
    RatMatrix& a = e.reduced;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < a.cols() && pr < a.rows(); ++pc) {
        std::size_t sel = pr;
        while (sel < a.rows() && a.at(sel, pc) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pr)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(sel, c), a.at(pr, c));
        Rational inv = 1 / a.at(pr, pc);
        for (std::size_t c = pc; c < a.cols(); ++c) a.at(pr, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pr || a.at(r, pc) == 0) continue;
            Rational f = a.at(r, pc);
            for (std::size_t c = pc; c < a.cols(); ++c)
                a.at(r, c) -= f * a.at(pr, c);
        }
        e.pivots.push_back(pc);
        ++pr;
    }
    return e;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVector v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
            v[e.pivots[pr]] = -e.reduced.at(pr, free_col);
        basis.push_back(normalize_integral(v));
    }
    return basis;
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Clear denominators row by row, then run Bareiss on the integer matrix.
    Rational scale = 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < n; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    m.at(r, c).get_den().get_mpz_t());
        scale /= Rational(lcm);
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& q = m.at(r, c);
            a[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }

    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(a[k], a[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return scale * Rational(sign * a[n - 1][n - 1]);
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    RatMatrix rhs(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) rhs.at(r, 0) = b[r];
    Echelon e = rref(m.augment(rhs));
    // Inconsistent iff a pivot lands in the last column.
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols(), Rational(0));
    for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
        x[e.pivots[pr]] = e.reduced.at(pr, m.cols());
    return x;
}

SpanResult in_span(const RatVector& v, const std::vector<RatVector>& basis) {
    for (const auto& b : basis)
        if (b.size() != v.size())
            throw std::invalid_argument("in_span: length mismatch");
    if (basis.empty()) {
        bool zero = std::all_of(v.begin(), v.end(),
                                [](const Rational& q) { return q == 0; });
        return {zero, {}};
    }
    RatMatrix m(v.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < v.size(); ++r) m.at(r, c) = basis[c][r];
    auto x = solve(m, v);
    if (!x) return {false, {}};
    return {true, *x};
}

std::vector<std::vector<Integer>> row_space_basis(const RatMatrix& m) {
    Echelon e = rref(m);
    std::vector<std::vector<Integer>> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        out.push_back(normalize_integral(e.reduced.row(r)));
    return out;
}

}  // namespace arrfree
