#include "arrfree/logder.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace arrfree {

Derivation::Derivation(int nvars, int degree, std::vector<HomogPoly> coeffs)
    : nvars_(nvars), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(nvars))
        throw std::invalid_argument("derivation needs one coefficient per variable");
    for (const auto& f : coeffs_)
        if (!f.is_zero() && (f.degree() != degree || f.nvars() != nvars))
            throw std::invalid_argument("derivation coefficients must share degree");
}

Derivation Derivation::zero(int nvars, int degree) {
    return Derivation(nvars, degree,
                      std::vector<HomogPoly>(nvars, HomogPoly(nvars, degree)));
}

Derivation Derivation::from_coeffs(int nvars, int degree, const RatVector& v) {
    auto n = monomials_of_degree(nvars, degree).size();
    if (v.size() != n * static_cast<std::size_t>(nvars))
        throw std::invalid_argument("from_coeffs: size mismatch");
    std::vector<HomogPoly> coeffs;
    for (int i = 0; i < nvars; ++i) {
        RatVector block(v.begin() + i * n, v.begin() + (i + 1) * n);
        coeffs.push_back(HomogPoly::from_coeffs(nvars, degree, block));
    }
    return Derivation(nvars, degree, std::move(coeffs));
}

bool Derivation::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const HomogPoly& f) { return f.is_zero(); });
}

RatVector Derivation::coeff_vector() const {
    RatVector out;
    for (const auto& f : coeffs_) {
        RatVector block = f.coeff_vector();
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

HomogPoly Derivation::operator()(const HomogPoly& p) const {
    if (p.nvars() != nvars_ && !p.is_zero())
        throw std::invalid_argument("apply_derivation: variable count mismatch");
    int out_deg = degree_ + p.degree() - 1;
    if (p.degree() == 0 || out_deg < 0) return HomogPoly(nvars_, 0);
    HomogPoly out(nvars_, out_deg);
    for (int i = 0; i < nvars_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        HomogPoly dp = p.derivative(i);
        if (dp.is_zero()) continue;
        out = out + coeffs_[i] * dp;
    }
    return out;
}

Derivation Derivation::operator+(const Derivation& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_)
        throw std::invalid_argument("derivation sum: shape mismatch");
    std::vector<HomogPoly> c;
    for (int i = 0; i < nvars_; ++i) c.push_back(coeffs_[i] + o.coeffs_[i]);
    return Derivation(nvars_, degree_, std::move(c));
}

Derivation Derivation::operator*(const Rational& q) const {
    std::vector<HomogPoly> c;
    for (const auto& f : coeffs_) c.push_back(f * q);
    return Derivation(nvars_, degree_, std::move(c));
}

Derivation Derivation::scale(const HomogPoly& p) const {
    std::vector<HomogPoly> c;
    for (const auto& f : coeffs_) c.push_back(f * p);
    return Derivation(nvars_, degree_ + p.degree(), std::move(c));
}

bool Derivation::operator==(const Derivation& o) const {
    if (nvars_ != o.nvars_) return false;
    for (int i = 0; i < nvars_; ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

std::string Derivation::str(const std::vector<std::string>& vars) const {
    std::vector<std::string> names =
        vars.empty() ? default_var_names(nvars_) : vars;
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[i].str(names) << ")*d/d" << names[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

HomogPoly apply_derivation(const Derivation& d, const HomogPoly& p) { return d(p); }

Derivation euler_derivation(int nvars) {
    std::vector<HomogPoly> c;
    for (int i = 0; i < nvars; ++i) c.push_back(HomogPoly::variable(nvars, i));
    return Derivation(nvars, 1, std::move(c));
}

namespace {

// Forward-substitution span tracker for membership and complement picking.
class IncrementalSpan {
  public:
    // Reduce v against the stored rows; returns the reduced vector.
    RatVector reduce(RatVector v) const {
        for (const auto& [pc, row] : rows_) {
            if (v[pc] == 0) continue;
            Rational f = v[pc];
            for (std::size_t c = pc; c < v.size(); ++c) v[c] -= f * row[c];
        }
        return v;
    }

    bool contains(const RatVector& v) const {
        RatVector r = reduce(v);
        return std::all_of(r.begin(), r.end(),
                           [](const Rational& q) { return q == 0; });
    }

    // Insert if independent; returns true when the vector enlarged the span.
    bool add(const RatVector& v) {
        RatVector r = reduce(v);
        std::size_t pc = 0;
        while (pc < r.size() && r[pc] == 0) ++pc;
        if (pc == r.size()) return false;
        Rational inv = 1 / r[pc];
        for (auto& q : r) q *= inv;
        rows_.emplace(pc, std::move(r));
        return true;
    }

    std::size_t dim() const { return rows_.size(); }

  private:
    std::map<std::size_t, RatVector> rows_;
};

// Constraint rows for D(A, m)_d, plus optional exact-vanishing hyperplanes.
// Unknowns are component-major coefficients of the field.
RatMatrix divisibility_system(const Arrangement& a, const Multiplicity& mult,
                              const std::vector<bool>& force_zero, int d) {
    const int nv = a.dim();
    const auto mons = monomials_of_degree(nv, d);
    const std::size_t n_mons = mons.size();
    const std::size_t n_unknowns = n_mons * nv;

    std::vector<RatVector> rows;
    for (std::size_t h = 0; h < a.size(); ++h) {
        const int m = mult[h];
        const auto& alpha = a.form(h).coeffs;
        const bool vanish = force_zero[h] || d < m;
        if (m == 0 && !force_zero[h]) continue;

        if (vanish) {
            // delta(alpha) = 0: one row per degree-d monomial.
            for (std::size_t t = 0; t < n_mons; ++t) {
                RatVector row(n_unknowns, Rational(0));
                for (int i = 0; i < nv; ++i)
                    row[i * n_mons + t] = Rational(alpha[i]);
                rows.push_back(std::move(row));
            }
            continue;
        }

        // Membership of delta(alpha) in alpha^m * S_{d-m}: kill the
        // projection onto a complement, i.e. impose u . delta(alpha) = 0 for
        // every u in the left null space of the subspace matrix.
        HomogPoly am = a.form(h).poly().pow(m);
        const auto sub_mons = monomials_of_degree(nv, d - m);
        RatMatrix w(n_mons, sub_mons.size());
        for (std::size_t c = 0; c < sub_mons.size(); ++c) {
            HomogPoly col = am * HomogPoly::monomial(nv, sub_mons[c], 1);
            RatVector cv = col.coeff_vector();
            for (std::size_t r = 0; r < n_mons; ++r) w.at(r, c) = cv[r];
        }
        for (const auto& u : kernel_basis(w.transpose())) {
            RatVector row(n_unknowns, Rational(0));
            for (std::size_t t = 0; t < n_mons; ++t) {
                if (u[t] == 0) continue;
                for (int i = 0; i < nv; ++i)
                    row[i * n_mons + t] += Rational(u[t]) * Rational(alpha[i]);
            }
            rows.push_back(std::move(row));
        }
    }

    if (rows.empty()) {
        RatMatrix empty(0, n_unknowns);
        return empty;
    }
    return RatMatrix::from_rows(rows);
}

GradedBasis solve_piece(const Arrangement& a, const Multiplicity& mult,
                        const std::vector<bool>& force_zero, int d) {
    GradedBasis out;
    out.degree = d;
    if (d < 0) return out;
    const int nv = a.dim();
    const std::size_t n_unknowns = monomials_of_degree(nv, d).size() * nv;
    RatMatrix sys = divisibility_system(a, mult, force_zero, d);
    if (sys.rows() == 0) {
        // Unconstrained: the full space of degree-d fields.
        for (std::size_t k = 0; k < n_unknowns; ++k) {
            RatVector v(n_unknowns, Rational(0));
            v[k] = 1;
            out.members.push_back(Derivation::from_coeffs(nv, d, v));
        }
        return out;
    }
    for (const auto& kv : kernel_basis(sys)) {
        RatVector v;
        v.reserve(kv.size());
        for (const auto& x : kv) v.emplace_back(x);
        out.members.push_back(Derivation::from_coeffs(nv, d, v));
    }
    return out;
}

}  // namespace

GradedBasis graded_piece(const MultiArrangement& ma, int d) {
    return solve_piece(ma.arrangement, ma.multiplicity,
                       std::vector<bool>(ma.arrangement.size(), false), d);
}

GradedBasis d0_graded_piece(const Arrangement& a, std::size_t pivot, int d) {
    if (pivot >= a.size()) throw std::invalid_argument("pivot out of range");
    std::vector<bool> force_zero(a.size(), false);
    force_zero[pivot] = true;
    return solve_piece(a, Multiplicity(a.size(), 1), force_zero, d);
}

std::size_t GeneratorTable::generator_count() const {
    std::size_t c = 0;
    for (const auto& r : rows) c += r.new_gens;
    return c;
}

std::vector<int> GeneratorTable::generator_degrees() const {
    std::vector<int> out;
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.new_gens; ++k) out.push_back(r.degree);
    return out;
}

std::vector<Derivation> GeneratorTable::all_generators() const {
    std::vector<Derivation> out;
    for (const auto& r : rows)
        out.insert(out.end(), r.generators.begin(), r.generators.end());
    return out;
}

GeneratorTable minimal_generators_of(const std::function<GradedBasis(int)>& piece,
                                     int nvars, int dmax) {
    GeneratorTable table;
    GradedBasis prev;
    for (int d = 0; d <= dmax; ++d) {
        GradedBasis cur = piece(d);
        DegreeRow row;
        row.degree = d;
        row.dim = cur.dim();

        IncrementalSpan span;
        if (d > 0) {
            for (const auto& delta : prev.members)
                for (int k = 0; k < nvars; ++k)
                    span.add(delta.scale(HomogPoly::variable(nvars, k))
                                 .coeff_vector());
        }
        for (const auto& delta : cur.members) {
            if (span.add(delta.coeff_vector())) {
                row.new_gens += 1;
                row.generators.push_back(delta);
            }
        }
        table.rows.push_back(std::move(row));
        prev = std::move(cur);
    }
    return table;
}

GeneratorTable minimal_generators(const MultiArrangement& ma, int dmax) {
    return minimal_generators_of(
        [&ma](int d) { return graded_piece(ma, d); }, ma.arrangement.dim(), dmax);
}

std::vector<std::vector<HomogPoly>> saito_matrix(
    const std::vector<Derivation>& derivs) {
    if (derivs.empty()) return {};
    const int nv = derivs.front().nvars();
    if (derivs.size() != static_cast<std::size_t>(nv))
        throw std::invalid_argument("saito_matrix: need exactly dim fields");
    std::vector<std::vector<HomogPoly>> m;
    for (const auto& d : derivs) {
        if (d.nvars() != nv)
            throw std::invalid_argument("saito_matrix: mixed variable counts");
        m.push_back(d.coeffs());
    }
    return m;
}

namespace {

HomogPoly det_minor(const std::vector<std::vector<HomogPoly>>& m,
                    std::size_t row, std::vector<std::size_t>& cols, int nvars) {
    if (cols.empty()) return HomogPoly::constant(nvars, 1);
    HomogPoly acc;
    bool first = true;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t c = cols[k];
        const HomogPoly& entry = m[row][c];
        if (entry.is_zero()) continue;
        cols.erase(cols.begin() + k);
        HomogPoly sub = det_minor(m, row + 1, cols, nvars);
        cols.insert(cols.begin() + k, c);
        if (sub.is_zero()) continue;
        HomogPoly term = entry * sub;
        if (k % 2 == 1) term = -term;
        acc = first ? term : acc + term;
        first = false;
    }
    if (first) return HomogPoly(nvars, 0);
    return acc;
}

}  // namespace

HomogPoly poly_matrix_det(const std::vector<std::vector<HomogPoly>>& m) {
    if (m.empty()) throw std::invalid_argument("det of empty matrix");
    int nvars = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) nvars = e.nvars();
    if (nvars == 0) nvars = static_cast<int>(m.size());
    std::vector<std::size_t> cols(m.size());
    for (std::size_t c = 0; c < m.size(); ++c) cols[c] = c;
    return det_minor(m, 0, cols, nvars);
}

bool is_member(const Derivation& d, const MultiArrangement& ma) {
    const Arrangement& a = ma.arrangement;
    for (std::size_t h = 0; h < a.size(); ++h) {
        const int m = ma.multiplicity[h];
        if (m == 0) continue;
        HomogPoly p = d(a.form(h).poly());
        if (p.is_zero()) continue;
        if (p.degree() < m) return false;
        HomogPoly am = a.form(h).poly().pow(m);
        std::vector<RatVector> cols;
        for (const auto& e : monomials_of_degree(a.dim(), p.degree() - m))
            cols.push_back((am * HomogPoly::monomial(a.dim(), e, 1)).coeff_vector());
        if (!in_span(p.coeff_vector(), cols).member) return false;
    }
    return true;
}

SaitoResult saito_check(const std::vector<Derivation>& derivs,
                        const MultiArrangement& ma) {
    for (const auto& d : derivs)
        if (!is_member(d, ma))
            throw std::invalid_argument(
                "saito_check: field is not in the derivation module");
    SaitoResult res;
    res.determinant = poly_matrix_det(saito_matrix(derivs));
    res.constant = 0;
    if (res.determinant.is_zero()) return res;
    HomogPoly q = ma.defining_poly();
    if (res.determinant.degree() != q.degree()) return res;
    // det and Q_m are homogeneous of equal degree; compare via one ratio.
    const auto& [e, c] = *q.terms().begin();
    Rational ratio = res.determinant.coeff(e) / c;
    if (ratio == 0) return res;
    if (res.determinant == q * ratio) {
        res.basis = true;
        res.constant = ratio;
    }
    return res;
}

namespace {

std::string freeness_key(const MultiArrangement& ma, int dmax) {
    std::ostringstream os;
    os << ma.arrangement.dim() << "|" << dmax;
    for (std::size_t h = 0; h < ma.arrangement.size(); ++h) {
        os << ";" << ma.multiplicity[h] << ":";
        for (const auto& c : ma.arrangement.form(h).coeffs)
            os << to_string(c) << ",";
    }
    return os.str();
}

FreenessCertificate freeness_uncached(const MultiArrangement& ma,
                                      int dmax_override);

}  // namespace

// Certificates are pure functions of the input; the criterion checkers ask
// for the same ones repeatedly, so cache by value.
FreenessCertificate freeness(const MultiArrangement& ma, int dmax_override) {
    static std::mutex mu;
    static std::map<std::string, FreenessCertificate> cache;
    std::string key = freeness_key(ma, dmax_override);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FreenessCertificate cert = freeness_uncached(ma, dmax_override);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), cert);
    return cert;
}

namespace {

FreenessCertificate freeness_uncached(const MultiArrangement& ma,
                                      int dmax_override) {
    const Arrangement& a = ma.arrangement;
    const int nv = a.dim();
    FreenessCertificate cert;

    if (ma.is_simple()) {
        cert.char_poly = char_poly(a);
        cert.char_poly_valid = true;
        auto roots = cert.char_poly.nonneg_integer_roots();
        if (!roots) {
            cert.free = false;
            cert.reason = NonFreeReason::CharPolyNonSplit;
            cert.witness = "characteristic polynomial " +
                           cert.char_poly.factored_str() +
                           " has no factorization over nonnegative integers";
            return cert;
        }
    }

    const int dmax = dmax_override >= 0 ? dmax_override : ma.total();
    cert.table = minimal_generators(ma, dmax);
    cert.table_valid = true;

    const std::size_t count = cert.table.generator_count();
    std::vector<int> degrees = cert.table.generator_degrees();
    int degree_sum = 0;
    for (int d : degrees) degree_sum += d;

    auto degrees_str = [&degrees]() {
        std::string s = "(";
        for (std::size_t i = 0; i < degrees.size(); ++i)
            s += (i ? "," : "") + std::to_string(degrees[i]);
        return s + ")";
    };

    if (count != static_cast<std::size_t>(nv) || degree_sum != ma.total()) {
        cert.free = false;
        cert.reason = NonFreeReason::GeneratorCount;
        std::ostringstream os;
        os << "minimal generators up to degree " << dmax << ": count " << count
           << " in degrees " << degrees_str() << " (rank " << nv
           << ", degree budget " << ma.total() << ")";
        cert.witness = os.str();
        return cert;
    }

    std::vector<Derivation> gens = cert.table.all_generators();
    SaitoResult saito = saito_check(gens, ma);
    if (!saito.basis) {
        cert.free = false;
        cert.reason = NonFreeReason::SaitoDegenerate;
        cert.saito_determinant = saito.determinant;
        cert.witness =
            "generator determinant " + saito.determinant.str() +
            " is not a nonzero constant multiple of the defining polynomial";
        return cert;
    }

    cert.free = true;
    cert.exponents = degrees;
    std::sort(cert.exponents.begin(), cert.exponents.end());
    cert.basis = std::move(gens);
    cert.saito_constant = saito.constant;
    cert.saito_determinant = saito.determinant;
    return cert;
}

}  // namespace

FreenessCertificate freeness(const Arrangement& a) {
    return freeness(MultiArrangement::simple(a));
}

Derivation restrict_derivation(const Derivation& d, const RatMatrix& chart) {
    const int nv = d.nvars();
    if (chart.rows() != static_cast<std::size_t>(nv))
        throw std::invalid_argument("restrict_derivation: chart shape mismatch");
    const int nv_new = static_cast<int>(chart.cols());

    // The pivot form spans the left kernel of the chart; the precondition is
    // exact vanishing of delta(alpha), not just tangency along the hyperplane.
    auto left_kernel = kernel_basis(chart.transpose());
    if (left_kernel.size() != 1)
        throw std::invalid_argument("restrict_derivation: chart is not a "
                                    "hyperplane inclusion");
    if (!d(HomogPoly::linear(left_kernel[0])).is_zero())
        throw std::invalid_argument(
            "restrict_derivation: field does not annihilate the pivot form");

    std::vector<HomogPoly> restricted;
    for (int i = 0; i < nv; ++i)
        restricted.push_back(d.coeff(i).substitute_linear(chart));

    // Solve chart * g = restricted componentwise on each monomial of S_d in
    // the new variables; inconsistency means the field is not tangent.
    const auto mons = monomials_of_degree(nv_new, d.degree());
    std::vector<HomogPoly> g(nv_new, HomogPoly(nv_new, d.degree()));
    for (const auto& e : mons) {
        RatVector rhs(nv);
        for (int i = 0; i < nv; ++i) rhs[i] = restricted[i].coeff(e);
        auto x = solve(chart, rhs);
        if (!x)
            throw std::invalid_argument(
                "restrict_derivation: field is not tangent to the pivot");
        for (int j = 0; j < nv_new; ++j)
            if ((*x)[j] != 0) g[j].add_term(e, (*x)[j]);
    }
    return Derivation(nv_new, d.degree(), std::move(g));
}

}  // namespace arrfree
