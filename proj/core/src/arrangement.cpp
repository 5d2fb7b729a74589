#include "arrfree/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arrfree {

LinearForm LinearForm::canonical(const std::vector<Integer>& raw) {
    std::vector<Integer> v = normalize_primitive(raw);
    bool zero = std::all_of(v.begin(), v.end(),
                            [](const Integer& x) { return x == 0; });
    if (zero) throw std::invalid_argument("hyperplane form is zero");
    return LinearForm{std::move(v)};
}

Arrangement::Arrangement(int dim, const std::vector<std::vector<Integer>>& forms,
                         std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    for (const auto& f : forms) {
        if (static_cast<int>(f.size()) != dim)
            throw std::invalid_argument("form length does not match dimension");
        LinearForm lf = LinearForm::canonical(f);
        for (const auto& g : forms_)
            if (g == lf)
                throw std::invalid_argument(
                    "duplicate or proportional hyperplane forms");
        forms_.push_back(std::move(lf));
    }
    if (!labels_.empty() && labels_.size() != forms_.size())
        throw std::invalid_argument("label count mismatch");
}

HomogPoly Arrangement::defining_poly() const {
    HomogPoly q = HomogPoly::constant(dim_, 1);
    for (const auto& f : forms_) q = q * f.poly();
    return q;
}

MultiArrangement::MultiArrangement(Arrangement a, Multiplicity m)
    : arrangement(std::move(a)), multiplicity(std::move(m)) {
    if (multiplicity.size() != arrangement.size())
        throw std::invalid_argument("multiplicity length mismatch");
    for (int v : multiplicity)
        if (v < 0) throw std::invalid_argument("multiplicity must be >= 0");
}

MultiArrangement MultiArrangement::simple(Arrangement a) {
    Multiplicity m(a.size(), 1);
    return MultiArrangement(std::move(a), std::move(m));
}

int MultiArrangement::total() const {
    int s = 0;
    for (int v : multiplicity) s += v;
    return s;
}

bool MultiArrangement::is_simple() const {
    return std::all_of(multiplicity.begin(), multiplicity.end(),
                       [](int v) { return v == 1; });
}

HomogPoly MultiArrangement::defining_poly() const {
    HomogPoly q = HomogPoly::constant(arrangement.dim(), 1);
    for (std::size_t i = 0; i < arrangement.size(); ++i)
        q = q * arrangement.form(i).poly().pow(multiplicity[i]);
    return q;
}

bool Flat::contains_hyperplane(std::size_t h) const {
    return std::binary_search(indices.begin(), indices.end(), h);
}

bool flat_leq(const Flat& x, const Flat& y) {
    return std::includes(y.indices.begin(), y.indices.end(), x.indices.begin(),
                         x.indices.end());
}

std::optional<std::size_t> IntersectionLattice::find(
    const std::vector<std::size_t>& closed_set) const {
    for (std::size_t i = 0; i < flats.size(); ++i)
        if (flats[i].indices == closed_set) return i;
    return std::nullopt;
}

namespace {

RatVector to_rat(const std::vector<Integer>& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

// Closed index set of the flat cut out by the given form space: every
// hyperplane whose form lies in the span contains the subspace.
std::vector<std::size_t> closed_set_of(
    const std::vector<std::vector<Integer>>& form_space, const Arrangement& a) {
    std::vector<RatVector> basis;
    for (const auto& r : form_space) basis.push_back(to_rat(r));
    std::vector<std::size_t> closed;
    for (std::size_t h = 0; h < a.size(); ++h)
        if (in_span(to_rat(a.form(h).coeffs), basis).member) closed.push_back(h);
    return closed;
}

}  // namespace

IntersectionLattice intersection_lattice(const Arrangement& a) {
    // Incremental closure: intersect each known flat with each hyperplane,
    // keyed by the canonical echelon basis of the defining form space.
    std::map<std::vector<std::vector<Integer>>, Flat> found;

    Flat bottom;
    bottom.dim = a.dim();
    found.emplace(bottom.form_space, bottom);

    std::vector<std::vector<std::vector<Integer>>> frontier = {bottom.form_space};
    while (!frontier.empty()) {
        std::vector<std::vector<std::vector<Integer>>> next;
        for (const auto& key : frontier) {
            const Flat base = found.at(key);
            for (std::size_t h = 0; h < a.size(); ++h) {
                if (base.contains_hyperplane(h)) continue;
                std::vector<std::vector<Integer>> rows = base.form_space;
                rows.push_back(a.form(h).coeffs);
                auto space = row_space_basis(
                    RatMatrix::from_int_rows(rows, a.dim()));
                if (found.contains(space)) continue;
                Flat f;
                f.form_space = space;
                f.dim = a.dim() - static_cast<int>(space.size());
                f.indices = closed_set_of(space, a);
                found.emplace(f.form_space, f);
                next.push_back(f.form_space);
            }
        }
        frontier = std::move(next);
    }

    IntersectionLattice lat;
    for (auto& [key, f] : found) lat.flats.push_back(std::move(f));
    std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& x, const Flat& y) {
        if (x.dim != y.dim) return x.dim > y.dim;
        return x.indices < y.indices;
    });

    // Mobius recursion down the poset; flats are already ordered by codim.
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
        if (i == 0) {
            lat.flats[i].mobius = 1;
            continue;
        }
        long long s = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (lat.flats[j].indices != lat.flats[i].indices &&
                flat_leq(lat.flats[j], lat.flats[i]))
                s += lat.flats[j].mobius;
        lat.flats[i].mobius = -s;
    }
    return lat;
}

CharPoly char_poly(const Arrangement& a) {
    IntersectionLattice lat = intersection_lattice(a);
    CharPoly chi;
    chi.coeffs.assign(a.dim() + 1, 0);
    for (const auto& f : lat.flats)
        chi.coeffs[f.dim] += Integer(static_cast<long>(f.mobius));
    return chi;
}

CharPoly char_poly_whitney(const Arrangement& a, std::size_t max_n) {
    if (a.size() > max_n)
        throw std::invalid_argument("whitney oracle bound exceeded");
    CharPoly chi;
    chi.coeffs.assign(a.dim() + 1, 0);
    const std::size_t n = a.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::vector<Integer>> rows;
        for (std::size_t h = 0; h < n; ++h)
            if (mask & (std::size_t{1} << h)) rows.push_back(a.form(h).coeffs);
        std::size_t r = rank(RatMatrix::from_int_rows(rows, a.dim()));
        int sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
        chi.coeffs[a.dim() - static_cast<int>(r)] += sign;
    }
    return chi;
}

Arrangement localization(const Arrangement& a, const Flat& x) {
    std::vector<std::vector<Integer>> forms;
    std::vector<std::string> labels;
    for (std::size_t h : x.indices) {
        forms.push_back(a.form(h).coeffs);
        if (!a.labels().empty()) labels.push_back(a.labels()[h]);
    }
    return Arrangement(a.dim(), forms, std::move(labels));
}

ZieglerRestriction ziegler_restriction(const Arrangement& a, std::size_t pivot) {
    if (pivot >= a.size()) throw std::invalid_argument("pivot out of range");
    if (a.dim() < 2)
        throw std::invalid_argument("ziegler restriction needs dimension >= 2");

    // Canonical integer basis of H0 = ker(alpha_pivot); columns of the chart.
    auto basis = kernel_basis(
        RatMatrix::from_int_rows({a.form(pivot).coeffs}, a.dim()));
    RatMatrix chart(a.dim(), a.dim() - 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < a.dim(); ++i) chart.at(i, j) = Rational(basis[j][i]);

    std::vector<std::vector<Integer>> rest_forms;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k == pivot) continue;
        std::vector<Integer> r(a.dim() - 1, 0);
        for (int j = 0; j < a.dim() - 1; ++j)
            for (int i = 0; i < a.dim(); ++i)
                r[j] += a.form(k).coeffs[i] * basis[j][i];
        std::vector<Integer> canon = normalize_primitive(r);
        bool zero = std::all_of(canon.begin(), canon.end(),
                                [](const Integer& x) { return x == 0; });
        if (zero)
            throw std::logic_error("restricted form vanished identically");
        bool merged = false;
        for (std::size_t g = 0; g < rest_forms.size(); ++g) {
            if (rest_forms[g] == canon) {
                groups[g].push_back(k);
                merged = true;
                break;
            }
        }
        if (!merged) {
            rest_forms.push_back(std::move(canon));
            groups.push_back({k});
        }
    }

    Multiplicity mult;
    for (const auto& g : groups) mult.push_back(static_cast<int>(g.size()));
    ZieglerRestriction out;
    out.restricted =
        MultiArrangement(Arrangement(a.dim() - 1, rest_forms), std::move(mult));
    out.chart = std::move(chart);
    out.groups = std::move(groups);
    return out;
}

namespace {

bool every_small_subset_independent(const std::vector<std::vector<Integer>>& forms,
                                    int dim) {
    const std::size_t n = forms.size();
    const std::size_t k = std::min<std::size_t>(n, static_cast<std::size_t>(dim));
    // Every subset of size <= dim extends to one of size k, so checking all
    // k-subsets for full rank suffices.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<std::vector<Integer>> rows;
        for (std::size_t i : idx) rows.push_back(forms[i]);
        if (rank(RatMatrix::from_int_rows(rows, dim)) != k) return false;
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

}  // namespace

Arrangement generate_family(Family family, int dim, int count, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    std::vector<std::vector<Integer>> forms;
    switch (family) {
        case Family::Boolean:
            for (int i = 0; i < dim; ++i) {
                std::vector<Integer> f(dim, 0);
                f[i] = 1;
                forms.push_back(std::move(f));
            }
            return Arrangement(dim, forms);
        case Family::Braid:
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    std::vector<Integer> f(dim, 0);
                    f[i] = 1;
                    f[j] = -1;
                    forms.push_back(std::move(f));
                }
            return Arrangement(dim, forms);
        case Family::Generic: {
            if (count < 1) throw std::invalid_argument("generic needs a count");
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<int> coeff(-4, 4);
            for (int attempt = 0; attempt < 2000; ++attempt) {
                forms.clear();
                bool ok = true;
                for (int i = 0; i < count && ok; ++i) {
                    std::vector<Integer> f(dim);
                    for (int j = 0; j < dim; ++j) f[j] = coeff(rng);
                    try {
                        LinearForm canon = LinearForm::canonical(f);
                        for (const auto& g : forms)
                            if (normalize_primitive(g) == canon.coeffs) ok = false;
                        forms.push_back(canon.coeffs);
                    } catch (const std::invalid_argument&) {
                        ok = false;
                    }
                }
                if (ok && every_small_subset_independent(forms, dim))
                    return Arrangement(dim, forms);
            }
            throw std::runtime_error("could not reach generic position");
        }
    }
    throw std::invalid_argument("unknown family");
}

Integer CharPoly::eval(const Integer& t) const {
    Integer v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * t + coeffs[k];
    return v;
}

std::optional<std::vector<int>> CharPoly::nonneg_integer_roots() const {
    std::vector<Integer> p = coeffs;  // ascending
    std::vector<int> roots;
    auto degree_of = [](const std::vector<Integer>& q) {
        int d = -1;
        for (std::size_t k = 0; k < q.size(); ++k)
            if (q[k] != 0) d = static_cast<int>(k);
        return d;
    };
    while (degree_of(p) > 0) {
        // peel roots at 0
        if (p[0] == 0) {
            roots.push_back(0);
            p.erase(p.begin());
            continue;
        }
        // positive integer roots divide the constant term
        Integer c0 = abs(p[0]);
        bool found = false;
        for (Integer r = 1; r <= c0 && !found; ++r) {
            if (c0 % r != 0) continue;
            Integer v = 0;
            for (std::size_t k = p.size(); k-- > 0;) v = v * r + p[k];
            if (v == 0) {
                // synthetic division by (t - r)
                std::vector<Integer> q(p.size() - 1, 0);
                Integer carry = p.back();
                for (std::size_t k = p.size() - 1; k-- > 0;) {
                    q[k] = carry;
                    carry = p[k] + carry * r;
                }
                roots.push_back(static_cast<int>(r.get_si()));
                p = std::move(q);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

std::string poly_str(const std::vector<Integer>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Integer& c = coeffs[k];
        if (c == 0) continue;
        Integer a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string CharPoly::str() const { return poly_str(coeffs); }

std::string CharPoly::factored_str() const {
    std::vector<Integer> p = coeffs;
    std::ostringstream os;
    auto degree_of = [](const std::vector<Integer>& q) {
        int d = -1;
        for (std::size_t k = 0; k < q.size(); ++k)
            if (q[k] != 0) d = static_cast<int>(k);
        return d;
    };
    int zeros = 0;
    while (degree_of(p) > 0 && p[0] == 0) {
        ++zeros;
        p.erase(p.begin());
    }
    std::map<Integer, int> linear;
    bool progress = true;
    while (degree_of(p) > 0 && progress) {
        progress = false;
        Integer c0 = abs(p[0]);
        for (Integer r = 1; r <= c0; ++r) {
            if (c0 % r != 0) continue;
            Integer v = 0;
            for (std::size_t k = p.size(); k-- > 0;) v = v * r + p[k];
            if (v == 0) {
                std::vector<Integer> q(p.size() - 1, 0);
                Integer carry = p.back();
                for (std::size_t k = p.size() - 1; k-- > 0;) {
                    q[k] = carry;
                    carry = p[k] + carry * r;
                }
                linear[r] += 1;
                p = std::move(q);
                progress = true;
                break;
            }
        }
    }
    if (zeros > 0) {
        os << "t";
        if (zeros > 1) os << "^" << zeros;
    }
    for (const auto& [r, mult] : linear) {
        os << "(t-" << to_string(r) << ")";
        if (mult > 1) os << "^" << mult;
    }
    if (degree_of(p) > 0) {
        os << "(" << poly_str(p) << ")";
    } else if (p.size() >= 1 && p[0] != 1) {
        os << to_string(p[0]);
    } else if (zeros == 0 && linear.empty()) {
        os << poly_str(p);
    }
    return os.str();
}

Arrangement build_arrangement(int dim, const std::vector<std::vector<Integer>>& forms,
                              std::vector<std::string> labels) {
    return Arrangement(dim, forms, std::move(labels));
}

}  // namespace arrfree
