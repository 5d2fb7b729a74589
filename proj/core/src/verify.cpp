#include "arrfree/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "arrfree/criteria.hpp"
#include "arrfree/logder.hpp"

namespace arrfree {

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
    out.push_back({name, ok, detail});
}

CharPoly falling_factorial(int l) {
    // t(t-1)...(t-l+1)
    std::vector<Integer> p = {1};
    for (int r = 0; r < l; ++r) {
        std::vector<Integer> q(p.size() + 1, 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k + 1] += p[k];
            q[k] -= Integer(r) * p[k];
        }
        p = std::move(q);
    }
    return CharPoly{p};
}

CharPoly power_of_t_minus_one(int l) {
    std::vector<Integer> p = {1};
    for (int r = 0; r < l; ++r) {
        std::vector<Integer> q(p.size() + 1, 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k + 1] += p[k];
            q[k] -= p[k];
        }
        p = std::move(q);
    }
    return CharPoly{p};
}

bool divides(const HomogPoly& q, const HomogPoly& p) {
    if (p.is_zero()) return true;
    if (p.degree() < q.degree()) return false;
    std::vector<RatVector> cols;
    for (const auto& e : monomials_of_degree(p.nvars(), p.degree() - q.degree()))
        cols.push_back((q * HomogPoly::monomial(p.nvars(), e, 1)).coeff_vector());
    return in_span(p.coeff_vector(), cols).member;
}

Integer binom_ll(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

// Expected dim D(A,m)_d for a free module with the given exponents.
Integer free_hilbert(const std::vector<int>& exps, int l, int d) {
    Integer s = 0;
    for (int e : exps) s += binom_ll(d - e + l - 1, l - 1);
    return s;
}

Arrangement random_arrangement(int dim, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<Integer>> forms;
        bool ok = true;
        while (static_cast<int>(forms.size()) < count && ok) {
            std::vector<Integer> f(dim);
            for (int j = 0; j < dim; ++j) f[j] = coeff(rng);
            try {
                LinearForm canon = LinearForm::canonical(f);
                bool dup = false;
                for (const auto& g : forms)
                    if (g == canon.coeffs) dup = true;
                if (!dup) forms.push_back(canon.coeffs);
            } catch (const std::invalid_argument&) {
                // zero form, redraw
            }
            if (forms.size() > 200u) ok = false;
        }
        if (ok) return Arrangement(dim, forms);
    }
    throw std::runtime_error("random arrangement generation failed");
}

std::string int_list(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::vector<CheckResult> suite_mobius() {
    std::vector<CheckResult> out;
    for (const auto& [name, a] : corpus()) {
        IntersectionLattice lat = intersection_lattice(a);
        bool ident = true;
        for (std::size_t i = 1; i < lat.flats.size(); ++i) {
            long long s = 0;
            for (const auto& y : lat.flats)
                if (flat_leq(y, lat.flats[i])) s += y.mobius;
            if (s != 0) ident = false;
        }
        check(out, "mobius-identity " + name, ident,
              std::to_string(lat.flats.size()) + " flats");
    }
    for (int l = 2; l <= 4; ++l) {
        auto lat = intersection_lattice(generate_family(Family::Boolean, l));
        check(out, "boolean(" + std::to_string(l) + ") lattice size",
              lat.flats.size() == (std::size_t{1} << l),
              std::to_string(lat.flats.size()));
    }
    std::size_t bell[] = {0, 0, 0, 5, 15};
    for (int l = 3; l <= 4; ++l) {
        auto lat = intersection_lattice(generate_family(Family::Braid, l));
        check(out, "braid(" + std::to_string(l) + ") lattice is Bell number",
              lat.flats.size() == bell[l], std::to_string(lat.flats.size()));
    }
    {
        auto lat = intersection_lattice(generate_family(Family::Braid, 3));
        std::vector<long long> mu;
        for (const auto& f : lat.flats) mu.push_back(f.mobius);
        check(out, "braid(3) mobius values",
              mu == std::vector<long long>{1, -1, -1, -1, 2});
    }
    return out;
}

std::vector<CheckResult> suite_charpoly() {
    std::vector<CheckResult> out;
    for (int l = 3; l <= 5; ++l) {
        Arrangement a = generate_family(Family::Braid, l);
        CharPoly chi = char_poly(a);
        check(out, "braid(" + std::to_string(l) + ") chi = t(t-1)...",
              chi == falling_factorial(l), chi.str());
        check(out, "braid(" + std::to_string(l) + ") whitney oracle",
              chi == char_poly_whitney(a));
    }
    for (int l = 1; l <= 5; ++l) {
        Arrangement a = generate_family(Family::Boolean, l);
        CharPoly chi = char_poly(a);
        check(out, "boolean(" + std::to_string(l) + ") chi = (t-1)^l",
              chi == power_of_t_minus_one(l), chi.str());
        check(out, "boolean(" + std::to_string(l) + ") whitney oracle",
              chi == char_poly_whitney(a));
    }
    {
        CharPoly chi = char_poly(generate_family(Family::Generic, 3, 4));
        CharPoly want{{-3, 6, -4, 1}};
        check(out, "generic(3,4) chi", chi == want, chi.str());
    }
    {
        CharPoly chi = char_poly(generate_family(Family::Generic, 4, 5));
        CharPoly want{{4, -10, 10, -5, 1}};
        check(out, "generic(4,5) chi", chi == want, chi.str());
    }
    for (const auto& [name, a] : corpus()) {
        CharPoly chi = char_poly(a);
        check(out, "whitney oracle " + name, chi == char_poly_whitney(a));
        check(out, "(t-1) divides chi " + name, chi.eval(1) == 0);
        bool alternating = true;
        for (std::size_t k = 0; k < chi.coeffs.size(); ++k) {
            if (chi.coeffs[k] == 0) continue;
            int want_sign = (a.dim() - static_cast<int>(k)) % 2 == 0 ? 1 : -1;
            if (sgn(chi.coeffs[k]) != want_sign) alternating = false;
        }
        check(out, "alternating signs " + name, alternating, chi.str());
        check(out, "subleading coefficient " + name,
              abs(chi.coeffs[a.dim() - 1]) == Integer(a.size()));
    }
    return out;
}

std::vector<CheckResult> suite_freeness() {
    std::vector<CheckResult> out;
    auto expect_free = [&out](const std::string& name, const MultiArrangement& ma,
                              const std::vector<int>& exps) {
        FreenessCertificate c = freeness(ma);
        check(out, name + " FREE " + int_list(exps),
              c.free && c.exponents == exps,
              c.free ? "exponents " + int_list(c.exponents) : c.witness);
        if (c.free) {
            HomogPoly det = poly_matrix_det(saito_matrix(c.basis));
            check(out, name + " saito determinant re-expands",
                  det == ma.defining_poly() * c.saito_constant,
                  "constant " + to_string(c.saito_constant));
        }
    };
    for (int l = 2; l <= 4; ++l)
        expect_free("boolean(" + std::to_string(l) + ")",
                    MultiArrangement::simple(generate_family(Family::Boolean, l)),
                    std::vector<int>(l, 1));
    expect_free("braid(3)",
                MultiArrangement::simple(generate_family(Family::Braid, 3)),
                {0, 1, 2});
    expect_free("braid(4)",
                MultiArrangement::simple(generate_family(Family::Braid, 4)),
                {0, 1, 2, 3});
    expect_free("boolean(3) mult (2,1,1)",
                MultiArrangement(generate_family(Family::Boolean, 3), {2, 1, 1}),
                {1, 1, 2});
    {
        auto zr = ziegler_restriction(generate_family(Family::Braid, 3), 0);
        expect_free("braid(3) restriction", zr.restricted, {0, 2});
    }
    std::vector<std::pair<std::string, Arrangement>> nonfree = {
        {"generic(3,4)", generate_family(Family::Generic, 3, 4)},
        {"generic(4,5)", generate_family(Family::Generic, 4, 5)}};
    for (const auto& [name, a] : nonfree) {
        FreenessCertificate c = freeness(a);
        check(out, name + " NONFREE", !c.free,
              c.free ? "unexpected FREE" : c.witness);
    }
    return out;
}

std::vector<CheckResult> suite_terao() {
    std::vector<CheckResult> out;
    for (const auto& [name, a] : corpus()) {
        CriterionReport rep = terao_check(a);
        check(out, "terao " + name, rep.verdict && !rep.internal_error,
              rep.summary);
    }
    return out;
}

std::vector<CheckResult> suite_ziegler() {
    std::vector<CheckResult> out;
    for (const auto& [name, a] : corpus()) {
        FreenessCertificate c = freeness(a);
        if (!c.free) continue;
        if (std::find(c.exponents.begin(), c.exponents.end(), 1) ==
            c.exponents.end())
            continue;
        for (std::size_t pivot = 0; pivot < a.size(); ++pivot) {
            CriterionReport rep = ziegler_check(a, pivot);
            check(out, "ziegler " + name + " pivot " + std::to_string(pivot),
                  rep.verdict && !rep.internal_error, rep.summary);
        }
    }
    return out;
}

std::vector<CheckResult> suite_yoshinaga() {
    std::vector<CheckResult> out;
    std::vector<std::pair<std::string, Arrangement>> members = {
        {"boolean(4)", generate_family(Family::Boolean, 4)},
        {"braid(4)", generate_family(Family::Braid, 4)},
        {"generic(4,5)", generate_family(Family::Generic, 4, 5)},
        {"generic(4,6)", generate_family(Family::Generic, 4, 6)},
    };
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        members.emplace_back("random(4,6,seed=" + std::to_string(seed) + ")",
                             random_arrangement(4, 6, seed));
    for (const auto& [name, a] : members) {
        CriterionReport rep = yoshinaga_any(a);
        FreenessCertificate direct = freeness(a);
        check(out, "hyperplane-section agrees " + name,
              rep.verdict == direct.free && !rep.internal_error,
              rep.summary + "; direct " +
                  std::string(direct.free ? "FREE" : "NONFREE"));
    }
    return out;
}

std::vector<CheckResult> suite_hilbert() {
    std::vector<CheckResult> out;
    std::vector<std::pair<std::string, MultiArrangement>> members;
    for (int l = 2; l <= 4; ++l)
        members.emplace_back(
            "boolean(" + std::to_string(l) + ")",
            MultiArrangement::simple(generate_family(Family::Boolean, l)));
    members.emplace_back(
        "braid(3)", MultiArrangement::simple(generate_family(Family::Braid, 3)));
    members.emplace_back(
        "braid(4)", MultiArrangement::simple(generate_family(Family::Braid, 4)));
    members.emplace_back(
        "boolean(3) mult (2,1,1)",
        MultiArrangement(generate_family(Family::Boolean, 3), {2, 1, 1}));
    members.emplace_back(
        "braid(3) restriction",
        ziegler_restriction(generate_family(Family::Braid, 3), 0).restricted);
    for (const auto& [name, ma] : members) {
        FreenessCertificate c = freeness(ma);
        if (!c.free) {
            check(out, "hilbert " + name, false, "unexpected NONFREE");
            continue;
        }
        bool ok = true;
        for (int d = 0; d <= ma.total(); ++d) {
            Integer want = free_hilbert(c.exponents, ma.arrangement.dim(), d);
            if (Integer(static_cast<long>(graded_piece(ma, d).dim())) != want)
                ok = false;
        }
        check(out, "hilbert " + name, ok, "exponents " + int_list(c.exponents));
    }
    return out;
}

std::vector<CheckResult> suite_euler() {
    std::vector<CheckResult> out;
    for (const auto& [name, a] : corpus()) {
        MultiArrangement ma = MultiArrangement::simple(a);
        bool ok = true;
        const int dtop = 5;
        std::vector<std::size_t> full_dim;
        for (int d = 0; d <= dtop; ++d)
            full_dim.push_back(graded_piece(ma, d).dim());
        for (std::size_t pivot = 0; pivot < a.size() && ok; ++pivot) {
            for (int d = 0; d <= dtop; ++d) {
                Integer want = Integer(static_cast<long>(
                                   d0_graded_piece(a, pivot, d).dim())) +
                               graded_dim(a.dim(), d - 1);
                if (Integer(static_cast<long>(full_dim[d])) != want) ok = false;
            }
        }
        check(out, "euler decomposition " + name, ok);
    }
    return out;
}

std::vector<CheckResult> suite_saito() {
    std::vector<CheckResult> out;
    std::vector<std::pair<std::string, MultiArrangement>> members = {
        {"braid(3)", MultiArrangement::simple(generate_family(Family::Braid, 3))},
        {"boolean(3)",
         MultiArrangement::simple(generate_family(Family::Boolean, 3))},
        {"boolean(2) mult (2,1)",
         MultiArrangement(generate_family(Family::Boolean, 2), {2, 1})},
        {"generic(3,4)",
         MultiArrangement::simple(generate_family(Family::Generic, 3, 4))},
    };
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> small(-3, 3);
    int tuples = 0;
    bool all_ok = true;
    while (tuples < 100) {
        for (const auto& [name, ma] : members) {
            const int l = ma.arrangement.dim();
            std::uniform_int_distribution<int> deg(0, ma.total());
            std::vector<Derivation> tuple;
            for (int i = 0; i < l; ++i) {
                int d = deg(rng);
                GradedBasis gb = graded_piece(ma, d);
                Derivation delta = Derivation::zero(l, d);
                for (const auto& member : gb.members)
                    delta = delta + member * Rational(small(rng));
                tuple.push_back(delta);
            }
            HomogPoly det = poly_matrix_det(saito_matrix(tuple));
            if (!divides(ma.defining_poly(), det)) all_ok = false;
            ++tuples;
            if (tuples >= 100) break;
        }
    }
    check(out, "saito divisibility on 100 random tuples", all_ok);
    return out;
}

std::vector<CheckResult> suite_linalg() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);

    bool rank_ok = true;
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> dim(1, 12);
        std::size_t r = dim(rng), c = dim(rng);
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        if (rank(m) + kernel_basis(m).size() != c) rank_ok = false;
    }
    check(out, "rank + nullity = columns (random up to 12x12)", rank_ok);

    // cofactor-expansion oracle
    auto cofactor_det = [](auto&& self, const RatMatrix& m) -> Rational {
        if (m.rows() == 1) return m.at(0, 0);
        Rational acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.at(0, c) == 0) continue;
            RatMatrix minor(m.rows() - 1, m.cols() - 1);
            for (std::size_t i = 1; i < m.rows(); ++i) {
                std::size_t jj = 0;
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (j == c) continue;
                    minor.at(i - 1, jj++) = m.at(i, j);
                }
            }
            Rational term = m.at(0, c) * self(self, minor);
            acc += (c % 2 == 0) ? term : -term;
        }
        return acc;
    };
    bool det_ok = true;
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        std::size_t n = dim(rng);
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        if (det(m) != cofactor_det(cofactor_det, m)) det_ok = false;
    }
    check(out, "bareiss det equals cofactor det (random up to 5x5)", det_ok);

    {
        RatMatrix vdm = RatMatrix::from_rows(
            {{1, 1, 1}, {1, 2, 3}, {1, 4, 9}});
        check(out, "vandermonde determinant", det(vdm) == 2);
    }
    return out;
}

}  // namespace

std::vector<std::pair<std::string, Arrangement>> corpus() {
    std::vector<std::pair<std::string, Arrangement>> out;
    for (int l = 2; l <= 4; ++l)
        out.emplace_back("boolean(" + std::to_string(l) + ")",
                         generate_family(Family::Boolean, l));
    out.emplace_back("braid(3)", generate_family(Family::Braid, 3));
    out.emplace_back("braid(4)", generate_family(Family::Braid, 4));
    out.emplace_back("generic(3,4)", generate_family(Family::Generic, 3, 4));
    out.emplace_back("generic(4,5)", generate_family(Family::Generic, 4, 5));
    return out;
}

std::vector<std::string> suite_names() {
    return {"mobius", "charpoly", "freeness", "terao",  "ziegler",
            "yoshinaga", "hilbert", "euler", "saito", "linalg"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "mobius") return suite_mobius();
    if (name == "charpoly") return suite_charpoly();
    if (name == "freeness") return suite_freeness();
    if (name == "terao") return suite_terao();
    if (name == "ziegler") return suite_ziegler();
    if (name == "yoshinaga") return suite_yoshinaga();
    if (name == "hilbert") return suite_hilbert();
    if (name == "euler") return suite_euler();
    if (name == "saito") return suite_saito();
    if (name == "linalg") return suite_linalg();
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace arrfree
