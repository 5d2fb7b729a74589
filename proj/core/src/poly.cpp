#include "arrfree/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace arrfree {

std::vector<Exponent> monomials_of_degree(int nvars, int d) {
    std::vector<Exponent> out;
    if (nvars <= 0 || d < 0) return out;
    Exponent cur(nvars, 0);
    // Enumerate in lexicographic ascending order by recursion on the first
    // variable's exponent.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

Integer graded_dim(int nvars, int d) {
    if (d < 0) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d + nvars - 1),
                 static_cast<unsigned long>(nvars - 1));
    return b;
}

HomogPoly HomogPoly::constant(int nvars, const Rational& c) {
    HomogPoly p(nvars, 0);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

HomogPoly HomogPoly::variable(int nvars, int i) {
    HomogPoly p(nvars, 1);
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

HomogPoly HomogPoly::monomial(int nvars, const Exponent& e, const Rational& c) {
    int d = 0;
    for (int x : e) {
        if (x < 0) throw std::invalid_argument("monomial: negative exponent");
        d += x;
    }
    HomogPoly p(nvars, d);
    p.add_term(e, c);
    return p;
}

HomogPoly HomogPoly::linear(const std::vector<Integer>& coeffs) {
    HomogPoly p(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, Rational(coeffs[i]));
    }
    return p;
}

HomogPoly HomogPoly::from_coeffs(int nvars, int degree, const RatVector& coeffs) {
    auto mons = monomials_of_degree(nvars, degree);
    if (coeffs.size() != mons.size())
        throw std::invalid_argument("from_coeffs: size mismatch");
    HomogPoly p(nvars, degree);
    for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], coeffs[i]);
    return p;
}

Rational HomogPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

RatVector HomogPoly::coeff_vector() const {
    auto mons = monomials_of_degree(nvars_, degree_);
    RatVector out(mons.size(), Rational(0));
    for (std::size_t i = 0; i < mons.size(); ++i) out[i] = coeff(mons[i]);
    return out;
}

void HomogPoly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("add_term: exponent length mismatch");
    int d = 0;
    for (int x : e) d += x;
    if (d != degree_) throw std::invalid_argument("add_term: degree mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HomogPoly HomogPoly::operator-() const { return *this * Rational(-1); }

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("poly_add: variable count mismatch");
    if (degree_ != o.degree_)
        throw std::invalid_argument("poly_add: degree mismatch");
    HomogPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const { return *this + (-o); }

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
    if (nvars_ != o.nvars_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("poly_mul: variable count mismatch");
    int nv = is_zero() ? o.nvars_ : nvars_;
    HomogPoly out(nv, degree_ + o.degree_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e(nv);
            for (int i = 0; i < nv; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

HomogPoly HomogPoly::operator*(const Rational& c) const {
    HomogPoly out(nvars_, degree_);
    if (c == 0) return out;
    for (const auto& [e, q] : terms_) out.add_term(e, q * c);
    return out;
}

bool HomogPoly::operator==(const HomogPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

HomogPoly HomogPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    HomogPoly out = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

HomogPoly HomogPoly::derivative(int var) const {
    HomogPoly out(nvars_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

HomogPoly HomogPoly::substitute_linear(const RatMatrix& chart) const {
    if (chart.rows() != static_cast<std::size_t>(nvars_))
        throw std::invalid_argument("substitute_linear: chart row mismatch");
    int nv_new = static_cast<int>(chart.cols());
    HomogPoly out(nv_new, degree_);
    // Image of each old variable as a linear form in the new variables.
    std::vector<HomogPoly> images;
    for (int i = 0; i < nvars_; ++i) {
        HomogPoly li(nv_new, 1);
        for (int j = 0; j < nv_new; ++j) {
            Exponent e(nv_new, 0);
            e[j] = 1;
            li.add_term(e, chart.at(i, j));
        }
        images.push_back(li);
    }
    for (const auto& [e, c] : terms_) {
        HomogPoly term = constant(nv_new, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        out = out.is_zero() ? term : out + term;
    }
    return out;
}

std::vector<std::string> default_var_names(int nvars) {
    static const char* small[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) {
        if (nvars <= 4)
            names.push_back(small[i]);
        else
            names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

std::string HomogPoly::str(const std::vector<std::string>& vars) const {
    if (is_zero()) return "0";
    std::vector<std::string> names = vars.empty() ? default_var_names(nvars_) : vars;
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
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
        bool any_var = false;
        std::ostringstream vs;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) vs << "*";
            vs << names[i];
            if (e[i] > 1) vs << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << vs.str();
        }
    }
    return os.str();
}

HomogPoly poly_add(const HomogPoly& p, const HomogPoly& q) { return p + q; }
HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q) { return p * q; }

}  // namespace arrfree
