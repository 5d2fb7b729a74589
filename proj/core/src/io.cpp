#include "arrfree/io.hpp"

#include <fstream>

namespace arrfree {

MultiArrangement parse_arrangement(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("hyperplanes"))
        throw std::invalid_argument("arrangement file needs dim and hyperplanes");
    int dim = j.at("dim").get<int>();
    std::vector<std::vector<Integer>> forms;
    for (const auto& row : j.at("hyperplanes")) {
        std::vector<Integer> f;
        for (const auto& v : row) f.emplace_back(v.get<long>());
        forms.push_back(std::move(f));
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
    Arrangement a(dim, forms, std::move(labels));
    Multiplicity m(a.size(), 1);
    if (j.contains("multiplicity"))
        m = j.at("multiplicity").get<std::vector<int>>();
    return MultiArrangement(std::move(a), std::move(m));
}

MultiArrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return parse_arrangement(j);
}

json arrangement_to_json(const MultiArrangement& ma) {
    json j;
    j["dim"] = ma.arrangement.dim();
    json hs = json::array();
    for (const auto& f : ma.arrangement.forms()) {
        json row = json::array();
        for (const auto& c : f.coeffs) row.push_back(c.get_si());
        hs.push_back(row);
    }
    j["hyperplanes"] = hs;
    if (!ma.is_simple()) j["multiplicity"] = ma.multiplicity;
    if (!ma.arrangement.labels().empty()) j["labels"] = ma.arrangement.labels();
    return j;
}

json poly_to_json(const HomogPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exp"] = e;
        t["coeff"] = to_string(c);
        terms.push_back(t);
    }
    return terms;
}

HomogPoly poly_from_json(const json& j, int nvars, int degree) {
    HomogPoly p(nvars, degree);
    for (const auto& t : j) {
        Exponent e = t.at("exp").get<Exponent>();
        Rational c(t.at("coeff").get<std::string>());
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

json derivation_to_json(const Derivation& d) {
    json j;
    j["nvars"] = d.nvars();
    j["degree"] = d.degree();
    json coeffs = json::array();
    for (const auto& f : d.coeffs()) coeffs.push_back(poly_to_json(f));
    j["coeffs"] = coeffs;
    return j;
}

Derivation derivation_from_json(const json& j) {
    int nvars = j.at("nvars").get<int>();
    int degree = j.at("degree").get<int>();
    std::vector<HomogPoly> coeffs;
    for (const auto& f : j.at("coeffs"))
        coeffs.push_back(poly_from_json(f, nvars, degree));
    return Derivation(nvars, degree, std::move(coeffs));
}

namespace {

const char* reason_name(NonFreeReason r) {
    switch (r) {
        case NonFreeReason::CharPolyNonSplit: return "charpoly-nonsplit";
        case NonFreeReason::GeneratorCount: return "generator-count";
        case NonFreeReason::SaitoDegenerate: return "saito-degenerate";
    }
    return "unknown";
}

}  // namespace

json certificate_to_json(const MultiArrangement& ma,
                         const FreenessCertificate& cert) {
    json j;
    j["arrangement"] = arrangement_to_json(ma);
    j["verdict"] = cert.free ? "FREE" : "NONFREE";
    if (cert.char_poly_valid) {
        json coeffs = json::array();
        for (const auto& c : cert.char_poly.coeffs) coeffs.push_back(to_string(c));
        j["charpoly"] = coeffs;
        j["charpoly_factored"] = cert.char_poly.factored_str();
    }
    if (cert.free) {
        j["exponents"] = cert.exponents;
        j["saito_constant"] = to_string(cert.saito_constant);
        json basis = json::array();
        for (const auto& d : cert.basis) basis.push_back(derivation_to_json(d));
        j["basis"] = basis;
    } else {
        j["reason"] = reason_name(cert.reason);
        j["witness"] = cert.witness;
        if (cert.table_valid) {
            json table = json::array();
            for (const auto& row : cert.table.rows) {
                json r;
                r["degree"] = row.degree;
                r["dim"] = row.dim;
                r["new_generators"] = row.new_gens;
                table.push_back(r);
            }
            j["generator_table"] = table;
        }
    }
    return j;
}

bool verify_certificate(const json& j) {
    MultiArrangement ma = parse_arrangement(j.at("arrangement"));
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "FREE") {
        std::vector<Derivation> basis;
        for (const auto& d : j.at("basis"))
            basis.push_back(derivation_from_json(d));
        SaitoResult res = saito_check(basis, ma);
        if (!res.basis) return false;
        Rational c(j.at("saito_constant").get<std::string>());
        c.canonicalize();
        if (res.constant != c) return false;
        std::vector<int> exps = j.at("exponents").get<std::vector<int>>();
        std::vector<int> degs;
        for (const auto& b : basis) degs.push_back(b.degree());
        std::sort(degs.begin(), degs.end());
        if (degs != exps) return false;
        if (ma.is_simple()) {
            auto roots = char_poly(ma.arrangement).nonneg_integer_roots();
            if (!roots || *roots != exps) return false;
        }
        return true;
    }
    if (verdict == "NONFREE") {
        if (j.at("reason").get<std::string>() == "charpoly-nonsplit")
            return !char_poly(ma.arrangement).nonneg_integer_roots().has_value();
        // Re-run the decision procedure for the structural witnesses.
        return !freeness(ma).free;
    }
    return false;
}

}  // namespace arrfree
