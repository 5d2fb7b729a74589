// arrfree: invariants and freeness certificates for central hyperplane
// arrangements, from JSON arrangement files.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "arrfree/criteria.hpp"
#include "arrfree/io.hpp"
#include "arrfree/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

using namespace arrfree;

std::string int_list(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

void print_report(const CriterionReport& rep) {
    std::cout << rep.criterion << ": "
              << (rep.verdict ? "PASS" : "FAIL") << "\n";
    for (const auto& c : rep.conditions)
        std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    std::cout << "  " << rep.summary << "\n";
}

int cmd_lattice(const std::string& file) {
    MultiArrangement ma = load_arrangement(file);
    IntersectionLattice lat = intersection_lattice(ma.arrangement);
    std::cout << "dim mu    flat\n";
    for (const auto& f : lat.flats) {
        std::cout << f.dim << "   " << f.mobius << "    {";
        for (std::size_t i = 0; i < f.indices.size(); ++i)
            std::cout << (i ? "," : "") << f.indices[i];
        std::cout << "}\n";
    }
    std::cout << lat.flats.size() << " flats\n";
    return kExitOk;
}

int cmd_charpoly(const std::string& file) {
    MultiArrangement ma = load_arrangement(file);
    CharPoly chi = char_poly(ma.arrangement);
    std::cout << "chi(t) = " << chi.str() << "\n";
    std::cout << "factored: " << chi.factored_str() << "\n";
    auto roots = chi.nonneg_integer_roots();
    if (roots) {
        std::cout << "splits over Z>=0 with roots " << int_list(*roots) << "\n";
    } else {
        std::cout << "does not split over Z>=0\n";
    }
    return kExitOk;
}

int cmd_free(const std::string& file, int dmax, bool as_json) {
    MultiArrangement ma = load_arrangement(file);
    FreenessCertificate cert = freeness(ma, dmax);
    if (as_json) {
        std::cout << certificate_to_json(ma, cert).dump(2) << "\n";
        return kExitOk;
    }
    if (cert.free) {
        std::cout << "FREE with exponents " << int_list(cert.exponents) << "\n";
        std::cout << "saito constant: " << to_string(cert.saito_constant) << "\n";
        std::cout << "basis:\n";
        for (const auto& d : cert.basis) std::cout << "  " << d.str() << "\n";
    } else {
        const char* reason =
            cert.reason == NonFreeReason::CharPolyNonSplit ? "charpoly-nonsplit"
            : cert.reason == NonFreeReason::GeneratorCount ? "generator-count"
                                                           : "saito-degenerate";
        std::cout << "NONFREE (" << reason << ")\n";
        std::cout << "witness: " << cert.witness << "\n";
        if (cert.table_valid) {
            std::cout << "degree  dim  new-generators\n";
            for (const auto& row : cert.table.rows)
                std::cout << row.degree << "       " << row.dim << "    "
                          << row.new_gens << "\n";
        }
    }
    return kExitOk;
}

int cmd_ziegler(const std::string& file, std::size_t pivot) {
    MultiArrangement ma = load_arrangement(file);
    if (pivot >= ma.arrangement.size())
        throw std::invalid_argument("pivot out of range");
    ZieglerRestriction zr = ziegler_restriction(ma.arrangement, pivot);
    std::cout << "restriction to hyperplane " << pivot << ": "
              << zr.restricted.arrangement.size() << " hyperplanes, multiplicity (";
    for (std::size_t i = 0; i < zr.restricted.multiplicity.size(); ++i)
        std::cout << (i ? "," : "") << zr.restricted.multiplicity[i];
    std::cout << "), |m| = " << zr.restricted.total() << "\n";

    FreenessCertificate rcert = freeness(zr.restricted);
    std::cout << "restriction certificate: "
              << (rcert.free ? "FREE " + int_list(rcert.exponents)
                             : "NONFREE: " + rcert.witness)
              << "\n";

    FreenessCertificate cert = freeness(ma.arrangement);
    if (cert.free &&
        std::find(cert.exponents.begin(), cert.exponents.end(), 1) !=
            cert.exponents.end()) {
        CriterionReport rep = ziegler_check(ma.arrangement, pivot);
        print_report(rep);
        if (rep.internal_error) return kExitInternal;
    } else {
        std::cout << "(restriction theorem hypothesis not met: "
                  << (cert.free ? "1 is not an exponent" : "arrangement not free")
                  << ")\n";
    }
    return kExitOk;
}

int cmd_yoshinaga(const std::string& file, int pivot, bool any) {
    MultiArrangement ma = load_arrangement(file);
    if (!ma.is_simple())
        throw std::invalid_argument("criterion applies to simple arrangements");
    CriterionReport rep = any ? yoshinaga_any(ma.arrangement)
                              : yoshinaga_check(ma.arrangement,
                                                static_cast<std::size_t>(pivot));
    print_report(rep);
    return rep.internal_error ? kExitInternal : kExitOk;
}

int cmd_gen(const std::string& family, std::vector<int> params,
            std::uint64_t seed, const std::string& out_path) {
    Family fam;
    if (family == "boolean")
        fam = Family::Boolean;
    else if (family == "braid")
        fam = Family::Braid;
    else if (family == "generic")
        fam = Family::Generic;
    else
        throw std::invalid_argument("unknown family: " + family);
    if (params.empty()) throw std::invalid_argument("family needs a dimension");
    int dim = params[0];
    int count = params.size() > 1 ? params[1] : 0;
    Arrangement a = generate_family(fam, dim, count, seed);
    json j = arrangement_to_json(MultiArrangement::simple(a));
    if (fam == Family::Generic) j["seed"] = seed;
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << j.dump(2) << "\n";
        std::cout << "wrote " << a.size() << " hyperplanes to " << out_path
                  << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite) {
    std::vector<std::string> names =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    std::size_t failures = 0, total = 0;
    for (const auto& name : names) {
        std::cout << "== suite " << name << " ==\n";
        for (const auto& r : run_suite(name)) {
            ++total;
            if (!r.passed) ++failures;
            std::cout << "  [" << (r.passed ? "pass" : "FAIL") << "] " << r.name
                      << (r.detail.empty() ? "" : "  (" + r.detail + ")")
                      << "\n";
        }
    }
    std::cout << total - failures << "/" << total << " checks passed\n";
    return failures == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants and freeness certificates for central hyperplane arrangements"};
    app.require_subcommand(1);

    std::string file, out_path, family, suite = "all";
    int dmax = -1;
    int pivot = -1;
    bool as_json = false, any = false;
    std::uint64_t seed = 0;
    std::vector<int> params;

    auto* lattice = app.add_subcommand("lattice", "intersection lattice with Mobius values");
    lattice->add_option("file", file)->required();

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    charpoly->add_option("file", file)->required();

    auto* fre = app.add_subcommand("free", "freeness certificate");
    fre->add_option("file", file)->required();
    fre->add_option("--dmax", dmax, "generator search horizon override");
    fre->add_flag("--json", as_json, "emit machine-readable certificate");

    auto* ziegler = app.add_subcommand("ziegler", "restriction to a pivot hyperplane");
    ziegler->add_option("file", file)->required();
    ziegler->add_option("--pivot", pivot)->required();

    auto* yoshinaga = app.add_subcommand("yoshinaga", "hyperplane-section freeness criterion");
    yoshinaga->add_option("file", file)->required();
    yoshinaga->add_option("--pivot", pivot);
    yoshinaga->add_flag("--any", any, "try every pivot");

    auto* gen = app.add_subcommand("gen", "generate a named arrangement family");
    gen->add_option("family", family, "boolean | braid | generic")->required();
    gen->add_option("params", params, "dimension [count]");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run the built-in verification suites");
    verify->add_option("--suite", suite);

    CLI11_PARSE(app, argc, argv);

    try {
        if (lattice->parsed()) return cmd_lattice(file);
        if (charpoly->parsed()) return cmd_charpoly(file);
        if (fre->parsed()) return cmd_free(file, dmax, as_json);
        if (ziegler->parsed())
            return cmd_ziegler(file, static_cast<std::size_t>(pivot));
        if (yoshinaga->parsed()) {
            if (!any && pivot < 0)
                throw std::invalid_argument("need --pivot or --any");
            return cmd_yoshinaga(file, pivot, any);
        }
        if (gen->parsed()) return cmd_gen(family, params, seed, out_path);
        if (verify->parsed()) return cmd_verify(suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const arrfree::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
