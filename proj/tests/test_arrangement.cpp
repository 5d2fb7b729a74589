#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "arrfree/arrangement.hpp"

using namespace arrfree;

namespace {

Arrangement generic34() {
    return build_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

}  // namespace

TEST_CASE("build_arrangement validation") {
    Arrangement boolean2 = build_arrangement(2, {{1, 0}, {0, 1}});
    CHECK(boolean2.size() == 2);
    CHECK_THROWS_AS(build_arrangement(2, {{1, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_arrangement(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_arrangement(2, {{1, 0, 0}}), std::invalid_argument);
    Arrangement braid3 =
        build_arrangement(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
    CHECK(braid3.size() == 3);
    // canonical form: primitive, leading entry positive
    CHECK(build_arrangement(2, {{-2, 4}}).form(0).coeffs ==
          std::vector<Integer>{1, -2});
}

TEST_CASE("intersection lattice") {
    SUBCASE("boolean l=2") {
        auto lat = intersection_lattice(generate_family(Family::Boolean, 2));
        CHECK(lat.flats.size() == 4);
    }
    SUBCASE("braid l=3") {
        auto lat = intersection_lattice(generate_family(Family::Braid, 3));
        REQUIRE(lat.flats.size() == 5);
        std::vector<long long> mu;
        for (const auto& f : lat.flats) mu.push_back(f.mobius);
        CHECK(mu == std::vector<long long>{1, -1, -1, -1, 2});
        // center line is the top flat, closed under all three hyperplanes
        CHECK(lat.flats.back().dim == 1);
        CHECK(lat.flats.back().indices == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("generic {x,y,z,x+y+z}") {
        auto lat = intersection_lattice(generic34());
        REQUIRE(lat.flats.size() == 12);  // V, 4 planes, 6 lines, origin
        CHECK(lat.flats.back().dim == 0);
        CHECK(lat.flats.back().mobius == -3);
    }
    SUBCASE("mobius identity") {
        auto lat = intersection_lattice(generate_family(Family::Braid, 4));
        for (std::size_t i = 1; i < lat.flats.size(); ++i) {
            long long s = 0;
            for (const auto& y : lat.flats)
                if (flat_leq(y, lat.flats[i])) s += y.mobius;
            CHECK(s == 0);
        }
    }
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(Arrangement(3, {})) == CharPoly{{0, 0, 0, 1}});
    CHECK(char_poly(generate_family(Family::Braid, 3)) ==
          CharPoly{{0, 2, -3, 1}});
    CHECK(char_poly(generic34()) == CharPoly{{-3, 6, -4, 1}});
}

TEST_CASE("whitney oracle") {
    CHECK(char_poly_whitney(generate_family(Family::Boolean, 2)) ==
          CharPoly{{1, -2, 1}});
    CHECK(char_poly_whitney(generate_family(Family::Braid, 3)) ==
          CharPoly{{0, 2, -3, 1}});
    CHECK(char_poly_whitney(Arrangement(1, {})) == CharPoly{{0, 1}});
    CHECK_THROWS_AS(char_poly_whitney(generate_family(Family::Braid, 6)),
                    std::invalid_argument);
    for (const auto& a :
         {generate_family(Family::Boolean, 4), generate_family(Family::Braid, 4),
          generate_family(Family::Generic, 4, 5)})
        CHECK(char_poly(a) == char_poly_whitney(a));
}

TEST_CASE("charpoly roots and divisibility") {
    auto roots = char_poly(generate_family(Family::Braid, 3)).nonneg_integer_roots();
    REQUIRE(roots);
    CHECK(*roots == std::vector<int>{0, 1, 2});
    CHECK_FALSE(char_poly(generic34()).nonneg_integer_roots());
    CHECK(char_poly(generic34()).eval(1) == 0);
}

TEST_CASE("localization") {
    Arrangement braid3 = generate_family(Family::Braid, 3);
    auto lat = intersection_lattice(braid3);
    CHECK(localization(braid3, lat.bottom()).size() == 0);
    // center line: all hyperplanes contain it
    CHECK(localization(braid3, lat.flats.back()).size() == 3);
    for (const auto& f : lat.flats) {
        if (f.dim != 2) continue;  // single hyperplane
        CHECK(localization(braid3, f).size() == 1);
    }
}

TEST_CASE("localization lattice is the lower interval") {
    Arrangement a = generate_family(Family::Generic, 4, 5);
    auto lat = intersection_lattice(a);
    for (const auto& x : lat.flats) {
        auto loc_lat = intersection_lattice(localization(a, x));
        std::size_t interval = 0;
        std::multiset<long long> interval_mu, loc_mu;
        for (const auto& y : lat.flats)
            if (flat_leq(y, x)) {
                ++interval;
                interval_mu.insert(y.mobius);
            }
        for (const auto& y : loc_lat.flats) loc_mu.insert(y.mobius);
        CHECK(loc_lat.flats.size() == interval);
        CHECK(loc_mu == interval_mu);
    }
}

TEST_CASE("ziegler restriction") {
    SUBCASE("boolean l=3, pivot x") {
        auto zr = ziegler_restriction(generate_family(Family::Boolean, 3), 0);
        CHECK(zr.restricted.arrangement.size() == 2);
        CHECK(zr.restricted.multiplicity == Multiplicity{1, 1});
    }
    SUBCASE("braid l=3, pivot x1-x2") {
        auto zr = ziegler_restriction(generate_family(Family::Braid, 3), 0);
        CHECK(zr.restricted.arrangement.size() == 1);
        CHECK(zr.restricted.multiplicity == Multiplicity{2});
    }
    SUBCASE("generic in K4") {
        Arrangement a = build_arrangement(
            4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                {1, 1, 1, 1}});
        auto zr = ziegler_restriction(a, 0);
        CHECK(zr.restricted.arrangement.size() == 4);
        CHECK(zr.restricted.multiplicity == Multiplicity{1, 1, 1, 1});
    }
    SUBCASE("count conservation") {
        for (const auto& a :
             {generate_family(Family::Braid, 4), generate_family(Family::Generic, 3, 4)})
            for (std::size_t pivot = 0; pivot < a.size(); ++pivot)
                CHECK(ziegler_restriction(a, pivot).restricted.total() ==
                      static_cast<int>(a.size()) - 1);
    }
    CHECK_THROWS_AS(ziegler_restriction(generate_family(Family::Boolean, 2), 5),
                    std::invalid_argument);
}

TEST_CASE("generate_family") {
    CHECK(generate_family(Family::Boolean, 3).size() == 3);
    CHECK(generate_family(Family::Braid, 4).size() == 6);
    Arrangement g = generate_family(Family::Generic, 3, 4, 17);
    CHECK(g.size() == 4);
    // every triple meets only at the origin
    auto lat = intersection_lattice(g);
    CHECK(lat.flats.size() == 12);
    // deterministic for a fixed seed
    CHECK(generate_family(Family::Generic, 3, 4, 17).forms() == g.forms());

    CHECK(intersection_lattice(generate_family(Family::Boolean, 4)).flats.size() ==
          16);
    CHECK(intersection_lattice(generate_family(Family::Braid, 4)).flats.size() ==
          15);  // Bell(4)
}
