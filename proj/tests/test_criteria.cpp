#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrfree/criteria.hpp"

using namespace arrfree;

TEST_CASE("terao_check") {
    SUBCASE("boolean(3) consistent") {
        CriterionReport rep = terao_check(generate_family(Family::Boolean, 3));
        CHECK(rep.verdict);
        CHECK_FALSE(rep.internal_error);
    }
    SUBCASE("braid(3) consistent") {
        CriterionReport rep = terao_check(generate_family(Family::Braid, 3));
        CHECK(rep.verdict);
        CHECK_FALSE(rep.internal_error);
    }
    SUBCASE("generic(3,4) contrapositive") {
        CriterionReport rep = terao_check(generate_family(Family::Generic, 3, 4));
        CHECK(rep.verdict);  // NONFREE with non-split chi is consistent
        CHECK_FALSE(rep.internal_error);
    }
}

TEST_CASE("ziegler_check") {
    SUBCASE("boolean(3), every pivot") {
        Arrangement a = generate_family(Family::Boolean, 3);
        for (std::size_t pivot = 0; pivot < a.size(); ++pivot) {
            CriterionReport rep = ziegler_check(a, pivot);
            CHECK(rep.verdict);
        }
    }
    SUBCASE("braid(3): restriction FREE (0,2)") {
        CriterionReport rep = ziegler_check(generate_family(Family::Braid, 3), 0);
        CHECK(rep.verdict);
        CHECK(rep.conditions[0].detail == "FREE (0,2)");
    }
    SUBCASE("hypothesis violations") {
        CHECK_THROWS_AS(ziegler_check(generate_family(Family::Generic, 3, 4), 0),
                        std::invalid_argument);
        // braid(3) restriction is free with exponents (0,2): no exponent 1
        auto zr = ziegler_restriction(generate_family(Family::Braid, 3), 0);
        (void)zr;
        CHECK_THROWS_AS(
            ziegler_check(generate_family(Family::Boolean, 2), 9),
            std::invalid_argument);
    }
}

TEST_CASE("flats_in_pivot") {
    SUBCASE("boolean(3), pivot x") {
        auto flats = flats_in_pivot(generate_family(Family::Boolean, 3), 0);
        REQUIRE(flats.size() == 3);
        std::multiset<int> dims;
        for (const auto& f : flats) dims.insert(f.dim);
        CHECK(dims == std::multiset<int>{1, 1, 2});
    }
    SUBCASE("braid(3), pivot x1-x2") {
        auto flats = flats_in_pivot(generate_family(Family::Braid, 3), 0);
        CHECK(flats.size() == 2);  // the pivot plane and the center line
    }
    SUBCASE("generic(4,5), pivot 1") {
        Arrangement a = generate_family(Family::Generic, 4, 5);
        auto flats = flats_in_pivot(a, 1);
        CHECK(flats.size() == 11);  // 1 + C(4,1) + C(4,2)
        // brute-force oracle over the lattice
        auto lat = intersection_lattice(a);
        std::size_t count = 0;
        for (const auto& f : lat.flats)
            if (f.dim >= 1 && f.contains_hyperplane(1)) ++count;
        CHECK(flats.size() == count);
    }
}

TEST_CASE("yoshinaga_check") {
    SUBCASE("dimension gate") {
        CHECK_THROWS_AS(yoshinaga_check(generate_family(Family::Braid, 3), 0),
                        std::invalid_argument);
        CHECK_THROWS_AS(yoshinaga_any(generate_family(Family::Generic, 3, 4)),
                        std::invalid_argument);
    }
    SUBCASE("boolean(4), pivot 0") {
        CriterionReport rep = yoshinaga_check(generate_family(Family::Boolean, 4), 0);
        CHECK(rep.verdict);
        CHECK_FALSE(rep.internal_error);
    }
    SUBCASE("generic(4,5): condition (a) fails at every pivot") {
        CriterionReport rep = yoshinaga_any(generate_family(Family::Generic, 4, 5));
        CHECK_FALSE(rep.verdict);
        CHECK_FALSE(rep.internal_error);
        for (const auto& c : rep.conditions) CHECK_FALSE(c.passed);
    }
}
