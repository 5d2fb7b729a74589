#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "arrfree/logder.hpp"

using namespace arrfree;

namespace {

HomogPoly var(int nv, int i) { return HomogPoly::variable(nv, i); }

Derivation component_field(int nv, int i, const HomogPoly& f) {
    std::vector<HomogPoly> c(nv, HomogPoly(nv, f.degree()));
    c[i] = f;
    return Derivation(nv, f.degree(), std::move(c));
}

}  // namespace

TEST_CASE("apply_derivation") {
    Derivation euler = euler_derivation(3);
    HomogPoly m = var(3, 0) * var(3, 1).pow(2);  // x y^2
    CHECK(apply_derivation(euler, m) == m * Rational(3));

    Derivation x_dx = component_field(2, 0, var(2, 0));
    CHECK(apply_derivation(x_dx, var(2, 1)).is_zero());

    // (x^2 d_x + y^2 d_y)(x - y) = x^2 - y^2
    Derivation d(2, 2, {var(2, 0).pow(2), var(2, 1).pow(2)});
    CHECK(apply_derivation(d, var(2, 0) - var(2, 1)) ==
          var(2, 0).pow(2) - var(2, 1).pow(2));
}

TEST_CASE("euler_derivation") {
    CHECK(euler_derivation(1).coeff(0) == var(1, 0));
    Arrangement braid3 = generate_family(Family::Braid, 3);
    for (const auto& f : braid3.forms())
        CHECK(apply_derivation(euler_derivation(3), f.poly()) == f.poly());
    CHECK(is_member(euler_derivation(3), MultiArrangement::simple(braid3)));
}

TEST_CASE("graded_piece") {
    SUBCASE("boolean l=2, d=1") {
        auto gb = graded_piece(
            MultiArrangement::simple(generate_family(Family::Boolean, 2)), 1);
        REQUIRE(gb.dim() == 2);
        std::vector<Derivation> expect = {component_field(2, 0, var(2, 0)),
                                          component_field(2, 1, var(2, 1))};
        CHECK(std::is_permutation(gb.members.begin(), gb.members.end(),
                                  expect.begin(), expect.end()));
    }
    SUBCASE("single form with multiplicity 3") {
        MultiArrangement ma(build_arrangement(1, {{1}}), {3});
        auto gb = graded_piece(ma, 3);
        REQUIRE(gb.dim() == 1);
        CHECK(gb.members[0] == component_field(1, 0, var(1, 0).pow(3)));
        CHECK(graded_piece(ma, 2).dim() == 0);
    }
    SUBCASE("braid l=3, d=1") {
        auto gb = graded_piece(
            MultiArrangement::simple(generate_family(Family::Braid, 3)), 1);
        CHECK(gb.dim() == 4);
    }
    SUBCASE("membership recheck") {
        MultiArrangement ma =
            MultiArrangement::simple(generate_family(Family::Braid, 3));
        for (int d = 0; d <= 3; ++d)
            for (const auto& delta : graded_piece(ma, d).members)
                CHECK(is_member(delta, ma));
    }
}

TEST_CASE("d0_graded_piece") {
    SUBCASE("braid l=3, pivot x1-x2, d=0") {
        auto gb = d0_graded_piece(generate_family(Family::Braid, 3), 0, 0);
        REQUIRE(gb.dim() == 1);
        Derivation expect(3, 0,
                          {HomogPoly::constant(3, 1), HomogPoly::constant(3, 1),
                           HomogPoly::constant(3, 1)});
        CHECK(gb.members[0] == expect);
    }
    SUBCASE("boolean l=2, pivot x, d=1") {
        auto gb = d0_graded_piece(generate_family(Family::Boolean, 2), 0, 1);
        REQUIRE(gb.dim() == 1);
        CHECK(gb.members[0] == component_field(2, 1, var(2, 1)));
    }
    SUBCASE("euler decomposition dims") {
        Arrangement a = generate_family(Family::Braid, 3);
        MultiArrangement ma = MultiArrangement::simple(a);
        for (int d = 0; d <= 4; ++d)
            CHECK(Integer(static_cast<long>(graded_piece(ma, d).dim())) ==
                  Integer(static_cast<long>(d0_graded_piece(a, 0, d).dim())) +
                      graded_dim(3, d - 1));
    }
}

TEST_CASE("minimal_generators") {
    SUBCASE("boolean l=3") {
        auto table = minimal_generators(
            MultiArrangement::simple(generate_family(Family::Boolean, 3)), 3);
        CHECK(table.generator_count() == 3);
        CHECK(table.generator_degrees() == std::vector<int>{1, 1, 1});
    }
    SUBCASE("braid l=3") {
        auto table = minimal_generators(
            MultiArrangement::simple(generate_family(Family::Braid, 3)), 3);
        CHECK(table.generator_degrees() == std::vector<int>{0, 1, 2});
    }
    SUBCASE("empty arrangement l=2") {
        auto table =
            minimal_generators(MultiArrangement::simple(Arrangement(2, {})), 1);
        CHECK(table.generator_degrees() == std::vector<int>{0, 0});
    }
}

TEST_CASE("saito matrix and check") {
    SUBCASE("boolean diagonal basis") {
        MultiArrangement ma =
            MultiArrangement::simple(generate_family(Family::Boolean, 3));
        std::vector<Derivation> basis;
        for (int i = 0; i < 3; ++i)
            basis.push_back(component_field(3, i, var(3, i)));
        auto m = saito_matrix(basis);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(m[i][j] == (i == j ? var(3, i) : HomogPoly(3, 1)));
        SaitoResult res = saito_check(basis, ma);
        CHECK(res.basis);
        CHECK(res.constant == 1);
    }
    SUBCASE("braid vandermonde triple") {
        MultiArrangement ma =
            MultiArrangement::simple(generate_family(Family::Braid, 3));
        Derivation ones(3, 0,
                        {HomogPoly::constant(3, 1), HomogPoly::constant(3, 1),
                         HomogPoly::constant(3, 1)});
        Derivation squares(3, 2,
                           {var(3, 0).pow(2), var(3, 1).pow(2), var(3, 2).pow(2)});
        SaitoResult res = saito_check({ones, euler_derivation(3), squares}, ma);
        CHECK(res.basis);
        CHECK((res.constant == 1 || res.constant == -1));
    }
    SUBCASE("dependent rows fail") {
        MultiArrangement ma =
            MultiArrangement::simple(generate_family(Family::Boolean, 2));
        Derivation xdx = component_field(2, 0, var(2, 0));
        SaitoResult res = saito_check({xdx, xdx * Rational(5)}, ma);
        CHECK_FALSE(res.basis);
        CHECK(res.constant == 0);
    }
    SUBCASE("non-member is rejected") {
        MultiArrangement ma =
            MultiArrangement::simple(generate_family(Family::Boolean, 2));
        Derivation bad = component_field(2, 0, var(2, 1));  // y d/dx
        CHECK_THROWS_AS(saito_check({bad, bad}, ma), std::invalid_argument);
    }
}

TEST_CASE("freeness") {
    SUBCASE("boolean(4)") {
        auto cert = freeness(generate_family(Family::Boolean, 4));
        REQUIRE(cert.free);
        CHECK(cert.exponents == std::vector<int>{1, 1, 1, 1});
    }
    SUBCASE("generic(3,4) nonsplit charpoly") {
        auto cert = freeness(generate_family(Family::Generic, 3, 4));
        REQUIRE_FALSE(cert.free);
        CHECK(cert.reason == NonFreeReason::CharPolyNonSplit);
    }
    SUBCASE("braid(4)") {
        auto cert = freeness(generate_family(Family::Braid, 4));
        REQUIRE(cert.free);
        CHECK(cert.exponents == std::vector<int>{0, 1, 2, 3});
        CHECK(poly_matrix_det(saito_matrix(cert.basis)) ==
              MultiArrangement::simple(generate_family(Family::Braid, 4))
                      .defining_poly() *
                  cert.saito_constant);
    }
    SUBCASE("boolean(3) with multiplicity (2,1,1)") {
        auto cert =
            freeness(MultiArrangement(generate_family(Family::Boolean, 3), {2, 1, 1}));
        REQUIRE(cert.free);
        CHECK(cert.exponents == std::vector<int>{1, 1, 2});
    }
    SUBCASE("braid(3) ziegler restriction") {
        auto zr = ziegler_restriction(generate_family(Family::Braid, 3), 1);
        auto cert = freeness(zr.restricted);
        REQUIRE(cert.free);
        CHECK(cert.exponents == std::vector<int>{0, 2});
    }
    SUBCASE("degree conservation") {
        auto cert = freeness(generate_family(Family::Braid, 4));
        int sum = 0;
        for (int e : cert.exponents) sum += e;
        CHECK(sum == 6);
    }
}

TEST_CASE("restrict_derivation") {
    Arrangement boolean2 = generate_family(Family::Boolean, 2);
    auto zr = ziegler_restriction(boolean2, 0);
    SUBCASE("euler field is not tangent") {
        CHECK_THROWS_AS(restrict_derivation(euler_derivation(2), zr.chart),
                        std::invalid_argument);
    }
    SUBCASE("y d/dy restricts to t d/dt") {
        Derivation ydy = component_field(2, 1, var(2, 1));
        Derivation r = restrict_derivation(ydy, zr.chart);
        CHECK(r.nvars() == 1);
        CHECK(r == component_field(1, 0, var(1, 0)));
    }
    SUBCASE("zero restricts to zero") {
        CHECK(restrict_derivation(Derivation::zero(2, 2), zr.chart).is_zero());
    }
}

TEST_CASE("free hilbert function for braid(3)") {
    MultiArrangement ma =
        MultiArrangement::simple(generate_family(Family::Braid, 3));
    // exponents (0,1,2): dim D_d = sum_i binom(d - e_i + 2, 2)
    auto binom2 = [](int k) { return k < 0 ? 0 : (k + 2) * (k + 1) / 2; };
    for (int d = 0; d <= 3; ++d)
        CHECK(static_cast<int>(graded_piece(ma, d).dim()) ==
              binom2(d) + binom2(d - 1) + binom2(d - 2));
}
