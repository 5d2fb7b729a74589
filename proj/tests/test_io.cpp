#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrfree/io.hpp"

using namespace arrfree;

TEST_CASE("arrangement file parsing") {
    json j = {{"dim", 2}, {"hyperplanes", {{1, 0}, {0, 1}}}};
    MultiArrangement ma = parse_arrangement(j);
    CHECK(ma.arrangement.dim() == 2);
    CHECK(ma.is_simple());

    j["multiplicity"] = {2, 1};
    ma = parse_arrangement(j);
    CHECK(ma.total() == 3);

    CHECK_THROWS_AS(parse_arrangement(json{{"dim", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_arrangement(json{{"dim", 2}, {"hyperplanes", {{1, 0}, {2, 0}}}}),
        std::invalid_argument);

    // round trip
    json back = arrangement_to_json(ma);
    MultiArrangement again = parse_arrangement(back);
    CHECK(again.arrangement.forms() == ma.arrangement.forms());
    CHECK(again.multiplicity == ma.multiplicity);
}

TEST_CASE("certificate round trip and re-verification") {
    SUBCASE("FREE multiarrangement") {
        MultiArrangement ma(generate_family(Family::Boolean, 3), {2, 1, 1});
        FreenessCertificate cert = freeness(ma);
        REQUIRE(cert.free);
        json j = certificate_to_json(ma, cert);
        CHECK(j["verdict"] == "FREE");
        json parsed = json::parse(j.dump());
        CHECK(verify_certificate(parsed));
    }
    SUBCASE("NONFREE charpoly witness") {
        MultiArrangement ma =
            MultiArrangement::simple(generate_family(Family::Generic, 3, 4));
        json j = certificate_to_json(ma, freeness(ma));
        CHECK(j["reason"] == "charpoly-nonsplit");
        CHECK(verify_certificate(json::parse(j.dump())));
    }
    SUBCASE("tampered certificate fails") {
        MultiArrangement ma =
            MultiArrangement::simple(generate_family(Family::Boolean, 3));
        json j = certificate_to_json(ma, freeness(ma));
        j["saito_constant"] = "7";
        CHECK_FALSE(verify_certificate(j));
    }
}

TEST_CASE("certificates are deterministic") {
    MultiArrangement a =
        MultiArrangement::simple(generate_family(Family::Braid, 3));
    MultiArrangement b = MultiArrangement::simple(
        build_arrangement(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}));
    CHECK(certificate_to_json(a, freeness(a)).dump() ==
          certificate_to_json(b, freeness(b)).dump());
}
