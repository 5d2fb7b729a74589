#ifndef ARRFREE_IO_HPP
#define ARRFREE_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "arrfree/arrangement.hpp"
#include "arrfree/logder.hpp"

namespace arrfree {

using json = nlohmann::json;

// File schema: {"dim": int, "hyperplanes": [[int,...],...],
//               "multiplicity": [int,...]?, "labels": [string,...]?}
MultiArrangement parse_arrangement(const json& j);
MultiArrangement load_arrangement(const std::string& path);
json arrangement_to_json(const MultiArrangement& ma);

json poly_to_json(const HomogPoly& p);
HomogPoly poly_from_json(const json& j, int nvars, int degree);

json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const json& j);

// Machine-readable certificate, carrying the input so it re-verifies alone.
json certificate_to_json(const MultiArrangement& ma,
                         const FreenessCertificate& cert);

// Re-check an emitted certificate from scratch: membership and Saito
// determinant for FREE, characteristic-polynomial state for the charpoly
// witness. Returns false on any mismatch.
bool verify_certificate(const json& j);

}  // namespace arrfree

#endif
