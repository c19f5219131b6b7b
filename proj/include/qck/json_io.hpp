// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>
#include <string>

#include "qck/presentation.hpp"
#include "qck/qgraph.hpp"
#include "qck/qspace.hpp"
#include "qck/ueb.hpp"

namespace qck {

// Reads and parses a JSON file ("-" reads standard input); throws IOError on
// missing/garbled input.
nlohmann::json load_json_file(const std::string& path);

// {"blocks":[{"dim":n,"q":[...]}]}
QuantumSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const QuantumSpace& s);

// {"basis":"adapted"|"standard","terms":[{"a":1,"i":1,"j":2,"re":..,"im":..}]}
// Indices are 1-based on the wire, 0-based internally.
AlgebraElement algebra_vector_from_json(const QuantumSpace& s,
                                        const nlohmann::json& j);
nlohmann::json algebra_vector_to_json(const AlgebraElement& x);

// {"space":{...},"adjacency":{"basis":"adapted",
//   "coeffs":[{"a":..,"i":..,"j":..,"b":..,"r":..,"s":..,"re":..,"im":..}]}}
// A coefficient entry says A(f^{(a)}_{ij}) picks up (re,im) f^{(b)}_{rs}.
QuantumGraph qgraph_from_json(const nlohmann::json& j);
nlohmann::json qgraph_to_json(const QuantumGraph& g);

// {"vertices":["v","w"],"edges":[["v","w"],...]}
ClassicalGraph classical_from_json(const nlohmann::json& j);
nlohmann::json classical_to_json(const ClassicalGraph& e);

// {"n":N,"matrices":[[[re,im],...],...]} with row-major n x n entries.
UnitaryErrorBasis ueb_from_json(const nlohmann::json& j);
nlohmann::json ueb_to_json(const UnitaryErrorBasis& w);

nlohmann::json presentation_to_json(const Presentation& p);

// Reports serialize as arrays of {"relation":idx,"residual":r,"pass":bool};
// named reports additionally carry the check name.
nlohmann::json report_to_json(const CheckReport& r, double tol);
nlohmann::json report_to_json(const NamedReport& r, double tol);

}  // namespace qck
