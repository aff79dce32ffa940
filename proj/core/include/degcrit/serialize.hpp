#pragma once

#include "degcrit/criterion.hpp"
#include "degcrit/filtration.hpp"
#include "degcrit/surface.hpp"

#include <string>

namespace degcrit {

// JSON document for an instance, in the same format parse_instance reads
// (exact integers; deterministic key order). parse_instance(instance_to_json(i))
// reproduces i.
std::string instance_to_json(const SurfaceInstance& inst);

// Structured report document mirroring CriterionReport field-for-field.
// Exact values are rendered as {"exact": "a + b*sqrt(m)", components, and a
// display-only 12-digit decimal}. Deterministic: identical reports render to
// byte-identical text.
std::string report_to_json(const CriterionReport& report);

// Inverse of report_to_json; throws SyntaxError on malformed documents.
// report_from_json(report_to_json(r)) == r.
CriterionReport report_from_json(const std::string& json_text);

// Input for the adapted-basis command: two chains over one ambient space.
struct FiltrationPair {
  Filtration a;
  Filtration b;
};

// Document format: {"ambient_dim": d, "chain_a": [[vec, ...], ...],
// "chain_b": ...} where each vec is an array of "num/den" strings (plain
// integers allowed). Throws SyntaxError / MalformedFiltrationError.
FiltrationPair parse_filtration_document(const std::string& json_text);

}  // namespace degcrit
