#pragma once

#include <string>

#include "json.hpp"
#include "pizza/core/pizza.hpp"
#include "pizza/germ/germ_spec.hpp"
#include "pizza/oracle/oracle.hpp"
#include "pizza/realize/realization.hpp"

namespace pizza {

using Json = nlohmann::ordered_json;

// Invariant files use exact-string rationals ("3/2", "inf"); signs are "+", "-" or "0".
// Readers throw ParseError naming the offending field.

Json pizza_to_json(const AbstractPizza& h);
AbstractPizza pizza_from_json(const Json& j);

// {"dir":"+x","series":[["1","3/2"],...]}; coefficients must be rational.
Json arc_to_json(const Arc& a);
Arc arc_from_json(const Json& j);

// A single piece from the +x axis to itself is written as {"kind":"polynomial","expr":...}.
Json germ_to_json(const GermSpec& g);
GermSpec germ_from_json(const Json& j);

// Germ JSON plus a "provenance" entry per piece.
Json realized_to_json(const RealizedGerm& r);

Json violations_to_json(const std::vector<Violation>& v);
Json witness_to_json(const std::optional<EquivalenceWitness>& w);

// Floats appear only here; infinite values are written as "inf".
Json fit_to_json(const FitReport& f);
Json crosscheck_to_json(const CrosscheckReport& r);

// Throw IOError when the file cannot be read or written, ParseError for malformed JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pizza
