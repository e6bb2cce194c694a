#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "coinv/glaction.hpp"
#include "coinv/polynomial.hpp"
#include "coinv/quotient.hpp"
#include "coinv/report.hpp"
#include "coinv/shapes.hpp"
#include "coinv/tableaux.hpp"

namespace coinv {

using Json = nlohmann::ordered_json;

/// "1,2,1" or "1,2,1@3" (parts start at index 3; default 1). An empty list
/// ("" or "@k") is the empty composition. Throws InvalidInput.
Composition parse_composition(const std::string& text);
/// The offset written in such a string (1 when absent), before zeros are trimmed.
int composition_offset(const std::string& text);
/// "3,1,1" in any order; zeros dropped. Throws InvalidInput.
Partition parse_partition(const std::string& text);
/// "lo:hi" with lo <= hi. Throws InvalidInput.
std::pair<int, int> parse_window(const std::string& text);

Json to_json(const Composition& c);
Json to_json(const Partition& p);
/// Terms in the global term order: [{"exp": [..], "num": "..", "den": ".."}, ..].
Json to_json(const Polynomial& f);
Json to_json(const IntPolynomial& f);
Json to_json(const Tableau& t);
Json to_json(const WeightFamily& wf);
Json to_json(const Report& r, bool timing = true);

Composition composition_from_json(const Json& j);
/// Accepts the term-list form; "num"/"den" may be strings or integers, "den" defaults to 1.
Polynomial polynomial_from_json(const Json& j, int n);
/// A WeightFamily from {"components": [{"nu": .., "element": ..}, ..]}; the
/// window and mu are supplied by the caller.
WeightFamily family_from_json(const Json& j, int n, int lo, int hi, const std::optional<Composition>& mu);

/// Plain-text rendering of a report: one line per check, failures indented
/// below it, then the tables.
std::string report_text(const Report& r, bool timing = true);

}  // namespace coinv
