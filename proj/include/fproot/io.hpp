#pragma once

// JSON and CSV formats for matrices, quivers, algebras, modules and reports.
//
// Rationals are written as "p/q" strings. Paths in relations are lists of
// arrow labels in composition order: ["beta", "alpha"] is alpha followed by
// beta.

#include "fproot/fpcore.hpp"
#include "fproot/repmod.hpp"
#include "fproot/spectral.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace fproot {

inline constexpr const char* version = "0.1.0";

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending entry.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

/// Square array of arrays; entries are numbers, "p/q" strings, "inf" or
/// "-inf".
ExtendedMatrix parse_matrix(const Json& j);

/// {"vertices": [...], "arrows": [{"label", "from", "to"}, ...]}.
Quiver parse_quiver(const Json& j);
Json quiver_to_json(const Quiver& q);

/// A quiver block (top level or under "quiver") plus
/// "relations": [[{"coeff": "1", "path": ["b", "a"]}, ...], ...].
BoundAlgebra parse_algebra(const Json& j, const AlgebraOptions& opts = {});
Json algebra_to_json(const BoundAlgebra& a);

/// {"dimvec": {"1": 2, ...}, "maps": {"a": [["1", "0"], ...], ...}}.
/// Arrows without an entry get zero maps.
Representation parse_module(const Json& j, const AlgebraPtr& a);
Json module_to_json(const Representation& m);

Json matrix_to_json(const RatMatrix& m);
Json spectral_to_json(const SpectralValue& v);
Json growth_to_json(const GrowthEstimate& g);

/// Full report with budgets and witnesses. `extra_budgets` is merged into
/// the "budgets" object.
Json report_to_json(const FpReport& r, const Json& extra_budgets = Json::object());
std::string report_grid_csv(const FpReport& r);

}  // namespace fproot
