#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "hspace/finite_space.hpp"
#include "hspace/hyperspace.hpp"
#include "hspace/quotient.hpp"
#include "hspace/report.hpp"
#include "hspace/space.hpp"

namespace hspace {

// ordered_json keeps insertion order, so documents have a stable field
// order and identical runs serialize byte-identically.
using json = nlohmann::ordered_json;

/// Distances and coordinates render with 17 significant digits: enough
/// to round-trip any double exactly.
std::string format_real(double x);

// FiniteSpace document: {"n": int, "labels": [...]?, "dist": [lower
// triangle, row-major]}.
json finite_space_to_json(const FiniteSpace& s);
FiniteSpace finite_space_from_json(const json& j);
FiniteSpace load_finite_space(const std::filesystem::path& path);
void save_finite_space(const FiniteSpace& s, const std::filesystem::path& path);

// Point-cloud document: a JSON array, one entry per point. Entries are
// coordinate vectors for coordinate-backed spaces, ids or labels for
// matrix-backed ones. [] or an empty/whitespace file is the empty set.
CompactSet load_point_cloud(const std::filesystem::path& path, SpacePtr space);
CompactSet point_cloud_from_json(const json& j, SpacePtr space);
json point_cloud_to_json(const CompactSet& s);

// Action document: {"generators": [...], "snap": real?}. Each generator
// is {"type": "rotation", "k": int, "n": int}, {"type": "scale", "c":
// real}, {"type": "flow", "field": "circle-height", "dt": real}, or
// {"type": "permutation", "table": [...]}.
GroupAction action_from_json(const json& j, SpacePtr space);
GroupAction load_action(const std::filesystem::path& path, SpacePtr space);

json report_to_json(const Report& r);
json quotient_to_json(const QuotientApprox& q);
json witnesses_to_json(const std::vector<JumpWitness>& ws);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace hspace
