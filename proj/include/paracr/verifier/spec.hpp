#pragma once

// Manifold spec files (JSON). Layout:
//
//   {
//     "chart": {"dimension": 3, "coordinates": ["x", "y", "z"],
//               "box": [[-1, 1], [-1, 1], [-1, 1]]},
//     "constants": {"c": 1},
//     "structure": {"coordinate": {"g": [[...]], "phi": [[...]], "xi": [...], "eta": [...]}}
//               or {"frame": {"E": [[...]], "g_hat": [[...]], "phi_hat": [[...]],
//                             "xi_hat": [...], "eta_hat": [...]}}
//               or {"preset": {"name": "p1", "n": 2, "f": "...", "c": 1, "H": "..."}},
//     "checks": ["all"] | ["para-cr", "sas", ...],
//     "numeric": {"points": 64, "seed": 0, "tolerance": 1e-6,
//                 "separation": 1e-2, "probes": 4}
//   }
//
// Shorthand: {"example": "hyperboloid", "n": 1} is a preset spec. With a
// preset the chart block is optional; if present it overrides the box.
// Expression entries are strings in the expr grammar (numbers also accepted);
// phi[i][j] is the i-th component of phi(d/dx^j), column a of E is e_a.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "paracr/examples/examples.hpp"
#include "paracr/geometry/chart.hpp"
#include "paracr/geometry/source.hpp"

namespace paracr {

struct NumericOptions {
  int points = 64;
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  double separation = 1e-2;
  int probes = 4;
};

struct ManifoldSpec {
  Chart chart;
  SourcePtr source;
  /// "coordinate", "frame" or "preset:<name>".
  std::string structure_kind;
  /// Set for presets; carries the expected fingerprint.
  std::optional<ExampleDescriptor> preset;
  /// Expanded condition ids, table order.
  std::vector<std::string> checks;
  NumericOptions numeric;
  /// FNV-1a 64 of the canonical (key-sorted, compact) input document.
  std::string digest;
};

/// Reads and validates a spec file. Throws ValidationError (naming the
/// block), expr::ParseError, or std::runtime_error for unreadable files.
ManifoldSpec load_spec(const std::string& path);
ManifoldSpec parse_spec(const nlohmann::json& doc);

/// Expands ids and bundles ("all", "para-cr") for dimension m. Throws
/// ValidationError on unknown ids and WrongDimension for inadmissible ones.
std::vector<std::string> expand_checks(const std::vector<std::string>& requested, int m);

/// Bundle names and their members.
const std::vector<std::pair<std::string, std::vector<std::string>>>& check_bundles();

/// Spec document for a preset: full transcription for flat3d (coordinate)
/// and p1 / p1-x1 (frame), preset form for the others or when `preset_form`.
nlohmann::ordered_json example_spec_json(const ExampleDescriptor& d, bool preset_form = false);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace paracr
