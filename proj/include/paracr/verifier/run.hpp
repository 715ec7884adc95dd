#pragma once

// Seeded sampling, the point sweep (OpenMP and serial reference), and the
// report. The parallel sweep only distributes independent per-point work;
// acceptance order and reductions are fixed, so both sweeps produce the
// same report.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "paracr/paracontact/classify.hpp"
#include "paracr/paracontact/conditions.hpp"
#include "paracr/verifier/spec.hpp"

namespace paracr {

struct Sample {
  std::vector<double> x;
  std::vector<Probes> probes;
};

/// Uniform points in the box plus `probes` tuples with entries in [-1, 1].
class Sampler {
 public:
  Sampler(const Chart& chart, std::uint64_t seed, int probes);
  Sample next();
  double uniform();  // [0, 1) with 53 random bits

 private:
  Chart chart_;
  int probes_;
  std::mt19937_64 rng_;
};

struct SweepPoint {
  Sample sample;
  PointFrame frame;
};

struct SamplingStats {
  int requested = 0;
  int candidates = 0;
  int rejected = 0;
};

enum class Execution { Serial, Parallel };

/// Draws candidates in order and keeps those where the structure is
/// evaluable (DomainError subclasses reject). Gives up with
/// SamplingExhausted after 10 * points candidates.
std::vector<SweepPoint> acquire_points(const StructureSource& source, const Chart& chart, const NumericOptions& numeric,
                                       Execution exec, SamplingStats* stats = nullptr);

/// Max scaled residual per check over points and probes.
std::vector<CheckResult> sweep_checks(const StructureSource& source, const std::vector<SweepPoint>& points,
                                      const std::vector<std::string>& checks, double tolerance, Execution exec);

struct SelfTest {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Nabla g, Gamma symmetry, first Bianchi, d o d, jet vs central difference.
std::vector<SelfTest> engine_self_tests(const StructureSource& source, const std::vector<SweepPoint>& points,
                                        Execution exec);

struct Range {
  std::optional<double> min, max;
  void add(double v) {
    if (!min || v < *min) min = v;
    if (!max || v > *max) max = v;
  }
};

struct CurvatureSummary {
  Range sectional;
  int planes = 0;
  int degenerate_planes = 0;
  Range scalar;
  Range scalar_star;
  double h_norm = 0.0;
};

CurvatureSummary curvature_summary(const std::vector<SweepPoint>& points);

struct RunOverrides {
  std::optional<std::vector<std::string>> checks;
  std::optional<int> points;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
};

struct Report {
  std::string spec_digest;
  std::string structure;
  int dimension = 0;
  NumericOptions numeric;
  SamplingStats sampling;
  std::vector<SelfTest> self_tests;
  std::vector<CheckResult> checks;
  CurvatureSummary curvature;
  Classification classification;
  std::optional<std::vector<std::string>> expected_fingerprint;
  double wall_clock_seconds = 0.0;

  bool self_tests_pass() const;
  bool checks_pass() const;
  /// Exit status: 0 when every requested check and self-test passes, else 1.
  int exit_code() const;
};

/// Applies overrides to the spec's numeric block and checks.
ManifoldSpec apply_overrides(ManifoldSpec spec, const RunOverrides& o);

Report run(const ManifoldSpec& spec, Execution exec = Execution::Parallel);

/// Keys in fixed order; wall_clock_seconds is last.
nlohmann::ordered_json report_json(const Report& r);
/// The JSON body without wall_clock_seconds, as compared for determinism.
std::string report_body(const Report& r);
std::string report_text(const Report& r);

}  // namespace paracr
