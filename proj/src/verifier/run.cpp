#include "paracr/verifier/run.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <map>
#include <sstream>

#include "paracr/errors.hpp"

namespace paracr {

namespace {

constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

Sampler::Sampler(const Chart& chart, std::uint64_t seed, int probes) : chart_(chart), probes_(probes), rng_(seed) {}

double Sampler::uniform() { return static_cast<double>(rng_() >> 11) * kTwoPowMinus53; }

Sample Sampler::next() {
  const int m = chart_.dimension();
  Sample s;
  s.x.resize(m);
  for (int i = 0; i < m; ++i) {
    const auto& iv = chart_.box[i];
    s.x[i] = iv.lo + (iv.hi - iv.lo) * uniform();
  }
  for (int p = 0; p < probes_; ++p) {
    Probes q{Vec<double>(m), Vec<double>(m), Vec<double>(m)};
    for (Vec<double>* v : {&q.W, &q.X, &q.Y})
      for (int i = 0; i < m; ++i) (*v)(i) = 2.0 * uniform() - 1.0;
    s.probes.push_back(std::move(q));
  }
  return s;
}

std::vector<SweepPoint> acquire_points(const StructureSource& source, const Chart& chart, const NumericOptions& numeric,
                                       Execution exec, SamplingStats* stats) {
  Sampler sampler(chart, numeric.seed, numeric.probes);
  const int budget = 10 * numeric.points;
  std::vector<SweepPoint> accepted;
  int drawn = 0;
  while (static_cast<int>(accepted.size()) < numeric.points) {
    const int batch = std::min(numeric.points - static_cast<int>(accepted.size()), budget - drawn);
    if (batch <= 0) {
      throw SamplingExhausted("accepted " + std::to_string(accepted.size()) + " of " + std::to_string(numeric.points) +
                              " points after " + std::to_string(drawn) + " candidates");
    }
    std::vector<Sample> candidates;
    for (int i = 0; i < batch; ++i) candidates.push_back(sampler.next());
    drawn += batch;
    std::vector<std::optional<PointFrame>> frames(batch);
    std::vector<std::exception_ptr> errors(batch);
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
    for (int i = 0; i < batch; ++i) {
      try {
        frames[i] = point_frame(source, candidates[i].x);
      } catch (const DomainError&) {
        // rejected, resampled
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    rethrow_first(errors);
    for (int i = 0; i < batch; ++i) {
      if (frames[i]) accepted.push_back(SweepPoint{std::move(candidates[i]), std::move(*frames[i])});
    }
  }
  if (stats) {
    stats->requested = numeric.points;
    stats->candidates = drawn;
    stats->rejected = drawn - static_cast<int>(accepted.size());
  }
  return accepted;
}

std::vector<CheckResult> sweep_checks(const StructureSource& source, const std::vector<SweepPoint>& points,
                                      const std::vector<std::string>& checks, double tolerance, Execution exec) {
  const int np = static_cast<int>(points.size());
  const int nc = static_cast<int>(checks.size());
  std::vector<Residual> cell(static_cast<std::size_t>(np) * nc);
  std::vector<std::exception_ptr> errors(np);
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
  for (int p = 0; p < np; ++p) {
    try {
      const PointContext ctx{source, points[p].frame};
      for (int c = 0; c < nc; ++c) {
        const ConditionInfo& info = condition_info(checks[c]);
        Residual worst;
        const int nprobe = info.probes == ProbeUse::None ? 1 : static_cast<int>(points[p].sample.probes.size());
        for (int k = 0; k < nprobe; ++k) worst.keep_worst(residual_suite(ctx, checks[c], points[p].sample.probes[k]));
        cell[static_cast<std::size_t>(p) * nc + c] = worst;
      }
    } catch (...) {
      errors[p] = std::current_exception();
    }
  }
  rethrow_first(errors);

  std::vector<CheckResult> out;
  for (int c = 0; c < nc; ++c) {
    CheckResult r;
    r.id = checks[c];
    r.points = np;
    r.tolerance = tolerance;
    for (int p = 0; p < np; ++p) {
      const Residual& x = cell[static_cast<std::size_t>(p) * nc + c];
      r.max_raw = std::max(r.max_raw, x.raw);
      if (r.worst_point < 0 || x.scaled() > r.max_scaled) {
        r.max_scaled = x.scaled();
        r.worst_point = p;
      }
    }
    r.pass = r.max_scaled <= tolerance;
    out.push_back(r);
  }
  return out;
}

namespace {

/// Max relative gap between jet derivatives of (g, phi, xi, eta) and a
/// central difference with step 1e-5.
double jet_vs_fd(const StructureSource& source, const SweepPoint& sp) {
  const double step = 1e-5;
  const auto& G = sp.frame.geo;
  const int m = G.m;
  double worst = 0.0;
  auto rel = [](double jet, double fd) { return std::abs(jet - fd) / std::max(1.0, std::abs(jet)); };
  for (int k = 0; k < m; ++k) {
    std::vector<double> xp = sp.sample.x, xm = sp.sample.x;
    xp[k] += step;
    xm[k] -= step;
    StructureFields<double> fp, fm;
    try {
      fp = source.evaluate(std::span<const double>(xp));
      fm = source.evaluate(std::span<const double>(xm));
    } catch (const DomainError&) {
      continue;  // stencil leaves the domain
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        worst = std::max(worst, rel(G.dg(k, i, j), (fp.g(i, j) - fm.g(i, j)) / (2 * step)));
        worst = std::max(worst, rel(G.dphi(k, i, j), (fp.phi(i, j) - fm.phi(i, j)) / (2 * step)));
      }
      worst = std::max(worst, rel(G.dxi(k, i), (fp.xi(i) - fm.xi(i)) / (2 * step)));
      worst = std::max(worst, rel(G.deta(k, i), (fp.eta(i) - fm.eta(i)) / (2 * step)));
    }
  }
  return worst;
}

}  // namespace

std::vector<SelfTest> engine_self_tests(const StructureSource& source, const std::vector<SweepPoint>& points,
                                        Execution exec) {
  const int np = static_cast<int>(points.size());
  constexpr int kTests = 5;
  std::vector<double> vals(static_cast<std::size_t>(np) * kTests, 0.0);
  std::vector<std::exception_ptr> errors(np);
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
  for (int p = 0; p < np; ++p) {
    try {
      const PointFrame& P = points[p].frame;
      double* v = &vals[static_cast<std::size_t>(p) * kTests];
      v[0] = metric_compatibility_residual(P);
      v[1] = christoffel_symmetry_residual(P);
      v[2] = bianchi_residual(P);
      v[3] = dd_residual(P);
      v[4] = jet_vs_fd(source, points[p]);
    } catch (...) {
      errors[p] = std::current_exception();
    }
  }
  rethrow_first(errors);
  const char* names[kTests] = {"nabla-g", "christoffel-symmetry", "first-bianchi", "d-squared", "jet-vs-fd"};
  const double tols[kTests] = {1e-9, 1e-12, 1e-7, 1e-8, 1e-5};
  std::vector<SelfTest> out;
  for (int t = 0; t < kTests; ++t) {
    double worst = 0.0;
    for (int p = 0; p < np; ++p) worst = std::max(worst, vals[static_cast<std::size_t>(p) * kTests + t]);
    out.push_back(SelfTest{names[t], worst, tols[t], worst <= tols[t]});
  }
  return out;
}

CurvatureSummary curvature_summary(const std::vector<SweepPoint>& points) {
  CurvatureSummary s;
  for (const auto& sp : points) {
    for (const auto& q : sp.sample.probes) {
      try {
        s.sectional.add(sectional_curvature(sp.frame, q.X, q.Y));
        ++s.planes;
      } catch (const DegeneratePlane&) {
        ++s.degenerate_planes;
      }
    }
    s.scalar.add(sp.frame.scalar);
    s.scalar_star.add(sp.frame.scalar_star);
    s.h_norm = std::max(s.h_norm, h_norm(sp.frame));
  }
  return s;
}

bool Report::self_tests_pass() const {
  return std::all_of(self_tests.begin(), self_tests.end(), [](const SelfTest& t) { return t.pass; });
}

bool Report::checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int Report::exit_code() const { return checks_pass() && self_tests_pass() ? 0 : 1; }

ManifoldSpec apply_overrides(ManifoldSpec spec, const RunOverrides& o) {
  if (o.checks) spec.checks = expand_checks(*o.checks, spec.chart.dimension());
  if (o.points) {
    if (*o.points < 1) throw ValidationError("numeric: points must be >= 1");
    spec.numeric.points = *o.points;
  }
  if (o.seed) spec.numeric.seed = *o.seed;
  if (o.tolerance) {
    if (!(*o.tolerance > 0.0)) throw ValidationError("numeric: tolerance must be positive");
    spec.numeric.tolerance = *o.tolerance;
  }
  return spec;
}

Report run(const ManifoldSpec& spec, Execution exec) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.spec_digest = spec.digest;
  r.structure = spec.structure_kind;
  r.dimension = spec.chart.dimension();
  r.numeric = spec.numeric;
  const auto points = acquire_points(*spec.source, spec.chart, spec.numeric, exec, &r.sampling);
  r.self_tests = engine_self_tests(*spec.source, points, exec);
  r.checks = sweep_checks(*spec.source, points, spec.checks, spec.numeric.tolerance, exec);
  r.curvature = curvature_summary(points);
  std::map<std::string, CheckResult> by_id;
  for (const auto& c : r.checks) by_id[c.id] = c;
  r.classification = classify(by_id, spec.numeric.tolerance, spec.numeric.separation);
  if (spec.preset) {
    std::vector<std::string> fp;
    for (const auto& d : class_definitions()) {
      const auto& e = spec.preset->expected_classes;
      if (std::find(e.begin(), e.end(), d.name) != e.end()) fp.push_back(d.name);
    }
    r.expected_fingerprint = fp;
  }
  r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

nlohmann::ordered_json range_json(const Range& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["min"] = r.min ? nlohmann::ordered_json(*r.min) : nlohmann::ordered_json(nullptr);
  j["max"] = r.max ? nlohmann::ordered_json(*r.max) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace

nlohmann::ordered_json report_json(const Report& r) {
  using oj = nlohmann::ordered_json;
  oj j = oj::object();
  j["spec_digest"] = r.spec_digest;
  j["structure"] = r.structure;
  j["dimension"] = r.dimension;
  j["numeric"] = {{"points", r.numeric.points},
                  {"seed", r.numeric.seed},
                  {"tolerance", r.numeric.tolerance},
                  {"separation", r.numeric.separation},
                  {"probes", r.numeric.probes}};
  j["sampling"] = {{"requested", r.sampling.requested},
                   {"candidates", r.sampling.candidates},
                   {"rejected", r.sampling.rejected}};
  oj st = oj::array();
  for (const auto& t : r.self_tests) {
    st.push_back({{"name", t.name}, {"value", t.value}, {"tolerance", t.tolerance}, {"pass", t.pass}});
  }
  j["self_tests"] = {{"pass", r.self_tests_pass()}, {"tests", st}};
  oj checks = oj::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"statement", std::string(condition_info(c.id).statement)},
                      {"points", c.points},
                      {"max_raw_residual", c.max_raw},
                      {"max_scaled_residual", c.max_scaled},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"worst_point", c.worst_point}});
  }
  j["checks"] = checks;
  j["curvature"] = {{"sectional", range_json(r.curvature.sectional)},
                    {"planes", r.curvature.planes},
                    {"degenerate_planes", r.curvature.degenerate_planes},
                    {"scalar", range_json(r.curvature.scalar)},
                    {"star_scalar", range_json(r.curvature.scalar_star)},
                    {"h_max_abs", r.curvature.h_norm}};
  oj classes = oj::array();
  for (const auto& c : r.classification.classes) {
    classes.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"criteria", c.criteria}});
  }
  oj cl = oj::object();
  cl["classes"] = classes;
  cl["fingerprint"] = r.classification.fingerprint;
  if (r.expected_fingerprint) {
    cl["expected_fingerprint"] = *r.expected_fingerprint;
    cl["fingerprint_match"] = *r.expected_fingerprint == r.classification.fingerprint;
  }
  j["classification"] = cl;
  j["all_pass"] = r.exit_code() == 0;
  j["wall_clock_seconds"] = r.wall_clock_seconds;
  return j;
}

std::string report_body(const Report& r) {
  auto j = report_json(r);
  j.erase("wall_clock_seconds");
  return j.dump(2);
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "structure " << r.structure << ", dimension " << r.dimension << ", digest " << r.spec_digest << "\n";
  os << "points " << r.numeric.points << " (candidates " << r.sampling.candidates << ", rejected " << r.sampling.rejected
     << "), seed " << r.numeric.seed << ", tolerance " << r.numeric.tolerance << "\n\n";
  os << std::scientific << std::setprecision(3);
  os << "engine self-tests\n";
  for (const auto& t : r.self_tests) {
    os << "  " << (t.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(22) << t.name << std::right << t.value
       << "  (tol " << t.tolerance << ")\n";
  }
  os << "\nchecks (max scaled residual)\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(15) << c.id << std::right << c.max_scaled
       << "  raw " << c.max_raw << "\n";
  }
  os << "\ncurvature\n";
  auto range = [&os](const char* name, const Range& g) {
    os << "  " << std::left << std::setw(12) << name << std::right;
    if (g.min) os << "[" << *g.min << ", " << *g.max << "]\n";
    else os << "n/a\n";
  };
  range("sectional", r.curvature.sectional);
  range("r", r.curvature.scalar);
  range("r*", r.curvature.scalar_star);
  os << "  max |h|     " << r.curvature.h_norm << "\n";
  os << "\nclassification\n";
  for (const auto& c : r.classification.classes) os << "  " << std::left << std::setw(26) << c.name << to_string(c.status) << "\n";
  os << "  fingerprint {";
  for (std::size_t i = 0; i < r.classification.fingerprint.size(); ++i) os << (i ? ", " : "") << r.classification.fingerprint[i];
  os << "}\n";
  if (r.expected_fingerprint) {
    os << "  expected    {";
    for (std::size_t i = 0; i < r.expected_fingerprint->size(); ++i) os << (i ? ", " : "") << (*r.expected_fingerprint)[i];
    os << "}" << (*r.expected_fingerprint == r.classification.fingerprint ? "  match" : "  MISMATCH") << "\n";
  }
  os << "\n" << (r.exit_code() == 0 ? "all checks pass" : "some checks fail") << "\n";
  return os.str();
}

}  // namespace paracr
