// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed here.
// Exit status is the number of failed criteria (capped at 1).

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "paracr/errors.hpp"
#include "paracr/examples/examples.hpp"
#include "paracr/geometry/local_geometry.hpp"
#include "paracr/paracontact/conditions.hpp"
#include "paracr/verifier/run.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"

using namespace paracr;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back((ok ? "" : "!") + what);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

ManifoldSpec spec_for(const std::string& name, int n, std::uint64_t seed, int points,
                      const std::vector<std::string>& checks, double tol = 1e-6) {
  json doc = {{"example", name}};
  if (n) doc["n"] = n;
  RunOverrides o;
  o.checks = checks;
  o.points = points;
  o.seed = seed;
  o.tolerance = tol;
  return apply_overrides(parse_spec(doc), o);
}

std::map<std::string, CheckResult> by_id(const Report& r) {
  std::map<std::string, CheckResult> m;
  for (const auto& c : r.checks) m[c.id] = c;
  return m;
}

std::vector<SweepPoint> points_of(const ManifoldSpec& spec) {
  return acquire_points(*spec.source, spec.chart, spec.numeric, Execution::Parallel);
}

const std::vector<std::string> kParaCrIds{"s0", "s1", "involutivity+", "involutivity-", "news00", "news01", "thm1"};

// ---- 1
Outcome hyperboloid_curvature() {
  Outcome o;
  for (int n : {1, 2}) {
    const auto d = example_hyperboloid(n);
    Sampler s(d.chart, 7, 1);
    int planes = 0, degenerate = 0;
    double worst = 0.0;
    while (planes < 200) {
      const auto smp = s.next();
      const auto P = point_frame(*d.source, smp.x);
      try {
        worst = std::max(worst, std::abs(sectional_curvature(P, smp.probes[0].X, smp.probes[0].Y) + 1.0));
        ++planes;
      } catch (const DegeneratePlane&) {
        ++degenerate;
      }
    }
    o.require(worst <= 1e-6, "n=" + std::to_string(n) + " |K+1|max=" + fmt(worst) + " over 200 planes (" +
                                 std::to_string(degenerate) + " degenerate skipped)");
    const auto r = run(spec_for("hyperboloid", n, 7, 64, {"all"}));
    const std::vector<std::string> want{cls::kParacontactMetric, cls::kNormal, cls::kParaSasakian, cls::kParaCR};
    o.require(r.classification.fingerprint == want, "n=" + std::to_string(n) + " fingerprint {" +
                                                        join(r.classification.fingerprint) + "}");
  }
  return o;
}

// ---- 2
Outcome hyperboloid_contractions() {
  Outcome o;
  const auto spec = spec_for("hyperboloid", 2, 0, 64, {"rsasaki", "ricsasaki"});
  double r_dev = 0.0, rs_dev = 0.0, sum_dev = 0.0;
  for (const auto& p : points_of(spec)) {
    r_dev = std::max(r_dev, std::abs(p.frame.scalar + 20.0));
    rs_dev = std::max(rs_dev, std::abs(p.frame.scalar_star - 4.0));
    sum_dev = std::max(sum_dev, std::abs(p.frame.scalar + p.frame.scalar_star + 16.0));
  }
  o.require(r_dev <= 1e-5, "|r+20|=" + fmt(r_dev));
  o.require(rs_dev <= 1e-5, "|r*-4|=" + fmt(rs_dev));
  o.require(sum_dev <= 1e-5, "|r+r*+16|=" + fmt(sum_dev));
  const auto c = by_id(run(spec));
  for (const char* id : {"rsasaki", "ricsasaki"})
    o.require(c.at(id).max_scaled <= 1e-6, std::string(id) + "=" + fmt(c.at(id).max_scaled));
  return o;
}

// ---- 3
Outcome flat_example() {
  Outcome o;
  std::vector<std::string> ids{"pcm", "sas"};
  ids.insert(ids.end(), kParaCrIds.begin(), kParaCrIds.end());
  const auto spec = spec_for("flat3d", 0, 0, 64, ids, 1e-7);
  double riemann = 0.0, hz = 0.0;
  for (const auto& p : points_of(spec)) {
    riemann = std::max(riemann, max_abs(p.frame.riemann));
    Vec<double> v(3);
    for (int i = 0; i < 3; ++i) v(i) = p.frame.geo.h(i, 2) + (i == 2 ? 1.0 : 0.0);
    hz = std::max(hz, max_abs(v));
  }
  o.require(riemann <= 1e-8, "Riemann max=" + fmt(riemann));
  o.require(hz <= 1e-8, "|h(dz)+dz|=" + fmt(hz));
  const auto c = by_id(run(spec));
  double worst = 0.0;
  for (const auto& id : ids)
    if (id != "sas") worst = std::max(worst, c.at(id).max_scaled);
  o.require(worst <= 1e-7, "pcm and para-CR forms max=" + fmt(worst));
  o.require(c.at("sas").max_scaled >= 1e-2, "sas=" + fmt(c.at("sas").max_scaled));
  return o;
}

// ---- 4
Outcome f_family() {
  Outcome o;
  std::vector<std::string> ids{"pcm"};
  ids.insert(ids.end(), kParaCrIds.begin(), kParaCrIds.end());
  const auto spec = spec_for("p1", 0, 0, 64, ids, 1e-7);
  const auto c = by_id(run(spec));
  double worst = 0.0;
  for (const auto& id : ids) worst = std::max(worst, c.at(id).max_scaled);
  o.require(worst <= 1e-7, "pcm and para-CR forms max=" + fmt(worst));

  double h2 = 0.0;
  for (const auto& p : points_of(spec)) h2 = std::max(h2, max_abs(matmul(p.frame.geo.h, p.frame.geo.h)));
  o.require(h2 <= 1e-7, "|h^2|=" + fmt(h2));

  // (N - 2 d eta (x) xi)(e_{n+a}, xi) = 2 f_z e_a with e_a = d/dx^a
  const auto& d = *spec.preset;
  const auto f = expr::parse(d.parameters.at("f"), d.chart.coordinates, {{"c", 1.0}});
  const auto frame = p1_frame(d.n, f);
  std::mt19937_64 rng(20);
  double gap = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto x = testing::random_point(d.chart, rng);
    const auto P = point_frame(*d.source, x);
    const auto e = frame.matrix<double>(std::span<const double>(x));
    const auto sz = seed<double>(std::span<const double>(x), 2 * d.n);
    const double fz = f.eval(std::span<const Jet1>(sz)).d;
    for (int a = 0; a < d.n; ++a) {
      Vec<double> X(2 * d.n + 1);
      for (int i = 0; i < X.dim(); ++i) X(i) = e(i, d.n + a);
      auto N = nijenhuis(P, X, P.geo.xi);
      const double de = inner(P.geo.deta_form, X, P.geo.xi);
      for (int i = 0; i < N.dim(); ++i) N(i) -= 2 * de * P.geo.xi(i);
      gap = std::max(gap, std::abs(max_abs(N) - 2 * std::abs(fz)));
    }
  }
  o.require(gap <= 1e-6, "normality along e_a vs 2|f_z| gap=" + fmt(gap) + " at 20 samples");

  const auto neg = by_id(run(spec_for("p1-x1", 0, 0, 64, {"involutivity+"})));
  o.require(neg.at("involutivity+").max_scaled >= 0.1, "f=x1 involutivity+=" + fmt(neg.at("involutivity+").max_scaled));
  return o;
}

// ---- 5
Outcome cosymplectic_family() {
  Outcome o;
  std::vector<std::string> ids{"wzor2"};
  ids.insert(ids.end(), kParaCrIds.begin(), kParaCrIds.end());
  const auto spec = spec_for("cosymplectic", 0, 0, 64, ids);
  double deta = 0.0, dphi = 0.0;
  for (const auto& p : points_of(spec)) {
    deta = std::max(deta, max_abs(p.frame.geo.deta_form));
    dphi = std::max(dphi, max_abs(p.frame.geo.dphi_form));
  }
  o.require(deta <= 1e-8, "|d eta|=" + fmt(deta));
  o.require(dphi <= 1e-8, "|d Phi|=" + fmt(dphi));
  const auto c = by_id(run(spec));
  double worst = 0.0;
  for (const auto& id : ids) worst = std::max(worst, c.at(id).max_scaled);
  o.require(worst <= 1e-6, "para-CR forms and wzor2 max=" + fmt(worst));

  // (N - 2 d eta (x) xi)(e_a, xi) = 2 sum_w H_{w a z} e_{n+w}; for
  // H = z sum (x^a)^2 this is 4 e_{n+a}, e_{n+a} = d/dy_a
  const auto& d = *spec.preset;
  const auto& frame = dynamic_cast<const SourceModel<FrameSource<HessianFrame>>&>(*d.source).impl().frame();
  std::mt19937_64 rng(21);
  double gap = 0.0, literal = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto x = testing::random_point(d.chart, rng);
    const auto P = point_frame(*d.source, x);
    const auto e = frame.matrix<double>(std::span<const double>(x));
    for (int a = 0; a < d.n; ++a) {
      Vec<double> X(2 * d.n + 1);
      for (int i = 0; i < X.dim(); ++i) X(i) = e(i, a);
      auto N = nijenhuis(P, X, P.geo.xi);
      const double de = inner(P.geo.deta_form, X, P.geo.xi);
      for (int i = 0; i < N.dim(); ++i) N(i) -= 2 * de * P.geo.xi(i);
      gap = std::max(gap, std::abs(max_abs(N) - 4.0));
      literal = std::max(literal, std::abs(max_abs(N) - 4.0 * std::abs(x[a])));
    }
  }
  o.require(gap <= 1e-6, "normality along e_a vs derived 2|sum H_waz| = 4 gap=" + fmt(gap));
  o.notes.push_back("info: deviation from 4|x^a| reading=" + fmt(literal));
  return o;
}

// ---- 6
enum class Verdict { Yes, No, Unsure };

Verdict verdict(const std::map<std::string, CheckResult>& c, const std::vector<std::string>& ids, double tol,
                double sep) {
  bool all = true, any = false;
  for (const auto& id : ids) {
    all = all && c.at(id).max_scaled <= tol;
    any = any || c.at(id).max_scaled >= sep;
  }
  return all ? Verdict::Yes : any ? Verdict::No : Verdict::Unsure;
}

const char* name_of(Verdict v) { return v == Verdict::Yes ? "yes" : v == Verdict::No ? "no" : "?"; }

Outcome equivalences() {
  Outcome o;
  // news00 and news01 each replace s0 (Levi form symmetry), so they pair with s1
  const std::vector<std::pair<std::string, std::vector<std::string>>> forms{
      {"s0+s1", {"s0", "s1"}},         {"involutivity", {"involutivity+", "involutivity-"}},
      {"news00+s1", {"news00", "s1"}}, {"news01+s1", {"news01", "s1"}},
      {"thm1", {"thm1"}}};
  for (const char* name : {"flat3d", "hyperboloid", "p1", "cosymplectic", "p1-x1"}) {
    const auto r = run(spec_for(name, 0, 0, 64, {"all"}));
    const auto c = by_id(r);
    const double tol = r.numeric.tolerance, sep = r.numeric.separation;
    std::string line = std::string(name) + ":";
    const Verdict crv = verdict(c, forms[0].second, tol, sep);
    bool agree = crv != Verdict::Unsure;
    for (const auto& [label, ids] : forms) {
      const Verdict v = verdict(c, ids, tol, sep);
      agree = agree && v == crv;
      line += " " + label + "=" + name_of(v);
    }
    o.require(agree, line);
    if (verdict(c, {"axioms", "compat", "pcm"}, tol, sep) == Verdict::Yes) {
      const Verdict w1 = verdict(c, {"wzor1"}, tol, sep), wz = verdict(c, {"wzorzamk"}, tol, sep);
      o.require(w1 == crv && wz == crv, std::string(name) + ": wzor1=" + name_of(w1) + " wzorzamk=" + name_of(wz));
      if (crv == Verdict::Yes) {
        const Verdict sas = verdict(c, {"sas"}, tol, sep);
        const bool h_zero = r.curvature.h_norm <= tol;
        o.require((sas == Verdict::Yes) == h_zero && sas != Verdict::Unsure,
                  std::string(name) + ": para-Sasakian=" + name_of(sas) + " |h|=" + fmt(r.curvature.h_norm));
      }
    }
  }
  return o;
}

// ---- 7
Outcome random_frames() {
  Outcome o;
  std::mt19937_64 rng(2);
  const Chart chart{{"x", "y", "z"}, {{-0.5, 0.5}, {-0.5, 0.5}, {-0.5, 0.5}}};
  NumericOptions numeric;
  numeric.points = 16;
  double worst = 0.0;
  int failing = 0;
  for (int k = 0; k < 30; ++k) {
    const auto rf = testing::random_frame(rng);
    const auto src = testing::frame_source(rf.entries);
    numeric.seed = static_cast<std::uint64_t>(k);
    const auto pts = acquire_points(*src, chart, numeric, Execution::Parallel);
    double w = 0.0;
    for (const auto& c : sweep_checks(*src, pts, kParaCrIds, 1e-6, Execution::Parallel)) w = std::max(w, c.max_scaled);
    failing += w > 1e-6;
    worst = std::max(worst, w);
  }
  o.require(failing == 0, "30 frames, " + std::to_string(failing) + " failing, max residual=" + fmt(worst));
  return o;
}

// ---- 8
Outcome curvature_identities() {
  Outcome o;
  for (auto [name, n] : std::vector<std::pair<const char*, int>>{{"hyperboloid", 1}, {"hyperboloid", 2}, {"flat3d", 0}}) {
    const auto c = by_id(run(spec_for(name, n, 0, 64, {"k1", "k2"})));
    const double w = std::max(c.at("k1").max_scaled, c.at("k2").max_scaled);
    o.require(w <= 1e-6, std::string(name) + (n ? " n=" + std::to_string(n) : "") + " k1,k2 max=" + fmt(w));
  }
  return o;
}

// ---- 9
Outcome engine() {
  Outcome o;
  for (const auto& name : example_names()) {
    const auto r = run(spec_for(name, 0, 0, 64, {"axioms"}));
    std::string worst;
    for (const auto& t : r.self_tests)
      if (!t.pass) worst += " " + t.name + "=" + fmt(t.value);
    o.require(r.self_tests_pass(), name + " self-tests" + (worst.empty() ? " pass" : worst));
  }
  const double jet = testing::jet_vs_fd_worst(2024, 99, 200);
  o.require(jet <= 1e-5, "jet vs central difference, 200 expressions, max rel=" + fmt(jet));
  double weyl = 0.0, cotton = 0.0;
  {
    const auto spec = spec_for("hyperboloid", 2, 0, 64, {"axioms"});
    for (const auto& p : points_of(spec)) weyl = std::max(weyl, weyl_residual(p.frame));
  }
  {
    const auto spec = spec_for("hyperboloid", 1, 0, 64, {"axioms"});
    for (const auto& p : points_of(spec))
      cotton = std::max(cotton, cotton_residual(*spec.source, std::span<const double>(p.sample.x)));
  }
  o.require(weyl <= 1e-5, "Weyl n=2 max=" + fmt(weyl));
  o.require(cotton <= 1e-5, "Cotton n=1 max=" + fmt(cotton));
  return o;
}

// ---- 10
std::string capture(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> p(popen(cmd.c_str(), "r"), pclose);
  if (!p) return "";
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p.get())) > 0) out.append(buf, k);
  return out;
}

std::string strip_wall_clock(std::string s) {
  const auto at = s.find("\"wall_clock_seconds\"");
  if (at == std::string::npos) return s;
  return s.substr(0, at);
}

Outcome determinism() {
  Outcome o;
  for (const auto& name : testing::golden_presets()) {
    const auto spec = testing::golden_spec(name);
    const auto a = run(spec, Execution::Parallel), b = run(spec, Execution::Parallel), c = run(spec, Execution::Serial);
    o.require(report_body(a) == report_body(b) && report_body(a) == report_body(c),
              name + " repeated and serial bodies identical");
    const auto diff = testing::golden_diff(testing::read_json(testing::golden_path(PARACR_GOLDEN_DIR, name)),
                                           nlohmann::ordered_json::parse(report_body(a)), 1e-9);
    o.require(diff.empty(), name + " golden" + (diff.empty() ? " matches" : " differs at " + diff));
  }
  const std::string cmd = std::string(PARACR_CLI) + " example --name p1 --seed 3 --points 32 2>/dev/null";
  const auto first = strip_wall_clock(capture(cmd)), second = strip_wall_clock(capture(cmd));
  o.require(!first.empty() && first == second, "CLI bodies byte-identical across runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hyperboloid sectional curvature and fingerprint", hyperboloid_curvature},
      {"hyperboloid n=2 scalar curvatures and Sasaki identities", hyperboloid_contractions},
      {"flat 3D example", flat_example},
      {"f family defaults and f = x1", f_family},
      {"cosymplectic family defaults", cosymplectic_family},
      {"criterion equivalences", equivalences},
      {"random 3D frames are para-CR", random_frames},
      {"curvature identities k1 k2", curvature_identities},
      {"engine self-tests", engine},
      {"determinism and goldens", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("criterion %2zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str());
    for (const auto& n : o.notes) std::printf("    %s%s\n", n.rfind("!", 0) == 0 ? "FAILED " : "", n.c_str() + (n.rfind("!", 0) == 0));
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
