#include "paracr/verifier/spec.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "paracr/errors.hpp"
#include "paracr/expr/expr.hpp"
#include "paracr/geometry/coordinate_source.hpp"
#include "paracr/geometry/frame.hpp"
#include "paracr/paracontact/conditions.hpp"

namespace paracr {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& block, const std::string& msg) {
  throw ValidationError(block + ": " + msg);
}

void only_keys(const json& obj, const std::string& block, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(block, "must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; })) {
      fail(block, "unknown key '" + it.key() + "'");
    }
  }
}

const json& require(const json& obj, const char* key, const std::string& block) {
  if (!obj.contains(key)) fail(block, std::string("missing '") + key + "'");
  return obj.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<int>();
}

struct ExprContext {
  std::vector<std::string> coordinates;
  std::map<std::string, double> constants;

  expr::Expr operator()(const json& v, const std::string& where) const {
    if (v.is_number()) return expr::Expr::constant(v.get<double>());
    if (!v.is_string()) fail(where, "expected an expression string or number");
    try {
      return expr::parse(v.get<std::string>(), coordinates, constants);
    } catch (expr::ParseError& e) {
      e.locate(where);
      throw;
    }
  }
};

std::vector<expr::Expr> expr_vector(const json& v, int m, const ExprContext& ctx, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != m) fail(where, "expected " + std::to_string(m) + " entries");
  std::vector<expr::Expr> out;
  for (int i = 0; i < m; ++i) out.push_back(ctx(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<expr::Expr>> expr_matrix(const json& v, int m, const ExprContext& ctx, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != m) fail(where, "expected " + std::to_string(m) + " rows");
  std::vector<std::vector<expr::Expr>> out;
  for (int i = 0; i < m; ++i) out.push_back(expr_vector(v[i], m, ctx, where + "[" + std::to_string(i) + "]"));
  return out;
}

Vec<double> number_vector(const json& v, int m, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != m) fail(where, "expected " + std::to_string(m) + " numbers");
  Vec<double> out(m);
  for (int i = 0; i < m; ++i) out(i) = number(v[i], where);
  return out;
}

Mat<double> number_matrix(const json& v, int m, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != m) fail(where, "expected " + std::to_string(m) + " rows");
  Mat<double> out(m);
  for (int i = 0; i < m; ++i) {
    const Vec<double> row = number_vector(v[i], m, where);
    for (int j = 0; j < m; ++j) out(i, j) = row(j);
  }
  return out;
}

Chart parse_chart(const json& c) {
  only_keys(c, "chart", {"dimension", "coordinates", "box"});
  Chart chart;
  const json& coords = require(c, "coordinates", "chart");
  if (!coords.is_array()) fail("chart", "'coordinates' must be an array of names");
  for (const auto& name : coords) {
    if (!name.is_string()) fail("chart", "coordinate names must be strings");
    chart.coordinates.push_back(name.get<std::string>());
  }
  if (c.contains("dimension") && integer(c.at("dimension"), "chart.dimension") != chart.dimension()) {
    fail("chart", "'dimension' does not match the number of coordinates");
  }
  const json& box = require(c, "box", "chart");
  if (!box.is_array()) fail("chart", "'box' must be an array of [lo, hi] pairs");
  for (const auto& iv : box) {
    if (!iv.is_array() || iv.size() != 2) fail("chart", "'box' entries must be [lo, hi] pairs");
    chart.box.push_back(Interval{number(iv[0], "chart.box"), number(iv[1], "chart.box")});
  }
  chart.validate();
  return chart;
}

NumericOptions parse_numeric(const json& n) {
  only_keys(n, "numeric", {"points", "seed", "tolerance", "separation", "probes"});
  NumericOptions o;
  if (n.contains("points")) o.points = integer(n.at("points"), "numeric.points");
  if (n.contains("seed")) {
    if (!n.at("seed").is_number_unsigned()) fail("numeric", "'seed' must be a non-negative integer");
    o.seed = n.at("seed").get<std::uint64_t>();
  }
  if (n.contains("tolerance")) o.tolerance = number(n.at("tolerance"), "numeric.tolerance");
  if (n.contains("separation")) o.separation = number(n.at("separation"), "numeric.separation");
  if (n.contains("probes")) o.probes = integer(n.at("probes"), "numeric.probes");
  if (o.points < 1) fail("numeric", "'points' must be >= 1");
  if (o.probes < 1) fail("numeric", "'probes' must be >= 1");
  if (!(o.tolerance > 0.0)) fail("numeric", "'tolerance' must be positive");
  if (!(o.separation > o.tolerance)) fail("numeric", "'separation' must exceed 'tolerance'");
  return o;
}

ExampleDescriptor parse_preset(const json& p, const std::map<std::string, double>& constants) {
  only_keys(p, "structure.preset", {"name", "n", "f", "c", "H"});
  const json& name = require(p, "name", "structure.preset");
  if (!name.is_string()) fail("structure.preset", "'name' must be a string");
  PresetParams params;
  if (p.contains("n")) params.n = integer(p.at("n"), "structure.preset.n");
  if (p.contains("f")) params.f = p.at("f").get<std::string>();
  if (p.contains("H")) params.H = p.at("H").get<std::string>();
  if (p.contains("c")) params.c = number(p.at("c"), "structure.preset.c");
  else if (constants.count("c")) params.c = constants.at("c");
  try {
    return example_by_name(name.get<std::string>(), params);
  } catch (expr::ParseError& e) {
    e.locate("structure.preset");
    throw;
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& check_bundles() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> b = {
      {"para-cr", {"s0", "s1", "involutivity+", "involutivity-", "news00", "news01", "thm1"}},
  };
  return b;
}

std::vector<std::string> expand_checks(const std::vector<std::string>& requested, int m) {
  std::set<std::string> wanted;
  for (const auto& r : requested) {
    if (r == "all") {
      for (const auto& id : conditions_for_dimension(m)) wanted.insert(id);
      continue;
    }
    auto bundle = std::find_if(check_bundles().begin(), check_bundles().end(), [&r](const auto& b) { return b.first == r; });
    if (bundle != check_bundles().end()) {
      wanted.insert(bundle->second.begin(), bundle->second.end());
      continue;
    }
    if (!is_condition(r)) fail("checks", "unknown condition id '" + r + "'");
    const auto& info = condition_info(r);
    if (info.only_dimension != 0 && info.only_dimension != m) {
      throw WrongDimension("checks: '" + r + "' is defined in dimension " + std::to_string(info.only_dimension) +
                           " only, chart has dimension " + std::to_string(m));
    }
    wanted.insert(r);
  }
  std::vector<std::string> out;
  for (const auto& c : condition_table())
    if (wanted.count(std::string(c.id))) out.emplace_back(c.id);
  return out;
}

ManifoldSpec parse_spec(const json& input) {
  json doc = input;
  if (!doc.is_object()) fail("spec", "top level must be an object");
  if (doc.contains("example")) {
    // {"example": name, "n": ..., other preset params}
    json preset = {{"name", doc.at("example")}};
    for (const char* k : {"n", "f", "c", "H"}) {
      if (doc.contains(k)) {
        preset[k] = doc.at(k);
        doc.erase(k);
      }
    }
    doc.erase("example");
    if (doc.contains("structure")) fail("spec", "'example' and 'structure' are mutually exclusive");
    doc["structure"] = {{"preset", preset}};
  }
  only_keys(doc, "spec", {"chart", "constants", "structure", "checks", "numeric"});

  ManifoldSpec spec;
  spec.digest = fnv1a_hex(input.dump());

  std::map<std::string, double> constants;
  if (doc.contains("constants")) {
    if (!doc.at("constants").is_object()) fail("constants", "must be an object of name: number");
    for (auto it = doc.at("constants").begin(); it != doc.at("constants").end(); ++it) {
      constants[it.key()] = number(it.value(), "constants." + it.key());
    }
  }

  const json& st = require(doc, "structure", "spec");
  if (!st.is_object() || st.size() != 1) {
    fail("structure", "exactly one of 'coordinate', 'frame', 'preset' is required");
  }
  if (st.contains("preset")) {
    ExampleDescriptor d = parse_preset(st.at("preset"), constants);
    spec.chart = d.chart;
    if (doc.contains("chart")) {
      Chart c = parse_chart(doc.at("chart"));
      if (c.coordinates != d.chart.coordinates) {
        fail("chart", "coordinates must match the preset's (" + std::to_string(d.chart.dimension()) + " names)");
      }
      spec.chart = c;
    }
    spec.source = d.source;
    spec.structure_kind = "preset:" + d.name;
    spec.preset = std::move(d);
  } else {
    spec.chart = parse_chart(require(doc, "chart", "spec"));
    const int m = spec.chart.dimension();
    const ExprContext ctx{spec.chart.coordinates, constants};
    if (st.contains("coordinate")) {
      const json& c = st.at("coordinate");
      only_keys(c, "structure.coordinate", {"g", "phi", "xi", "eta"});
      spec.source = make_source(CoordinateSource(expr_matrix(require(c, "g", "structure.coordinate"), m, ctx, "structure.coordinate.g"),
                                                 expr_matrix(require(c, "phi", "structure.coordinate"), m, ctx, "structure.coordinate.phi"),
                                                 expr_vector(require(c, "xi", "structure.coordinate"), m, ctx, "structure.coordinate.xi"),
                                                 expr_vector(require(c, "eta", "structure.coordinate"), m, ctx, "structure.coordinate.eta")));
      spec.structure_kind = "coordinate";
    } else if (st.contains("frame")) {
      const json& f = st.at("frame");
      const std::string b = "structure.frame";
      only_keys(f, b, {"E", "g_hat", "phi_hat", "xi_hat", "eta_hat"});
      FrameConstants fc{number_matrix(require(f, "g_hat", b), m, b + ".g_hat"),
                        number_matrix(require(f, "phi_hat", b), m, b + ".phi_hat"),
                        number_vector(require(f, "xi_hat", b), m, b + ".xi_hat"),
                        number_vector(require(f, "eta_hat", b), m, b + ".eta_hat")};
      spec.source = make_source(FrameSource<ExprFrame>(ExprFrame(expr_matrix(require(f, "E", b), m, ctx, b + ".E")), fc));
      spec.structure_kind = "frame";
    } else {
      fail("structure", "expected 'coordinate', 'frame' or 'preset'");
    }
  }
  if (spec.source->dimension() != spec.chart.dimension()) fail("structure", "dimension differs from the chart");

  std::vector<std::string> requested{"all"};
  if (doc.contains("checks")) {
    const json& c = doc.at("checks");
    if (c.is_string()) {
      requested = {c.get<std::string>()};
    } else if (c.is_array()) {
      requested.clear();
      for (const auto& id : c) {
        if (!id.is_string()) fail("checks", "entries must be strings");
        requested.push_back(id.get<std::string>());
      }
    } else {
      fail("checks", "must be \"all\" or an array of ids");
    }
  }
  spec.checks = expand_checks(requested, spec.chart.dimension());
  if (doc.contains("numeric")) spec.numeric = parse_numeric(doc.at("numeric"));
  return spec;
}

ManifoldSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read spec file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("spec: malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_spec(doc);
}

nlohmann::ordered_json example_spec_json(const ExampleDescriptor& d, bool preset_form) {
  using oj = nlohmann::ordered_json;
  oj chart = oj::object();
  chart["dimension"] = d.chart.dimension();
  chart["coordinates"] = d.chart.coordinates;
  oj box = oj::array();
  for (const auto& iv : d.chart.box) box.push_back({iv.lo, iv.hi});
  chart["box"] = box;

  oj doc = oj::object();
  doc["chart"] = chart;
  const bool transcribe = !preset_form && (d.name == "flat3d" || d.name == "p1" || d.name == "p1-x1");
  if (!transcribe) {
    oj p = oj::object();
    p["name"] = d.name;
    p["n"] = d.n;
    for (const auto& [k, v] : d.parameters) {
      if (k == "c") p[k] = std::stod(v);
      else p[k] = v;
    }
    doc["structure"] = {{"preset", p}};
  } else if (d.name == "flat3d") {
    const auto& impl = static_cast<const SourceModel<CoordinateSource>&>(*d.source).impl();
    auto mat = [](const CoordinateSource::ExprMatrix& a) {
      oj out = oj::array();
      for (const auto& row : a) {
        oj r = oj::array();
        for (const auto& e : row) r.push_back(e.render());
        out.push_back(r);
      }
      return out;
    };
    auto vec = [](const std::vector<expr::Expr>& a) {
      oj out = oj::array();
      for (const auto& e : a) out.push_back(e.render());
      return out;
    };
    doc["structure"] = {{"coordinate", {{"g", mat(impl.g())}, {"phi", mat(impl.phi())}, {"xi", vec(impl.xi())}, {"eta", vec(impl.eta())}}}};
  } else {
    const auto& impl = static_cast<const SourceModel<FrameSource<ExprFrame>>&>(*d.source).impl();
    const int m = d.chart.dimension();
    oj E = oj::array();
    for (const auto& row : impl.frame().entries()) {
      oj r = oj::array();
      for (const auto& e : row) r.push_back(e.render());
      E.push_back(r);
    }
    const auto& c = impl.constants();
    auto mat = [m](const Mat<double>& a) {
      oj out = oj::array();
      for (int i = 0; i < m; ++i) {
        oj r = oj::array();
        for (int j = 0; j < m; ++j) r.push_back(a(i, j));
        out.push_back(r);
      }
      return out;
    };
    auto vec = [m](const Vec<double>& a) {
      oj out = oj::array();
      for (int i = 0; i < m; ++i) out.push_back(a(i));
      return out;
    };
    doc["structure"] = {{"frame", {{"E", E}, {"g_hat", mat(c.g_hat)}, {"phi_hat", mat(c.phi_hat)}, {"xi_hat", vec(c.xi_hat)}, {"eta_hat", vec(c.eta_hat)}}}};
  }
  doc["checks"] = oj::array({"all"});
  const NumericOptions defaults;
  doc["numeric"] = {{"points", defaults.points}, {"seed", defaults.seed}, {"tolerance", defaults.tolerance},
                    {"separation", defaults.separation}, {"probes", defaults.probes}};
  return doc;
}

}  // namespace paracr
