// paracr: verify paracontact structures on sampled charts.
//
//   paracr verify --spec PATH [--checks LIST|all] [--points N] [--seed S] [--tol T] [--format json|text]
//   paracr example --name NAME [--n N] [--f EXPR] [--H EXPR] [--c C] [--emit-spec PATH] [run flags]
//   paracr list-checks

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "paracr/errors.hpp"
#include "paracr/expr/expr.hpp"
#include "paracr/verifier/run.hpp"

namespace {

struct RunFlags {
  std::string checks;
  std::optional<int> points;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string format = "json";
};

void add_run_flags(CLI::App* app, RunFlags& f) {
  app->add_option("--checks", f.checks, "comma-separated condition ids or bundles, or 'all'");
  app->add_option("--points", f.points, "accepted sample points (default 64)");
  app->add_option("--seed", f.seed, "RNG seed (default 0)");
  app->add_option("--tol", f.tol, "scaled residual tolerance (default 1e-6)");
  app->add_option("--format", f.format, "report format")->check(CLI::IsMember({"json", "text"}));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

int run_and_print(paracr::ManifoldSpec spec, const RunFlags& f) {
  paracr::RunOverrides o;
  if (!f.checks.empty()) o.checks = split_list(f.checks);
  o.points = f.points;
  o.seed = f.seed;
  o.tolerance = f.tol;
  spec = paracr::apply_overrides(std::move(spec), o);
  const auto report = paracr::run(spec);
  if (f.format == "json") std::cout << paracr::report_json(report).dump(2) << "\n";
  else std::cout << paracr::report_text(report);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for almost paracontact metric structures"};
  app.require_subcommand(1);

  RunFlags verify_flags;
  std::string spec_path;
  auto* verify = app.add_subcommand("verify", "run checks on a manifold spec file");
  verify->add_option("--spec", spec_path, "spec file (JSON)")->required();
  add_run_flags(verify, verify_flags);

  RunFlags example_flags;
  std::string name, emit_path;
  paracr::PresetParams params;
  auto* example = app.add_subcommand("example", "run a built-in example or write its spec file");
  example->add_option("--name", name, "example name")->required()->check(CLI::IsMember(paracr::example_names()));
  example->add_option("--n", params.n, "half dimension (dimension 2n+1)");
  example->add_option("--f", params.f, "f for p1 / p1-x1");
  example->add_option("--H", params.H, "H for cosymplectic");
  example->add_option("--c", params.c, "constant c in the default f");
  example->add_option("--emit-spec", emit_path, "write the spec file and exit");
  add_run_flags(example, example_flags);

  auto* list = app.add_subcommand("list-checks", "print condition ids and statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (const auto& c : paracr::condition_table()) {
        std::cout << c.id;
        if (c.only_dimension) std::cout << " [dim " << c.only_dimension << "]";
        std::cout << "\n    " << c.statement << "\n";
      }
      std::cout << "\nbundles\n";
      for (const auto& [bundle, ids] : paracr::check_bundles()) {
        std::cout << bundle << ":";
        for (const auto& id : ids) std::cout << " " << id;
        std::cout << "\n";
      }
      return 0;
    }
    if (*verify) return run_and_print(paracr::load_spec(spec_path), verify_flags);
    if (*example) {
      const auto d = paracr::example_by_name(name, params);
      const auto doc = paracr::example_spec_json(d);
      if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        if (!out) throw std::runtime_error("cannot write " + emit_path);
        out << doc.dump(2) << "\n";
        return 0;
      }
      auto spec = paracr::parse_spec(nlohmann::json(doc));
      spec.preset = d;  // transcribed specs still carry the expected fingerprint
      return run_and_print(std::move(spec), example_flags);
    }
  } catch (const paracr::expr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
