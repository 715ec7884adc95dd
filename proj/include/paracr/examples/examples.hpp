#pragma once

// The four example families with their default parameters and the
// classification each one is expected to reproduce.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paracr/expr/expr.hpp"
#include "paracr/geometry/chart.hpp"
#include "paracr/geometry/frame.hpp"
#include "paracr/geometry/source.hpp"

namespace paracr {

/// Class names used in fingerprints.
namespace cls {
inline constexpr const char* kAlmostParacontactMetric = "almost paracontact metric";
inline constexpr const char* kParacontactMetric = "paracontact metric";
inline constexpr const char* kNormal = "normal";
inline constexpr const char* kParaSasakian = "para-Sasakian";
inline constexpr const char* kAlmostParaCosymplectic = "almost para-cosymplectic";
inline constexpr const char* kParaCR = "para-CR";
inline constexpr const char* kParaKaehlerLeaves = "para-Kaehler leaves";
}  // namespace cls

struct ExampleTargets {
  std::optional<double> sectional_curvature;
  std::optional<double> scalar_curvature;
  std::optional<double> star_scalar_curvature;
};

struct ExampleDescriptor {
  std::string name;
  int n = 1;
  /// Parameter expressions as given (f, H, c), in insertion-independent order.
  std::map<std::string, std::string> parameters;
  Chart chart;
  SourcePtr source;
  /// Classes the structure belongs to.
  std::vector<std::string> expected_classes;
  /// Classes it must be separated from (residual above the separation threshold).
  std::vector<std::string> expected_non_classes;
  ExampleTargets targets;
};

ExampleDescriptor example_flat_3d();

/// Hypersurface with n in {1, 2} supported by the default box.
ExampleDescriptor example_hyperboloid(int n = 1);

/// Frame family with f over (x, y, z); default f = (c + sum x^2)/z, c = 1.
ExampleDescriptor example_p1(int n = 2, const std::optional<std::string>& f = std::nullopt, double c = 1.0);

/// The f = x1 member, which is not para-CR.
ExampleDescriptor example_p1_x1(int n = 2);

/// Almost para-cosymplectic family from a potential H(x, z); default H = z * sum x^2.
ExampleDescriptor example_cosymplectic(int n = 2, const std::optional<std::string>& H = std::nullopt);

/// Named preset: flat3d | hyperboloid | p1 | p1-x1 | cosymplectic. `n` <= 0 picks the default.
struct PresetParams {
  int n = 0;
  std::optional<std::string> f;
  std::optional<std::string> H;
  std::optional<double> c;
};
ExampleDescriptor example_by_name(const std::string& name, const PresetParams& p = {});

const std::vector<std::string>& example_names();

/// Frame matrix of the f family at given f over xyz coordinates.
ExprFrame p1_frame(int n, const expr::Expr& f);

}  // namespace paracr
