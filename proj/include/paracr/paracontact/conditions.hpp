#pragma once

// Pointwise residuals of the structure conditions. Every residual is the
// max-abs component of (lhs - rhs), divided by max(1, largest term entering
// it). Conditions stated for X, Y in D = ker eta project the probes with
// X -> X - eta(X) xi first.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paracr/geometry/calculus.hpp"
#include "paracr/geometry/local_geometry.hpp"

namespace paracr {

struct Residual {
  double raw = 0.0;
  double magnitude = 0.0;

  double scaled() const { return raw / std::max(1.0, magnitude); }

  void term(double v) { magnitude = std::max(magnitude, std::abs(v)); }
  template <int R>
  void term(const Tensor<double, R>& t) {
    magnitude = std::max(magnitude, max_abs(t));
  }
  void diff(double v) { raw = std::max(raw, std::abs(v)); }
  template <int R>
  void diff(const Tensor<double, R>& t) {
    raw = std::max(raw, max_abs(t));
  }
  /// Worst of two residuals (raw and magnitude each by max).
  void merge(const Residual& o) {
    raw = std::max(raw, o.raw);
    magnitude = std::max(magnitude, o.magnitude);
  }
  /// Keep whichever has the larger scaled value.
  void keep_worst(const Residual& o) {
    if (o.scaled() > scaled() || (o.scaled() == scaled() && o.raw > raw)) *this = o;
  }
};

/// One probe tuple (W, X, Y); conditions use the vectors they need.
struct Probes {
  Vec<double> W, X, Y;
};

enum class ProbeUse { None, Pair, Triple };

struct ConditionInfo {
  std::string_view id;
  std::string_view statement;
  ProbeUse probes;
  /// 0 = any dimension, otherwise the only admissible dimension.
  int only_dimension;
};

/// Every condition id in report order.
const std::vector<ConditionInfo>& condition_table();
const ConditionInfo& condition_info(std::string_view id);
bool is_condition(std::string_view id);
/// Ids admissible in dimension m, in table order.
std::vector<std::string> conditions_for_dimension(int m);

/// Everything a residual can depend on at one point.
struct PointContext {
  const StructureSource& source;
  const PointFrame& frame;
};

/// Residual of `id` at the point for one probe tuple. Probe-free conditions
/// ignore `q`. Throws WrongDimension for dimension-restricted ids.
Residual residual_suite(const PointContext& ctx, std::string_view id, const Probes& q);

// ---- building blocks, exposed for tests ----

/// N(X, Y) for X, Y extended as constant coordinate fields.
Vec<double> nijenhuis(const PointFrame& P, const Vec<double>& X, const Vec<double>& Y);

/// h = 1/2 L_xi phi through the bracket definition (independent of LocalGeometry::h).
Mat<double> h_operator(const PointFrame& P);

/// L(X, Y) = -d eta(X, phi Y) after projecting X, Y into D.
double levi_form(const PointFrame& P, const Vec<double>& X, const Vec<double>& Y);

struct EigenBases {
  std::vector<Vec<double>> plus;
  std::vector<Vec<double>> minus;
};

/// Numerical rank of the D^sign projector at the point.
int eigendistribution_rank(const PointFrame& P, int sign);
/// Coordinate-orthonormal bases of D+ and D-. Throws RankDefect unless both have n elements.
EigenBases eigendistribution_bases(const PointFrame& P);

/// Max over basis pairs of the part of [u, v] outside D^sign, scaled by max(1, |[u, v]|).
Residual involutivity_residual(const PointFrame& P, int sign);

/// (R(W,X) phi)Y minus the curvature identity right side.
Residual curvature_identity_k1(const PointFrame& P, const Vec<double>& W, const Vec<double>& X, const Vec<double>& Y);
/// g(R(W,X) phi Y, xi) minus its projected right side.
Residual curvature_identity_k2(const PointFrame& P, const Vec<double>& W, const Vec<double>& X, const Vec<double>& Y);

/// Max |h^i_j|.
double h_norm(const PointFrame& P);

}  // namespace paracr
