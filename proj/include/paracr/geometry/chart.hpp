#pragma once

#include <string>
#include <vector>

#include "paracr/errors.hpp"

namespace paracr {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A coordinate chart with a sampling box. Structure charts have odd
/// dimension 2n+1 >= 3.
struct Chart {
  std::vector<std::string> coordinates;
  std::vector<Interval> box;

  int dimension() const { return static_cast<int>(coordinates.size()); }
  int n() const { return (dimension() - 1) / 2; }

  void validate() const {
    const int m = dimension();
    if (m < 3) throw ValidationError("chart: dimension must be at least 3");
    if (m % 2 == 0) throw ValidationError("chart: dimension must be odd (2n+1)");
    if (static_cast<int>(box.size()) != m) throw ValidationError("chart: box needs one interval per coordinate");
    for (int i = 0; i < m; ++i) {
      if (!(box[i].hi - box[i].lo > 0.0)) {
        throw ValidationError("chart: interval for '" + coordinates[i] + "' must have positive length");
      }
      for (int j = 0; j < i; ++j) {
        if (coordinates[i] == coordinates[j]) throw ValidationError("chart: duplicate coordinate '" + coordinates[i] + "'");
      }
    }
  }
};

/// Coordinate names (x1..xn, y1..yn, z) used by the frame examples.
inline std::vector<std::string> xyz_coordinates(int n) {
  std::vector<std::string> c;
  for (int a = 1; a <= n; ++a) c.push_back("x" + std::to_string(a));
  for (int a = 1; a <= n; ++a) c.push_back("y" + std::to_string(a));
  c.push_back("z");
  return c;
}

}  // namespace paracr
