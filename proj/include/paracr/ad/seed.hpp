#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paracr/ad/dual.hpp"

namespace paracr {

inline void check_direction(std::size_t size, int direction) {
  if (direction < 0 || static_cast<std::size_t>(direction) >= size) {
    throw std::out_of_range("seed direction " + std::to_string(direction) + " outside chart dimension " +
                            std::to_string(size));
  }
}

/// Add one dual level to every coordinate; coordinate `direction` gets a
/// unit tangent, all others zero.
template <class T>
std::vector<Dual<T>> seed(std::span<const T> x, int direction) {
  check_direction(x.size(), direction);
  std::vector<Dual<T>> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(lift(x[i], static_cast<int>(i) == direction));
  return out;
}

/// Nested seeding: `directions[0]` is seeded at the innermost level,
/// `directions[k]` at level k+1. Evaluating f on the result and reading the
/// all-tangent slot gives the mixed partial in those directions.
template <int Order>
std::vector<Jet<Order>> seed_nested(std::span<const double> x, const std::vector<int>& directions) {
  if (directions.size() != static_cast<std::size_t>(Order)) {
    throw std::invalid_argument("seed_nested: need one direction per level");
  }
  if constexpr (Order == 0) {
    return std::vector<double>(x.begin(), x.end());
  } else {
    std::vector<int> inner(directions.begin(), directions.end() - 1);
    auto lower = seed_nested<Order - 1>(x, inner);
    return seed<Jet<Order - 1>>(std::span<const Jet<Order - 1>>(lower), directions.back());
  }
}

/// Same direction at every level (pure derivatives up to `Order`).
template <int Order>
std::vector<Jet<Order>> seed_nested(std::span<const double> x, int direction) {
  return seed_nested<Order>(x, std::vector<int>(Order, direction));
}

/// The slot holding the derivative with respect to every seeded level.
inline double mixed_coefficient(double x) { return x; }
template <class T>
double mixed_coefficient(const Dual<T>& x) {
  return mixed_coefficient(x.d);
}

}  // namespace paracr
