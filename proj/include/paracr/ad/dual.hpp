#pragma once

// Nestable first-order dual numbers.
//
// Dual<T> carries a value and one directional derivative, both of type T.
// Nesting Dual<Dual<double>> gives second derivatives (seed both levels),
// three levels give third derivatives. Every function below computes the
// value slot with exactly the same double operation as the plain-double
// overload, so order-0 evaluation is bitwise identical to double evaluation.

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include "paracr/errors.hpp"

namespace paracr {

template <class T>
struct Dual;

namespace detail {
template <class T>
struct DualDepth : std::integral_constant<int, 0> {};
template <class T>
struct DualDepth<Dual<T>> : std::integral_constant<int, 1 + DualDepth<T>::value> {};
}  // namespace detail

/// Nesting depth: 0 for double, 1 for Dual<double>, ...
template <class T>
inline constexpr int dual_depth = detail::DualDepth<T>::value;

template <class T>
inline constexpr bool is_dual = dual_depth<T> > 0;

template <class T>
struct Dual {
  T v{};
  T d{};

  constexpr Dual() = default;
  constexpr Dual(double value) : v(value), d(0.0) {}  // NOLINT: implicit lift of constants
  constexpr Dual(T value, T deriv) : v(value), d(deriv) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }
};

/// Innermost double (the value slot).
inline double value_of(double x) { return x; }
template <class T>
double value_of(const Dual<T>& x) {
  return value_of(x.v);
}

/// Lift a double into any scalar type with zero derivative slots.
template <class T>
T constant(double c) {
  return T(c);
}

// ---------------------------------------------------------------- arithmetic

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.v + b.v, a.d + b.d};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.v - b.v, a.d - b.d};
}
template <class T>
Dual<T> operator-(const Dual<T>& a) {
  return {-a.v, -a.d};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}

inline void check_divisor(double den) {
  if (!(std::abs(den) > 1e-300)) {
    throw DomainError("division by a value within 1e-300 of zero");
  }
}

template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  check_divisor(value_of(b));
  T q = a.v / b.v;
  return {q, (a.d - q * b.d) / b.v};
}

// Mixed double/Dual overloads (templates do not see implicit conversions).
template <class T>
Dual<T> operator+(const Dual<T>& a, double b) {
  return {a.v + b, a.d};
}
template <class T>
Dual<T> operator+(double a, const Dual<T>& b) {
  return {a + b.v, b.d};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, double b) {
  return {a.v - b, a.d};
}
template <class T>
Dual<T> operator-(double a, const Dual<T>& b) {
  return {a - b.v, -b.d};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, double b) {
  return {a.v * b, a.d * b};
}
template <class T>
Dual<T> operator*(double a, const Dual<T>& b) {
  return {a * b.v, a * b.d};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, double b) {
  check_divisor(b);
  return {a.v / b, a.d / b};
}
template <class T>
Dual<T> operator/(double a, const Dual<T>& b) {
  return Dual<T>(a) / b;
}

// ------------------------------------------------------------ transcendental

inline double checked_div(double a, double b) {
  check_divisor(b);
  return a / b;
}

inline double sqrt_checked(double x, bool derivatives) {
  if (derivatives ? !(x > 0.0) : !(x >= 0.0)) {
    throw DomainError("sqrt of a value outside its domain");
  }
  return std::sqrt(x);
}

inline double log_checked(double x) {
  if (!(x > 0.0)) {
    throw DomainError("ln of a non-positive value");
  }
  return std::log(x);
}

// Plain double versions live in namespace paracr so that generic code can
// call paracr::sqrt etc. uniformly.
inline double sqrt(double x) { return sqrt_checked(x, false); }
inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return log_checked(x); }
inline double sinh(double x) { return std::sinh(x); }
inline double cosh(double x) { return std::cosh(x); }
inline double tanh(double x) { return std::tanh(x); }

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  sqrt_checked(value_of(a), true);
  T s = sqrt(a.v);
  return {s, a.d / (2.0 * s)};
}

template <class T>
Dual<T> exp(const Dual<T>& a) {
  T e = exp(a.v);
  return {e, e * a.d};
}

template <class T>
Dual<T> log(const Dual<T>& a) {
  log_checked(value_of(a));
  return {log(a.v), a.d / a.v};
}

template <class T>
Dual<T> sinh(const Dual<T>& a) {
  return {sinh(a.v), cosh(a.v) * a.d};
}

template <class T>
Dual<T> cosh(const Dual<T>& a) {
  return {cosh(a.v), sinh(a.v) * a.d};
}

template <class T>
Dual<T> tanh(const Dual<T>& a) {
  T t = tanh(a.v);
  return {t, (1.0 - t * t) * a.d};
}

/// x^k for integer k by binary exponentiation; x^0 == 1. The same operation
/// sequence is used for every scalar type.
template <class T>
T ipow(const T& x, std::int64_t k) {
  if (k == 0) return constant<T>(1.0);
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  T result = constant<T>(1.0);
  T base = x;
  bool first = true;
  while (e > 0) {
    if (e & 1U) {
      if (first) {
        result = base;
        first = false;
      } else {
        result = result * base;
      }
    }
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  if (k < 0) {
    if constexpr (is_dual<T>) {
      return 1.0 / result;
    } else {
      return checked_div(1.0, result);
    }
  }
  return result;
}

// ----------------------------------------------------------------- seeding

/// Raise a T scalar to Dual<T>; the derivative slot is 1 when `seeded`.
template <class T>
Dual<T> lift(const T& x, bool seeded) {
  return {x, seeded ? constant<T>(1.0) : constant<T>(0.0)};
}

/// Strip the outermost dual level, keeping the value.
template <class T>
T primal(const Dual<T>& x) {
  return x.v;
}

/// Strip the outermost dual level, keeping the derivative.
template <class T>
T tangent(const Dual<T>& x) {
  return x.d;
}

using Jet1 = Dual<double>;
using Jet2 = Dual<Jet1>;
using Jet3 = Dual<Jet2>;
using Jet4 = Dual<Jet3>;
using Jet5 = Dual<Jet4>;

template <int Order>
struct JetOf;
template <>
struct JetOf<0> {
  using type = double;
};
template <int Order>
struct JetOf {
  using type = Dual<typename JetOf<Order - 1>::type>;
};

/// Scalar type with `Order` nested dual levels (Jet<0> is double).
template <int Order>
using Jet = typename JetOf<Order>::type;

/// Coefficient of the pure derivative of order `k` along a direction seeded
/// at every level: k = 0 gives the value, k = 1 the first derivative, ...
inline double derivative_coefficient(double x, int k) { return k == 0 ? x : 0.0; }
template <class T>
double derivative_coefficient(const Dual<T>& x, int k) {
  // For same-direction seeding the first-order slot is reachable through
  // the outermost tangent; deeper orders recurse into it.
  if (k == 0) return value_of(x);
  return derivative_coefficient(x.d, k - 1);
}

}  // namespace paracr
