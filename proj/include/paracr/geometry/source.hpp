#pragma once

// Where the structure tensors (g, phi, xi, eta) come from. A source can be
// evaluated at a point over double or any jet type up to Jet3, which is the
// deepest level the curvature and Cotton computations need.

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paracr/ad/dual.hpp"
#include "paracr/geometry/tensor.hpp"

namespace paracr {

/// Coordinate-basis components at one point: phi(i, j) is the i-th
/// component of phi(d/dx^j); eta is a covector, xi a vector.
template <class T>
struct StructureFields {
  Mat<T> g;
  Mat<T> phi;
  Vec<T> xi;
  Vec<T> eta;

  explicit StructureFields(int m = 0) : g(m), phi(m), xi(m), eta(m) {}
};

#define PARACR_SOURCE_SCALARS(X) X(double) X(Jet1) X(Jet2) X(Jet3)

class StructureSource {
 public:
  virtual ~StructureSource() = default;

  virtual int dimension() const = 0;
  /// Short tag for reports ("coordinate", "frame", "hypersurface").
  virtual std::string kind() const = 0;

#define PARACR_DECLARE_EVALUATE(T) virtual StructureFields<T> evaluate(std::span<const T> x) const = 0;
  PARACR_SOURCE_SCALARS(PARACR_DECLARE_EVALUATE)
#undef PARACR_DECLARE_EVALUATE
};

/// Adapts any type with `dimension()`, `kind()` and a member template
/// `fields<T>(span<const T>)` to the virtual interface.
template <class Impl>
class SourceModel final : public StructureSource {
 public:
  explicit SourceModel(Impl impl) : impl_(std::move(impl)) {}

  int dimension() const override { return impl_.dimension(); }
  std::string kind() const override { return impl_.kind(); }

#define PARACR_FORWARD_EVALUATE(T) \
  StructureFields<T> evaluate(std::span<const T> x) const override { return impl_.template fields<T>(x); }
  PARACR_SOURCE_SCALARS(PARACR_FORWARD_EVALUATE)
#undef PARACR_FORWARD_EVALUATE

  const Impl& impl() const { return impl_; }

 private:
  Impl impl_;
};

using SourcePtr = std::shared_ptr<const StructureSource>;

template <class Impl>
SourcePtr make_source(Impl impl) {
  return std::make_shared<SourceModel<Impl>>(std::move(impl));
}

}  // namespace paracr
