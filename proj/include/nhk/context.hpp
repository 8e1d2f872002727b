#pragma once

#include <optional>

#include "nhk/rational.hpp"
#include "nhk/rootdata.hpp"

namespace nhk {

/// Carries the root datum plus the state of the deformation parameter h:
/// generic (an actual polynomial variable) or specialized to a scalar.
/// Specializing at 1 gives the filtered algebra, at 0 its associated graded.
struct EvalContext {
  const RootDatum* datum = nullptr;
  std::optional<Rational> hbar;  // nullopt = generic

  int rank() const { return datum->rank(); }
  int nvars() const { return datum->rank() + 1; }
  /// One h in coefficient units: 1 when generic (coefficients of h), the
  /// specialized scalar otherwise.
  Rational hbar_unit() const { return hbar ? *hbar : Rational(1); }

  friend bool operator==(const EvalContext&, const EvalContext&) = default;
};

inline EvalContext generic_context(const RootDatum& d) { return {&d, std::nullopt}; }
inline EvalContext specialized_context(const RootDatum& d, const Rational& c) {
  return {&d, c};
}

inline void require_same(const EvalContext& a, const EvalContext& b) {
  if (!(a == b)) throw std::invalid_argument("mixed evaluation contexts");
}

}  // namespace nhk
