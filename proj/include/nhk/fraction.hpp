#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nhk/context.hpp"
#include "nhk/poly.hpp"
#include "nhk/weyl.hpp"

namespace nhk {

/// Linear form of an affine root hyperplane: <x, v> + hk * h for a coroot v
/// (hk is a constant instead when the context specializes h). Stored
/// normalized: v integral and primitive with its first nonzero entry
/// positive; the scalar stripped by normalization is returned separately and
/// belongs in the owning fraction's numerator.
struct AffineForm {
  std::vector<long long> coroot;
  Rational hk;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
  friend bool operator<(const AffineForm& a, const AffineForm& b) {
    if (a.coroot != b.coroot) return a.coroot < b.coroot;
    return a.hk < b.hk;
  }

  static std::pair<AffineForm, Rational> normalized(std::vector<long long> v,
                                                    Rational hk);
  /// The simple-coroot form for index i >= 1, or <x, delta-coroot> - h for
  /// the affine node i = 0.
  static AffineForm node(const EvalContext& ctx, int i);

  SparsePoly to_poly(const EvalContext& ctx) const;
  /// The form composed with the inverse point map of w (the ~> action);
  /// returns the transformed normalized form and the stripped scalar.
  std::pair<AffineForm, Rational> transformed(const EvalContext& ctx,
                                              const ExtAffine& w) const;
  std::string str(const EvalContext& ctx) const;
};

/// Exact quotient p / prod(forms) with the denominator kept as a multiset of
/// affine-root hyperplane forms. The stored representation is fully reduced
/// (no denominator form divides the numerator), which makes equality
/// structural. This is exactly the shape of every denominator occurring in
/// the nil-Hecke subalgebra of the skew group algebra, so no general
/// multivariate gcd is ever needed.
class RootFraction {
 public:
  RootFraction() = default;
  explicit RootFraction(SparsePoly num) : num_(std::move(num)) {}
  RootFraction(const EvalContext& ctx, SparsePoly num,
               std::map<AffineForm, int> den);

  static RootFraction zero(const EvalContext& ctx);
  static RootFraction one(const EvalContext& ctx);
  static RootFraction constant(const EvalContext& ctx, const Rational& c);
  /// 1 / form.
  static RootFraction reciprocal_form(const EvalContext& ctx, AffineForm form);

  const SparsePoly& num() const { return num_; }
  const std::map<AffineForm, int>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Present iff the reduced denominator is empty.
  std::optional<SparsePoly> as_polynomial() const;

  friend bool operator==(const RootFraction&, const RootFraction&) = default;

  static RootFraction add(const EvalContext& ctx, const RootFraction& a,
                          const RootFraction& b);
  static RootFraction mul(const EvalContext& ctx, const RootFraction& a,
                          const RootFraction& b);
  RootFraction negated() const;
  RootFraction scaled(const Rational& c) const;
  /// Multiplicative inverse; requires a constant numerator (the only case the
  /// normal-form peeling needs, where the denominator flips into a product of
  /// forms in the numerator).
  RootFraction reciprocal(const EvalContext& ctx) const;
  /// The ~> action of w: substitute the inverse point map in the numerator
  /// and transform each denominator form.
  RootFraction applied(const EvalContext& ctx, const ExtAffine& w) const;

  /// prod(den) as a polynomial (for cross-multiplication checks).
  SparsePoly den_poly(const EvalContext& ctx) const;

  std::string str(const EvalContext& ctx) const;

 private:
  void reduce(const EvalContext& ctx);

  SparsePoly num_;
  std::map<AffineForm, int> den_;
};

/// Exact division of p by a (possibly affine) linear form; nullopt when the
/// division leaves a remainder. Underlies every Demazure operator.
std::optional<SparsePoly> exact_divide(const SparsePoly& p, const SparsePoly& linear);
std::optional<SparsePoly> exact_divide(const EvalContext& ctx, const SparsePoly& p,
                                       const AffineForm& form);

}  // namespace nhk
