#pragma once

#include <map>

#include "nhk/fraction.hpp"

namespace nhk {

/// Element of C[T x t*, (t^alpha - 1)/alpha-coroot]: a finite sum of Laurent
/// monomials t^mu with RootFraction coefficients in the x variables (finite
/// coroot denominators only; the context is specialized at h = 0). Exponents
/// are weight coordinates.
class TorusMixed {
 public:
  explicit TorusMixed(EvalContext ctx) : ctx_(std::move(ctx)) {}

  static TorusMixed zero(const EvalContext& ctx) { return TorusMixed(ctx); }
  static TorusMixed one(const EvalContext& ctx);
  static TorusMixed monomial(const EvalContext& ctx, const Weight& mu);
  static TorusMixed fraction(const EvalContext& ctx, RootFraction f);

  const EvalContext& ctx() const { return ctx_; }
  const std::map<std::vector<long long>, RootFraction>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const std::vector<long long>& exponent, const RootFraction& c);

  TorusMixed operator+(const TorusMixed& o) const;
  TorusMixed operator-(const TorusMixed& o) const;
  TorusMixed operator-() const;
  TorusMixed operator*(const TorusMixed& o) const;
  friend bool operator==(const TorusMixed&, const TorusMixed&) = default;

  /// Action of a finite Weyl element: t^mu -> t^{w mu} on exponents and the
  /// usual twist on the x-coefficients.
  TorusMixed applied(const ExtAffine& w) const;

 private:
  EvalContext ctx_;
  std::map<std::vector<long long>, RootFraction> terms_;
};

/// W x TorusMixed, the target of the classical-limit homomorphism: finite
/// Weyl group elements with TorusMixed left coefficients, multiplied with the
/// same twist convention as the skew algebra.
class TorusSkew {
 public:
  explicit TorusSkew(EvalContext ctx) : ctx_(std::move(ctx)) {}

  static TorusSkew zero(const EvalContext& ctx) { return TorusSkew(ctx); }
  static TorusSkew group(const EvalContext& ctx, const ExtAffine& w);
  static TorusSkew coeff(const EvalContext& ctx, TorusMixed c);

  const EvalContext& ctx() const { return ctx_; }
  const std::map<IntMat, TorusMixed>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ExtAffine& w, const TorusMixed& c);

  TorusSkew operator+(const TorusSkew& o) const;
  TorusSkew operator-(const TorusSkew& o) const;
  TorusSkew operator*(const TorusSkew& o) const;
  friend bool operator==(const TorusSkew&, const TorusSkew&) = default;

 private:
  ExtAffine finite_elem(const IntMat& m) const;

  EvalContext ctx_;
  std::map<IntMat, TorusMixed> terms_;
};

}  // namespace nhk
