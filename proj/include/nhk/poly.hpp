#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nhk/intmat.hpp"
#include "nhk/rational.hpp"

namespace nhk {

/// Exponent vector over the variables x_1..x_r, h (h always last). Ordered by
/// graded lexicographic order with h least significant, which fixes the
/// canonical term order used for printing and equality.
struct Monomial {
  std::vector<int> e;

  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients in
/// x_1..x_r and h. Value semantics; no zero terms are stored, so map equality
/// is structural equality.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Rational& c);
  static SparsePoly variable(int nvars, int index);  // x_{index+1}
  static SparsePoly hbar(int nvars) { return variable(nvars, nvars - 1); }
  /// sum_i coeffs[i] * x_{i+1} + hbar_coeff * h + constant_term.
  static SparsePoly linear(int nvars, const std::vector<long long>& coeffs,
                           const Rational& hbar_coeff = Rational(0),
                           const Rational& constant_term = Rational(0));

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  int degree() const;  // total degree; -1 for the zero polynomial
  int degree_in(int var) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Rational& c) const;
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly pow(int k) const;

  /// Substitutes images[i] for variable i. All images must share a variable
  /// count, which becomes the variable count of the result.
  SparsePoly substitute(const std::vector<SparsePoly>& images) const;

  /// Integer-affine change of variables x |-> A x + b h (h itself fixed),
  /// realizing the extended affine Weyl action on polynomials. When
  /// hbar_value is set the ring is specialized and the shift is b * value.
  SparsePoly substitute_linear(const IntMat& matrix,
                               const std::vector<long long>& hbar_shift,
                               const std::optional<Rational>& hbar_value =
                                   std::nullopt) const;

  /// Specializes h to the scalar c.
  SparsePoly specialize_hbar(const Rational& c) const;

  std::map<int, SparsePoly> homogeneous_parts() const;
  SparsePoly homogeneous_part(int d) const;

  /// Canonical text form, descending graded-lex, e.g. "3/2*x1^2*h - x2".
  std::string str() const;
  static SparsePoly parse(int nvars, const std::string& text);

  void add_term(Monomial m, Rational c);  // accumulate, dropping zeros

  // Multiplication kernels. mul_serial is the reference implementation;
  // mul_parallel splits one factor across OpenMP threads and merges the
  // partial products. operator* dispatches on the work size.
  static SparsePoly mul_serial(const SparsePoly& a, const SparsePoly& b);
  static SparsePoly mul_parallel(const SparsePoly& a, const SparsePoly& b);
  static void set_parallel_threshold(size_t term_product);
  static size_t parallel_threshold();

 private:
  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

SparsePoly operator*(const Rational& c, const SparsePoly& p);

}  // namespace nhk
