#pragma once

#include <optional>
#include <vector>

#include "nhk/rational.hpp"

namespace nhk {

/// Dense matrix over the rationals; exact arithmetic throughout.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rational& c) const;
  friend bool operator==(const QMat&, const QMat&) = default;
  bool is_zero() const;

  /// In-place reduced row echelon form; returns the pivot columns. Dispatches
  /// to the OpenMP kernel above the configured size threshold.
  std::vector<int> rref();
  std::vector<int> rref_serial();
  std::vector<int> rref_parallel();

  int rank() const;

  /// One solution of A x = b, or nullopt when inconsistent. Deterministic:
  /// free variables are set to zero.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  /// Basis of the right nullspace (columns).
  std::vector<std::vector<Rational>> nullspace() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  static void set_parallel_threshold(size_t cells);
  static size_t parallel_threshold();

 private:
  std::vector<int> rref_impl(bool parallel);

  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace nhk
