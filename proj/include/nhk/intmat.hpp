#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nhk {

/// Small dense integer matrix, row major. Used for Cartan matrices and for
/// Weyl-group elements acting on weight coordinates; those are unimodular, so
/// exact inversion stays integral.
struct IntMat {
  int n = 0;
  std::vector<long long> a;

  IntMat() = default;
  explicit IntMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  static IntMat identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  friend bool operator==(const IntMat&, const IntMat&) = default;
  friend auto operator<=>(const IntMat&, const IntMat&) = default;

  IntMat operator*(const IntMat& o) const {
    if (n != o.n) throw std::invalid_argument("IntMat dimension mismatch");
    IntMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long long v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  std::vector<long long> apply(const std::vector<long long>& v) const {
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("IntMat/vector dimension mismatch");
    std::vector<long long> r(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  IntMat transpose() const {
    IntMat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  /// Exact inverse; throws if the matrix is not invertible over the integers.
  IntMat inverse() const;
};

}  // namespace nhk
