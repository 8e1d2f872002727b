#include "nhk/linalg.hpp"

#include <omp.h>

#include <atomic>
#include <stdexcept>

namespace nhk {

namespace {
std::atomic<size_t> g_rref_threshold{32768};
}

void QMat::set_parallel_threshold(size_t cells) { g_rref_threshold = cells; }
size_t QMat::parallel_threshold() { return g_rref_threshold; }

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMat shape mismatch");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("QMat shape mismatch");
  QMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const { return *this + o.scaled(-1); }

QMat QMat::scaled(const Rational& c) const {
  QMat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<int> QMat::rref_impl(bool parallel) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int r = row; r < rows_; ++r)
      if (at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
    Rational d = at(row, col);
    for (int j = col; j < cols_; ++j) at(row, j) /= d;
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (int r = 0; r < rows_; ++r) {
        if (r == row || at(r, col) == 0) continue;
        Rational f = at(r, col);
        for (int j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
      }
    } else {
      for (int r = 0; r < rows_; ++r) {
        if (r == row || at(r, col) == 0) continue;
        Rational f = at(r, col);
        for (int j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<int> QMat::rref_serial() { return rref_impl(false); }
std::vector<int> QMat::rref_parallel() { return rref_impl(true); }

std::vector<int> QMat::rref() {
  size_t cells = static_cast<size_t>(rows_) * cols_;
  bool parallel = cells >= g_rref_threshold && omp_get_max_threads() > 1;
  return rref_impl(parallel);
}

int QMat::rank() const {
  QMat tmp = *this;
  return static_cast<int>(tmp.rref().size());
}

std::optional<std::vector<Rational>> QMat::solve(const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("QMat::solve dimension mismatch");
  QMat aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
  std::vector<Rational> x(cols_, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
  return x;
}

std::vector<std::vector<Rational>> QMat::nullspace() const {
  QMat tmp = *this;
  std::vector<int> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -tmp.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> QMat::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("QMat::apply dimension mismatch");
  std::vector<Rational> r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

}  // namespace nhk
