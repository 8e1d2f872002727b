#include "nhk/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace nhk {

namespace {

IntMat reflection_matrix(const RootDatum& d, const Root& beta) {
  // mu |-> mu - <mu, beta-coroot> beta, as a matrix on weight coordinates.
  const int r = d.rank();
  IntMat m = IntMat::identity(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m.at(i, j) -= beta.wt.c[i] * beta.cv.c[j];
  return m;
}

}  // namespace

ExtAffine::ExtAffine(const RootDatum& datum, std::vector<long long> translation,
                     IntMat finite)
    : datum_(&datum), t_(std::move(translation)), w_(std::move(finite)) {
  if (static_cast<int>(t_.size()) != datum.rank() || w_.n != datum.rank())
    throw std::invalid_argument("ExtAffine: dimension mismatch");
  winv_ = w_.inverse();
  len_ = nhk::length(*this);
}

ExtAffine ExtAffine::identity(const RootDatum& d) {
  return ExtAffine(d, std::vector<long long>(d.rank(), 0), IntMat::identity(d.rank()));
}

ExtAffine ExtAffine::simple_reflection(const RootDatum& d, int i) {
  if (i < 0 || i > d.rank())
    throw std::invalid_argument("affine simple index out of range");
  if (i == 0) {
    // t_delta . s_delta: fixes the hyperplane <x, delta-coroot> = hbar.
    const Root& delta = d.highest_root();
    return ExtAffine(d, delta.wt.c, reflection_matrix(d, delta));
  }
  const Root& alpha = d.positive_roots()[d.classify_root(d.simple_root(i - 1).c)->first];
  return ExtAffine(d, std::vector<long long>(d.rank(), 0), reflection_matrix(d, alpha));
}

ExtAffine ExtAffine::translation(const Weight& mu) {
  if (mu.datum == nullptr) throw std::invalid_argument("detached weight");
  return ExtAffine(*mu.datum, mu.c, IntMat::identity(mu.datum->rank()));
}

ExtAffine ExtAffine::root_reflection(const RootDatum& d, const Root& beta) {
  return ExtAffine(d, std::vector<long long>(d.rank(), 0), reflection_matrix(d, beta));
}

bool ExtAffine::is_identity() const {
  return is_finite() && w_.is_identity();
}

bool ExtAffine::is_finite() const {
  return std::all_of(t_.begin(), t_.end(), [](long long x) { return x == 0; });
}

ExtAffine ExtAffine::operator*(const ExtAffine& o) const {
  if (datum_ != o.datum_)
    throw std::invalid_argument("ExtAffine: operands from different data");
  // (t_mu u)(t_nu v) = t_{mu + u(nu)} (u v)
  std::vector<long long> t = w_.apply(o.t_);
  for (int i = 0; i < w_.n; ++i) t[i] += t_[i];
  return ExtAffine(*datum_, std::move(t), w_ * o.w_);
}

ExtAffine ExtAffine::inverse() const {
  // (t_mu w)^{-1} = t_{-w^{-1} mu} w^{-1}
  std::vector<long long> t = winv_.apply(t_);
  for (auto& x : t) x = -x;
  return ExtAffine(*datum_, std::move(t), winv_);
}

Weight ExtAffine::apply_finite(const Weight& mu) const {
  return Weight{datum_, w_.apply(mu.c)};
}

ExtAffine::PointMap ExtAffine::inverse_point_map() const {
  // w~^{-1} = t_{-w^{-1} mu} w^{-1} sends x to w^{-1} x - hbar w^{-1} mu.
  std::vector<long long> shift = winv_.apply(t_);
  for (auto& x : shift) x = -x;
  return PointMap{winv_, std::move(shift)};
}

int length(const ExtAffine& x) {
  const RootDatum& d = x.datum();
  long long total = 0;
  for (const Root& alpha : d.positive_roots()) {
    long long pairing = 0;
    for (int i = 0; i < d.rank(); ++i) pairing += x.translation_part()[i] * alpha.cv.c[i];
    auto pre = x.finite_inverse().apply(alpha.wt.c);
    bool pre_positive = d.classify_root(pre)->second > 0;
    total += pre_positive ? std::llabs(pairing) : std::llabs(pairing - 1);
  }
  return static_cast<int>(total);
}

bool is_right_descent(const ExtAffine& x, int i) {
  return (x * ExtAffine::simple_reflection(x.datum(), i)).length() < x.length();
}

std::pair<ExtAffine, std::vector<int>> reduced_word(const ExtAffine& x) {
  ExtAffine cur = x;
  std::vector<int> word;
  while (cur.length() > 0) {
    int descent = -1;
    for (int i = 0; i <= cur.datum().rank(); ++i)
      if (is_right_descent(cur, i)) { descent = i; break; }
    if (descent < 0)
      throw std::logic_error("positive length but no right descent");
    word.push_back(descent);
    cur = cur * ExtAffine::simple_reflection(cur.datum(), descent);
  }
  std::reverse(word.begin(), word.end());
  return {cur, word};
}

ExtAffine demazure_product(const RootDatum& d, const std::vector<int>& word) {
  ExtAffine w = ExtAffine::identity(d);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    ExtAffine cand = ExtAffine::simple_reflection(d, *it) * w;
    if (cand.length() > w.length()) w = std::move(cand);
  }
  return w;
}

std::vector<std::vector<int>> all_reduced_words(const ExtAffine& x) {
  if (x.length() == 0) return {{}};
  std::vector<std::vector<int>> words;
  for (int i = 0; i <= x.datum().rank(); ++i) {
    if (!is_right_descent(x, i)) continue;
    auto shorter = x * ExtAffine::simple_reflection(x.datum(), i);
    for (auto w : all_reduced_words(shorter)) {
      w.push_back(i);
      words.push_back(std::move(w));
    }
  }
  return words;
}

std::vector<ExtAffine> enumerate_finite_weyl(const RootDatum& d) {
  std::set<IntMat> seen;
  std::vector<ExtAffine> out;
  std::vector<ExtAffine> work{ExtAffine::identity(d)};
  seen.insert(work.front().finite_matrix());
  while (!work.empty()) {
    ExtAffine w = work.back();
    work.pop_back();
    out.push_back(w);
    for (int i = 1; i <= d.rank(); ++i) {
      ExtAffine next = w * ExtAffine::simple_reflection(d, i);
      if (seen.insert(next.finite_matrix()).second) work.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const ExtAffine& a, const ExtAffine& b) {
    return ExtAffineLess{}(a, b);
  });
  return out;
}

std::vector<ExtAffine> omega_group(const RootDatum& d) {
  std::vector<ExtAffine> gens{ExtAffine::identity(d)};
  for (int j = 0; j < d.rank(); ++j) {
    auto [omega, word] = reduced_word(ExtAffine::translation(d.fundamental_weight(j)));
    gens.push_back(omega);
  }
  std::set<std::pair<std::vector<long long>, IntMat>> seen;
  std::vector<ExtAffine> out, work;
  auto key = [](const ExtAffine& w) {
    return std::pair(w.translation_part(), w.finite_matrix());
  };
  for (const auto& g : gens)
    if (seen.insert(key(g)).second) work.push_back(g);
  const long long bound = d.fundamental_group_order();
  while (!work.empty()) {
    ExtAffine w = work.back();
    work.pop_back();
    if (w.length() != 0) throw std::logic_error("omega residue with nonzero length");
    out.push_back(w);
    if (static_cast<long long>(out.size()) > bound)
      throw std::logic_error("length-zero closure exceeds |X*/Q|");
    for (const auto& g : gens) {
      ExtAffine next = w * g;
      if (seen.insert(key(next)).second) work.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const ExtAffine& a, const ExtAffine& b) {
    return ExtAffineLess{}(a, b);
  });
  return out;
}

int braid_order(const RootDatum& d, int i, int j) {
  ExtAffine prod = ExtAffine::simple_reflection(d, i) * ExtAffine::simple_reflection(d, j);
  ExtAffine cur = prod;
  for (int m = 1; m <= 6; ++m) {
    if (cur.is_identity()) return m;
    cur = cur * prod;
  }
  return -1;
}

std::vector<ExtAffine> affine_elements_up_to(const RootDatum& d, int max_len) {
  std::set<std::pair<std::vector<long long>, IntMat>> seen;
  std::vector<ExtAffine> frontier{ExtAffine::identity(d)};
  std::vector<ExtAffine> out;
  seen.insert({frontier.front().translation_part(), frontier.front().finite_matrix()});
  for (int depth = 0; depth <= max_len && !frontier.empty(); ++depth) {
    std::vector<ExtAffine> next;
    for (const auto& w : frontier) {
      out.push_back(w);
      if (depth == max_len) continue;
      for (int i = 0; i <= d.rank(); ++i) {
        ExtAffine cand = w * ExtAffine::simple_reflection(d, i);
        if (cand.length() != depth + 1) continue;
        if (seen.insert({cand.translation_part(), cand.finite_matrix()}).second)
          next.push_back(cand);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace nhk
