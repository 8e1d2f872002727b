#include "nhk/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nhk/rational.hpp"

namespace nhk {

IntMat IntMat::inverse() const {
  // Rational Gauss-Jordan; the result must come out integral (all inverses we
  // take are of unimodular matrices).
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = rat(at(i, j));
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::invalid_argument("IntMat::inverse: singular matrix");
    std::swap(m[col], m[piv]);
    Rational d = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  IntMat inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = m[i][n + j];
      if (v.get_den() != 1)
        throw std::invalid_argument("IntMat::inverse: non-integral inverse");
      inv.at(i, j) = static_cast<long long>(v.get_num().get_si());
    }
  return inv;
}

namespace {

void check_same_datum(const RootDatum* a, const RootDatum* b) {
  if (a == nullptr || a != b)
    throw std::invalid_argument("operands belong to different root data");
}

struct ExtGcd {
  long long g, s, t;  // g = s*a + t*b, g >= 0
};

ExtGcd ext_gcd(long long a, long long b) {
  if (b == 0) return a >= 0 ? ExtGcd{a, 1, 0} : ExtGcd{-a, -1, 0};
  ExtGcd r = ext_gcd(b, a % b);
  return ExtGcd{r.g, r.t, r.s - (a / b) * r.t};
}

// Cartan matrices with the convention cartan[i][j] = <alpha_j, coroot_i>.
// Multiply-laced rows: the *row* of the short root carries the -2/-3 entry.
IntMat cartan_for(const std::string& label, int rank) {
  IntMat m = IntMat::identity(rank);
  for (int i = 0; i < rank; ++i) m.at(i, i) = 2;
  auto bond = [&m](int i, int j, long long aij, long long aji) {
    m.at(i, j) = aij;
    m.at(j, i) = aji;
  };
  char family = label[0];
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_rank short
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1, -1, -1);
      bond(rank - 2, rank - 1, -1, -2);
      break;
    case 'C':  // alpha_rank long
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1, -1, -1);
      bond(rank - 2, rank - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 3 < rank; ++i) bond(i, i + 1, -1, -1);
      bond(rank - 3, rank - 2, -1, -1);
      bond(rank - 3, rank - 1, -1, -1);
      break;
    case 'E': {
      // Bourbaki numbering: chain 1-3-4-5-...-rank, with node 2 on node 4.
      bond(0, 2, -1, -1);
      for (int i = 2; i + 1 < rank; ++i) bond(i, i + 1, -1, -1);
      bond(1, 3, -1, -1);
      break;
    }
    case 'F':
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);  // alpha_3, alpha_4 short
      bond(2, 3, -1, -1);
      break;
    case 'G':
      bond(0, 1, -3, -1);  // alpha_1 short; highest root 3a1 + 2a2
      break;
  }
  return m;
}

long long expected_root_count(char family, int rank) {
  switch (family) {
    case 'A': return static_cast<long long>(rank) * (rank + 1);
    case 'B':
    case 'C': return 2LL * rank * rank;
    case 'D': return 2LL * rank * (rank - 1);
    case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return -1;
}

long long weyl_order_for(char family, int rank) {
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (family) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return (1LL << rank) * fact(rank);
    case 'D': return (1LL << (rank - 1)) * fact(rank);
    case 'E': return rank == 6 ? 51840LL : rank == 7 ? 2903040LL : 696729600LL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return -1;
}

}  // namespace

Weight Weight::operator+(const Weight& o) const {
  check_same_datum(datum, o.datum);
  Weight r{datum, c};
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  Weight r{datum, c};
  for (auto& x : r.c) x = -x;
  return r;
}

Weight Weight::operator*(long long k) const {
  Weight r{datum, c};
  for (auto& x : r.c) x *= k;
  return r;
}

Coroot Coroot::operator+(const Coroot& o) const {
  check_same_datum(datum, o.datum);
  Coroot r{datum, c};
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Coroot Coroot::operator-() const {
  Coroot r{datum, c};
  for (auto& x : r.c) x = -x;
  return r;
}

RootDatum RootDatum::build(const std::string& label) {
  if (label.size() < 2)
    throw std::invalid_argument("unknown Cartan type: '" + label + "'");
  char family = label[0];
  int rank = 0;
  try {
    size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used + 1 != label.size()) rank = -1;
  } catch (...) {
    rank = -1;
  }
  auto reject = [&label]() {
    throw std::invalid_argument("unknown Cartan type: '" + label +
                                "' (supported: A_r, B_r r>=2, C_r r>=2, "
                                "D_r r>=4, E6-E8, F4, G2)");
  };
  if (rank < 1 || rank > 16) reject();
  switch (family) {
    case 'A': break;
    case 'B':
    case 'C':
      if (rank < 2) reject();
      break;
    case 'D':
      if (rank < 4) reject();
      break;
    case 'E':
      if (rank < 6 || rank > 8) reject();
      break;
    case 'F':
      if (rank != 4) reject();
      break;
    case 'G':
      if (rank != 2) reject();
      break;
    default:
      reject();
  }

  RootDatum d;
  d.label_ = label;
  d.rank_ = rank;
  d.cartan_ = cartan_for(label, rank);
  d.weyl_order_ = weyl_order_for(family, rank);
  d.convention_ =
      "x_i = <x, coroot_i>; weights in fundamental-weight coordinates; "
      "coroots in simple-coroot coordinates; cartan[i][j] = <alpha_j, coroot_i>";
  d.generate_roots();
  d.validate();
  return d;
}

void RootDatum::generate_roots() {
  const int r = rank_;
  // Closure of the simple roots under simple reflections. A root is carried
  // as (root coords, coroot coords); weight coords are cartan * root coords.
  using Vec = std::vector<long long>;
  std::map<Vec, Vec> seen;  // root coords -> coroot coords
  std::vector<Vec> work;
  for (int j = 0; j < r; ++j) {
    Vec rc(r, 0), cv(r, 0);
    rc[j] = 1;
    cv[j] = 1;
    seen.emplace(rc, cv);
    work.push_back(rc);
  }
  while (!work.empty()) {
    Vec rc = work.back();
    work.pop_back();
    Vec cv = seen.at(rc);
    for (int i = 0; i < r; ++i) {
      // <beta, coroot_i> = (cartan * rc)_i ; <alpha_i, beta-coroot> = sum_k cv_k a_{ki}
      long long p = 0, q = 0;
      for (int k = 0; k < r; ++k) {
        p += cartan_.at(i, k) * rc[k];
        q += cv[k] * cartan_.at(k, i);
      }
      Vec rc2 = rc, cv2 = cv;
      rc2[i] -= p;
      cv2[i] -= q;
      if (seen.emplace(rc2, cv2).second) work.push_back(rc2);
    }
  }

  for (auto& [rc, cv] : seen) {
    bool pos = true, neg = true;
    for (long long x : rc) {
      if (x < 0) pos = false;
      if (x > 0) neg = false;
    }
    if (!pos && !neg)
      throw std::logic_error("root closure produced a mixed-sign vector");
    if (!pos) continue;
    Root root;
    root.root_coords = rc;
    root.cv = Coroot{this, cv};
    Vec wc(r, 0);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) wc[i] += cartan_.at(i, k) * rc[k];
    root.wt = Weight{this, wc};
    root.height = std::accumulate(rc.begin(), rc.end(), 0LL);
    positive_.push_back(std::move(root));
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    return std::pair(a.height, a.root_coords) < std::pair(b.height, b.root_coords);
  });
  for (int i = 0; i < static_cast<int>(positive_.size()); ++i)
    index_[positive_[i].wt.c] = i;

  // Highest root: delta + alpha_i is not a root for any i.
  for (int i = 0; i < static_cast<int>(positive_.size()); ++i) {
    bool top = true;
    for (int j = 0; j < rank_ && top; ++j) {
      auto sum = positive_[i].root_coords;
      sum[j] += 1;
      Vec wc(rank_, 0);
      for (int a = 0; a < rank_; ++a)
        for (int k = 0; k < rank_; ++k) wc[a] += cartan_.at(a, k) * sum[k];
      if (index_.count(wc)) top = false;
    }
    if (top) {
      if (highest_ >= 0)
        throw std::logic_error("highest root is not unique in " + label_);
      highest_ = i;
    }
  }
  if (highest_ < 0) throw std::logic_error("no highest root found in " + label_);

  IntMat cm(rank_);
  det_ = 1;
  {
    // Integer determinant of the Cartan matrix via rational elimination.
    std::vector<std::vector<Rational>> m(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) m[i][j] = rat(cartan_.at(i, j));
    Rational det = 1;
    for (int col = 0; col < rank_; ++col) {
      int piv = -1;
      for (int row = col; row < rank_; ++row)
        if (m[row][col] != 0) { piv = row; break; }
      if (piv < 0) { det = 0; break; }
      if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
      det *= m[col][col];
      for (int row = col + 1; row < rank_; ++row) {
        Rational f = m[row][col] / m[col][col];
        for (int j = col; j < rank_; ++j) m[row][j] -= f * m[col][j];
      }
    }
    det_ = static_cast<long long>(Rational(det).get_num().get_si());
  }
}

void RootDatum::validate() const {
  for (int i = 0; i < rank_; ++i) {
    if (cartan_.at(i, i) != 2)
      throw std::logic_error("Cartan diagonal entry != 2");
    for (int j = 0; j < rank_; ++j)
      if (i != j && cartan_.at(i, j) > 0)
        throw std::logic_error("positive off-diagonal Cartan entry");
  }
  long long expected = expected_root_count(label_[0], rank_);
  if (2 * static_cast<long long>(positive_.size()) != expected)
    throw std::logic_error("unexpected root count for " + label_);

  // The highest root must have strictly maximal height.
  for (int i = 0; i < static_cast<int>(positive_.size()); ++i)
    if (i != highest_ && positive_[i].height >= positive_[highest_].height)
      throw std::logic_error("highest root does not maximize height");

  if (rank_ <= 4) {
    // Orbit search: every root is Weyl-conjugate to a simple root.
    std::set<std::vector<long long>> orbit;
    std::vector<std::vector<long long>> work;
    for (int j = 0; j < rank_; ++j) {
      auto wc = simple_root(j).c;
      if (orbit.insert(wc).second) work.push_back(wc);
    }
    while (!work.empty()) {
      auto wc = work.back();
      work.pop_back();
      for (int i = 0; i < rank_; ++i) {
        auto img = wc;
        long long pi = wc[i];
        for (int k = 0; k < rank_; ++k) img[k] -= pi * cartan_.at(k, i);
        if (orbit.insert(img).second) work.push_back(img);
      }
    }
    for (const auto& root : positive_)
      if (!orbit.count(root.wt.c))
        throw std::logic_error("root not conjugate to a simple root");
  }
}

Weight RootDatum::weight(std::vector<long long> coords) const {
  if (static_cast<int>(coords.size()) != rank_)
    throw std::invalid_argument("weight coordinate size mismatch");
  return Weight{this, std::move(coords)};
}

Coroot RootDatum::coroot(std::vector<long long> coords) const {
  if (static_cast<int>(coords.size()) != rank_)
    throw std::invalid_argument("coroot coordinate size mismatch");
  return Coroot{this, std::move(coords)};
}

Weight RootDatum::zero_weight() const {
  return Weight{this, std::vector<long long>(rank_, 0)};
}

Weight RootDatum::fundamental_weight(int j) const {
  std::vector<long long> c(rank_, 0);
  c.at(j) = 1;
  return Weight{this, std::move(c)};
}

Weight RootDatum::simple_root(int j) const {
  std::vector<long long> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = cartan_.at(i, j);
  return Weight{this, std::move(c)};
}

Coroot RootDatum::simple_coroot(int j) const {
  std::vector<long long> c(rank_, 0);
  c.at(j) = 1;
  return Coroot{this, std::move(c)};
}

long long RootDatum::pairing(const Weight& mu, const Coroot& v) const {
  check_same_datum(this, mu.datum);
  check_same_datum(this, v.datum);
  long long p = 0;
  for (int i = 0; i < rank_; ++i) p += mu.c[i] * v.c[i];
  return p;
}

Weight RootDatum::find_weight_pairing_one(const Coroot& v) const {
  check_same_datum(this, v.datum);
  long long g = 0;
  std::vector<long long> mu(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    if (v.c[i] == 0) continue;
    ExtGcd e = ext_gcd(g, v.c[i]);
    for (auto& x : mu) x *= e.s;
    mu[i] += e.t;
    g = e.g;
  }
  if (g != 1)
    throw std::invalid_argument(
        "no weight pairs to 1 with the given coroot: gcd = " + std::to_string(g));
  return Weight{this, std::move(mu)};
}

std::optional<std::pair<int, int>> RootDatum::classify_root(
    const std::vector<long long>& wc) const {
  auto it = index_.find(wc);
  if (it != index_.end()) return std::pair(it->second, +1);
  std::vector<long long> neg(wc);
  for (auto& x : neg) x = -x;
  it = index_.find(neg);
  if (it != index_.end()) return std::pair(it->second, -1);
  return std::nullopt;
}

}  // namespace nhk
