#include "nhk/poly.hpp"

#include <omp.h>

#include <atomic>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nhk {

namespace {
std::atomic<size_t> g_parallel_threshold{4096};
}

void SparsePoly::set_parallel_threshold(size_t t) { g_parallel_threshold = t; }
size_t SparsePoly::parallel_threshold() { return g_parallel_threshold; }

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial{std::vector<int>(nvars, 0)}, c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw std::invalid_argument("variable index out of range");
  SparsePoly p(nvars);
  Monomial m{std::vector<int>(nvars, 0)};
  m.e[index] = 1;
  p.add_term(std::move(m), 1);
  return p;
}

SparsePoly SparsePoly::linear(int nvars, const std::vector<long long>& coeffs,
                              const Rational& hbar_coeff,
                              const Rational& constant_term) {
  if (static_cast<int>(coeffs.size()) > nvars)
    throw std::invalid_argument("too many linear coefficients");
  SparsePoly p(nvars);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m{std::vector<int>(nvars, 0)};
    m.e[i] = 1;
    p.add_term(std::move(m), rat(coeffs[i]));
  }
  if (hbar_coeff != 0) {
    Monomial m{std::vector<int>(nvars, 0)};
    m.e[nvars - 1] = 1;
    p.add_term(std::move(m), hbar_coeff);
  }
  if (constant_term != 0)
    p.add_term(Monomial{std::vector<int>(nvars, 0)}, constant_term);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

std::optional<Rational> SparsePoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

int SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int SparsePoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
  return d;
}

Rational SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(Monomial m, Rational c) {
  if (c == 0) return;
  if (static_cast<int>(m.e.size()) != nvars_)
    throw std::invalid_argument("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const Rational& c) const {
  SparsePoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) { return p * c; }

SparsePoly SparsePoly::mul_serial(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  SparsePoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (int i = 0; i < r.nvars_; ++i) m.e[i] += mb.e[i];
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

SparsePoly SparsePoly::mul_parallel(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  std::vector<const std::pair<const Monomial, Rational>*> at;
  at.reserve(a.terms_.size());
  for (const auto& t : a.terms_) at.push_back(&t);

  int nthreads = omp_get_max_threads();
  std::vector<std::map<Monomial, Rational>> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
  {
    auto& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (size_t i = 0; i < at.size(); ++i) {
      const auto& [ma, ca] = *at[i];
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (int v = 0; v < a.nvars_; ++v) m.e[v] += mb.e[v];
        Rational prod = ca * cb;
        auto it = mine.find(m);
        if (it == mine.end())
          mine.emplace(std::move(m), std::move(prod));
        else
          it->second += prod;
      }
    }
  }
  SparsePoly r(a.nvars_);
  for (auto& part : partial)
    for (auto& [m, c] : part) r.add_term(m, std::move(c));
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  size_t work = terms_.size() * o.terms_.size();
  if (work >= g_parallel_threshold && omp_get_max_threads() > 1)
    return mul_parallel(*this, o);
  return mul_serial(*this, o);
}

SparsePoly SparsePoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  SparsePoly r = constant(nvars_, 1);
  SparsePoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitution image count mismatch");
  int out_vars = images.empty() ? nvars_ : images.front().nvars();
  // Per-variable power caches keep repeated exponents cheap.
  std::vector<std::vector<SparsePoly>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i)
    powers[i].push_back(constant(out_vars, 1));
  SparsePoly r(out_vars);
  for (const auto& [m, c] : terms_) {
    SparsePoly term = constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i) {
      int e = m.e[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      while (static_cast<int>(cache.size()) <= e)
        cache.push_back(cache.back() * images[i]);
      term = term * cache[e];
    }
    r = r + term;
  }
  return r;
}

SparsePoly SparsePoly::substitute_linear(
    const IntMat& matrix, const std::vector<long long>& hbar_shift,
    const std::optional<Rational>& hbar_value) const {
  int r = nvars_ - 1;
  if (matrix.n != r || static_cast<int>(hbar_shift.size()) != r)
    throw std::invalid_argument("substitution dimension mismatch");
  std::vector<SparsePoly> images;
  images.reserve(nvars_);
  for (int i = 0; i < r; ++i) {
    std::vector<long long> row(r);
    for (int j = 0; j < r; ++j) row[j] = matrix.at(i, j);
    if (hbar_value)
      images.push_back(linear(nvars_, row, Rational(0), *hbar_value * rat(hbar_shift[i])));
    else
      images.push_back(linear(nvars_, row, rat(hbar_shift[i])));
  }
  images.push_back(hbar(nvars_));
  return substitute(images);
}

SparsePoly SparsePoly::specialize_hbar(const Rational& c) const {
  SparsePoly r(nvars_);
  for (const auto& [m, coeff] : terms_) {
    int k = m.e[nvars_ - 1];
    Monomial m2 = m;
    m2.e[nvars_ - 1] = 0;
    Rational scaled = coeff;
    for (int i = 0; i < k; ++i) scaled *= c;
    r.add_term(std::move(m2), std::move(scaled));
  }
  return r;
}

std::map<int, SparsePoly> SparsePoly::homogeneous_parts() const {
  std::map<int, SparsePoly> parts;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = parts.emplace(m.degree(), SparsePoly(nvars_));
    it->second.add_term(m, c);
  }
  return parts;
}

SparsePoly SparsePoly::homogeneous_part(int d) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = m.degree() > 0;
    if (a != 1 || !has_vars) out << a.get_str();
    bool printed = (a != 1 || !has_vars);
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (printed) out << "*";
      printed = true;
      if (i == nvars_ - 1)
        out << "h";
      else
        out << "x" << (i + 1);
      if (m.e[i] > 1) out << "^" << m.e[i];
    }
  }
  return out.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;
  int nvars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  Rational number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    std::string num = s.substr(start, pos - start);
    if (eat('/')) {
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (dstart == pos) fail("expected a denominator");
      num += "/" + s.substr(dstart, pos - dstart);
    }
    return rational_parse(num);
  }

  int exponent() {
    if (!eat('^')) return 1;
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected an exponent");
    return std::stoi(s.substr(start, pos - start));
  }

  // factor := number | x<k>[^e] | h[^e]
  bool factor(Rational& coeff, Monomial& mono) {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= number();
      return true;
    }
    if (c == 'h') {
      ++pos;
      mono.e[nvars - 1] += exponent();
      return true;
    }
    if (c == 'x') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected a variable index after 'x'");
      int idx = std::stoi(s.substr(start, pos - start));
      if (idx < 1 || idx > nvars - 1) fail("variable index out of range");
      mono.e[idx - 1] += exponent();
      return true;
    }
    return false;
  }

  SparsePoly run() {
    SparsePoly p(nvars);
    bool expect_term = true;
    int sign = +1;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) { sign = +1; expect_term = true; continue; }
      if (eat('-')) { sign = -sign; expect_term = true; continue; }
      if (!expect_term) fail("expected '+' or '-'");
      Rational coeff = sign;
      Monomial mono{std::vector<int>(nvars, 0)};
      if (!factor(coeff, mono)) fail("expected a term");
      while (eat('*'))
        if (!factor(coeff, mono)) fail("expected a factor after '*'");
      p.add_term(std::move(mono), std::move(coeff));
      expect_term = false;
      sign = +1;
    }
    if (expect_term && !p.is_zero()) fail("dangling sign");
    return p;
  }
};

}  // namespace

SparsePoly SparsePoly::parse(int nvars, const std::string& text) {
  PolyParser parser{text, 0, nvars};
  return parser.run();
}

}  // namespace nhk
