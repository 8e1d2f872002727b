#include "nhk/fraction.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nhk {

std::pair<AffineForm, Rational> AffineForm::normalized(std::vector<long long> v,
                                                       Rational hk) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0)
    throw std::invalid_argument("affine form with zero coroot part");
  long long first = 0;
  for (long long x : v)
    if (x != 0) { first = x; break; }
  long long scale = first > 0 ? g : -g;
  for (auto& x : v) x /= scale;
  hk /= rat(scale);
  return {AffineForm{std::move(v), std::move(hk)}, rat(scale)};
}

AffineForm AffineForm::node(const EvalContext& ctx, int i) {
  const RootDatum& d = *ctx.datum;
  if (i == 0)
    return AffineForm{d.highest_root().cv.c, -ctx.hbar_unit()};
  std::vector<long long> v(d.rank(), 0);
  v.at(i - 1) = 1;
  return AffineForm{std::move(v), Rational(0)};
}

SparsePoly AffineForm::to_poly(const EvalContext& ctx) const {
  if (ctx.hbar)
    return SparsePoly::linear(ctx.nvars(), coroot, Rational(0), hk);
  return SparsePoly::linear(ctx.nvars(), coroot, hk);
}

std::pair<AffineForm, Rational> AffineForm::transformed(const EvalContext& ctx,
                                                        const ExtAffine& w) const {
  // form o w^{-1}: v' = (M^{-1})^T v, and the h part picks up -<mu, v'> in
  // units of h (or of the specialized scalar).
  IntMat mt = w.finite_inverse().transpose();
  std::vector<long long> v2 = mt.apply(coroot);
  long long delta = 0;
  for (size_t i = 0; i < v2.size(); ++i) delta += w.translation_part()[i] * v2[i];
  return normalized(std::move(v2), hk - ctx.hbar_unit() * rat(delta));
}

std::string AffineForm::str(const EvalContext& ctx) const {
  return to_poly(ctx).str();
}

std::optional<SparsePoly> exact_divide(const SparsePoly& p, const SparsePoly& linear) {
  if (linear.is_zero()) throw std::invalid_argument("division by zero form");
  if (linear.degree() > 1)
    throw std::invalid_argument("divisor is not linear");
  if (p.is_zero()) return p;
  int pivot = -1;
  for (int i = 0; i < p.nvars(); ++i)
    if (linear.degree_in(i) == 1) { pivot = i; break; }
  if (pivot < 0) {
    // Constant divisor.
    return p * (Rational(1) / *linear.as_constant());
  }
  Monomial pm{std::vector<int>(p.nvars(), 0)};
  pm.e[pivot] = 1;
  Rational lead = linear.coeff(pm);

  SparsePoly rem = p;
  SparsePoly quot(p.nvars());
  while (rem.degree_in(pivot) >= 1) {
    int d = rem.degree_in(pivot);
    SparsePoly top(p.nvars());
    for (const auto& [m, c] : rem.terms())
      if (m.e[pivot] == d) {
        Monomial m2 = m;
        m2.e[pivot] = d - 1;
        top.add_term(std::move(m2), c / lead);
      }
    quot = quot + top;
    rem = rem - top * linear;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::optional<SparsePoly> exact_divide(const EvalContext& ctx, const SparsePoly& p,
                                       const AffineForm& form) {
  return exact_divide(p, form.to_poly(ctx));
}

RootFraction::RootFraction(const EvalContext& ctx, SparsePoly num,
                           std::map<AffineForm, int> den)
    : num_(std::move(num)), den_(std::move(den)) {
  reduce(ctx);
}

RootFraction RootFraction::zero(const EvalContext& ctx) {
  return RootFraction(SparsePoly(ctx.nvars()));
}

RootFraction RootFraction::one(const EvalContext& ctx) {
  return constant(ctx, 1);
}

RootFraction RootFraction::constant(const EvalContext& ctx, const Rational& c) {
  return RootFraction(SparsePoly::constant(ctx.nvars(), c));
}

RootFraction RootFraction::reciprocal_form(const EvalContext& ctx, AffineForm form) {
  return RootFraction(ctx, SparsePoly::constant(ctx.nvars(), 1),
                      {{std::move(form), 1}});
}

void RootFraction::reduce(const EvalContext& ctx) {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = den_.begin(); it != den_.end(); ++it) {
      if (auto q = exact_divide(ctx, num_, it->first)) {
        num_ = std::move(*q);
        if (--it->second == 0) den_.erase(it);
        progress = true;
        break;
      }
    }
  }
}

std::optional<SparsePoly> RootFraction::as_polynomial() const {
  if (!den_.empty()) return std::nullopt;
  return num_;
}

RootFraction RootFraction::add(const EvalContext& ctx, const RootFraction& a,
                               const RootFraction& b) {
  // Common denominator = multiset max; each numerator is scaled by the
  // missing forms.
  std::map<AffineForm, int> common = a.den_;
  for (const auto& [f, k] : b.den_) {
    auto it = common.find(f);
    if (it == common.end())
      common.emplace(f, k);
    else
      it->second = std::max(it->second, k);
  }
  SparsePoly na = a.num_, nb = b.num_;
  for (const auto& [f, k] : common) {
    auto ita = a.den_.find(f);
    int missing_a = k - (ita == a.den_.end() ? 0 : ita->second);
    auto itb = b.den_.find(f);
    int missing_b = k - (itb == b.den_.end() ? 0 : itb->second);
    if (missing_a > 0) na = na * f.to_poly(ctx).pow(missing_a);
    if (missing_b > 0) nb = nb * f.to_poly(ctx).pow(missing_b);
  }
  return RootFraction(ctx, na + nb, std::move(common));
}

RootFraction RootFraction::mul(const EvalContext& ctx, const RootFraction& a,
                               const RootFraction& b) {
  std::map<AffineForm, int> den = a.den_;
  for (const auto& [f, k] : b.den_) den[f] += k;
  return RootFraction(ctx, a.num_ * b.num_, std::move(den));
}

RootFraction RootFraction::negated() const {
  RootFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

RootFraction RootFraction::scaled(const Rational& c) const {
  if (c == 0) return RootFraction(SparsePoly(num_.nvars()));
  RootFraction r = *this;
  r.num_ = r.num_ * c;
  return r;
}

RootFraction RootFraction::reciprocal(const EvalContext& ctx) const {
  auto c = num_.as_constant();
  if (!c || *c == 0)
    throw std::invalid_argument("reciprocal requires a nonzero constant numerator");
  SparsePoly num = SparsePoly::constant(ctx.nvars(), Rational(1) / *c);
  for (const auto& [f, k] : den_) num = num * f.to_poly(ctx).pow(k);
  return RootFraction(std::move(num));
}

RootFraction RootFraction::applied(const EvalContext& ctx, const ExtAffine& w) const {
  auto pm = w.inverse_point_map();
  SparsePoly num = num_.substitute_linear(pm.matrix, pm.hbar_shift, ctx.hbar);
  std::map<AffineForm, int> den;
  for (const auto& [f, k] : den_) {
    // w ~> f = scale * tf, so the fraction picks up scale^{-k}.
    auto [tf, scale] = f.transformed(ctx, w);
    den[tf] += k;
    Rational factor = 1;
    for (int i = 0; i < k; ++i) factor /= scale;
    num = num * factor;
  }
  return RootFraction(ctx, std::move(num), std::move(den));
}

SparsePoly RootFraction::den_poly(const EvalContext& ctx) const {
  SparsePoly d = SparsePoly::constant(ctx.nvars(), 1);
  for (const auto& [f, k] : den_) d = d * f.to_poly(ctx).pow(k);
  return d;
}

std::string RootFraction::str(const EvalContext& ctx) const {
  if (den_.empty()) return num_.str();
  std::ostringstream out;
  out << "(" << num_.str() << ") / (";
  bool first = true;
  for (const auto& [f, k] : den_) {
    if (!first) out << " * ";
    first = false;
    out << "(" << f.str(ctx) << ")";
    if (k > 1) out << "^" << k;
  }
  out << ")";
  return out.str();
}

}  // namespace nhk
