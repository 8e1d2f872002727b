#include "nhk/torus.hpp"

#include <stdexcept>

namespace nhk {

TorusMixed TorusMixed::one(const EvalContext& ctx) {
  TorusMixed t(ctx);
  t.add_term(std::vector<long long>(ctx.rank(), 0), RootFraction::one(ctx));
  return t;
}

TorusMixed TorusMixed::monomial(const EvalContext& ctx, const Weight& mu) {
  TorusMixed t(ctx);
  t.add_term(mu.c, RootFraction::one(ctx));
  return t;
}

TorusMixed TorusMixed::fraction(const EvalContext& ctx, RootFraction f) {
  TorusMixed t(ctx);
  t.add_term(std::vector<long long>(ctx.rank(), 0), std::move(f));
  return t;
}

void TorusMixed::add_term(const std::vector<long long>& exponent,
                          const RootFraction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, c);
    return;
  }
  it->second = RootFraction::add(ctx_, it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

TorusMixed TorusMixed::operator+(const TorusMixed& o) const {
  require_same(ctx_, o.ctx_);
  TorusMixed r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

TorusMixed TorusMixed::operator-(const TorusMixed& o) const { return *this + (-o); }

TorusMixed TorusMixed::operator-() const {
  TorusMixed r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.negated());
  return r;
}

TorusMixed TorusMixed::operator*(const TorusMixed& o) const {
  require_same(ctx_, o.ctx_);
  TorusMixed r(ctx_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<long long> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, RootFraction::mul(ctx_, ca, cb));
    }
  return r;
}

TorusMixed TorusMixed::applied(const ExtAffine& w) const {
  TorusMixed r(ctx_);
  for (const auto& [e, c] : terms_)
    r.add_term(w.finite_matrix().apply(e), c.applied(ctx_, w));
  return r;
}

TorusSkew TorusSkew::group(const EvalContext& ctx, const ExtAffine& w) {
  if (!w.is_finite())
    throw std::invalid_argument("TorusSkew takes finite Weyl elements");
  TorusSkew t(ctx);
  t.add_term(w, TorusMixed::one(ctx));
  return t;
}

TorusSkew TorusSkew::coeff(const EvalContext& ctx, TorusMixed c) {
  TorusSkew t(ctx);
  t.add_term(ExtAffine::identity(*ctx.datum), std::move(c));
  return t;
}

ExtAffine TorusSkew::finite_elem(const IntMat& m) const {
  return ExtAffine(*ctx_.datum, std::vector<long long>(ctx_.rank(), 0), m);
}

void TorusSkew::add_term(const ExtAffine& w, const TorusMixed& c) {
  if (!w.is_finite())
    throw std::invalid_argument("TorusSkew takes finite Weyl elements");
  if (c.is_zero()) return;
  auto it = terms_.find(w.finite_matrix());
  if (it == terms_.end()) {
    terms_.emplace(w.finite_matrix(), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

TorusSkew TorusSkew::operator+(const TorusSkew& o) const {
  require_same(ctx_, o.ctx_);
  TorusSkew r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(finite_elem(m), c);
  return r;
}

TorusSkew TorusSkew::operator-(const TorusSkew& o) const {
  TorusSkew neg(o.ctx_);
  for (const auto& [m, c] : o.terms_) neg.terms_.emplace(m, -c);
  return *this + neg;
}

TorusSkew TorusSkew::operator*(const TorusSkew& o) const {
  require_same(ctx_, o.ctx_);
  TorusSkew r(ctx_);
  for (const auto& [ma, ca] : terms_) {
    ExtAffine u = finite_elem(ma);
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(finite_elem(ma * mb), ca * cb.applied(u));
  }
  return r;
}

}  // namespace nhk
