#include "nhk/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace nhk {

SkewElement SkewElement::unit(const EvalContext& ctx) {
  return group(ctx, ExtAffine::identity(*ctx.datum));
}

SkewElement SkewElement::group(const EvalContext& ctx, const ExtAffine& w) {
  SkewElement e(ctx);
  e.add_term(w, RootFraction::one(ctx));
  return e;
}

SkewElement SkewElement::coeff(const EvalContext& ctx, RootFraction c) {
  SkewElement e(ctx);
  e.add_term(ExtAffine::identity(*ctx.datum), c);
  return e;
}

SkewElement SkewElement::poly(const EvalContext& ctx, const SparsePoly& p) {
  return coeff(ctx, RootFraction(p));
}

RootFraction SkewElement::coeff_of(const ExtAffine& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RootFraction::zero(ctx_) : it->second;
}

void SkewElement::add_term(const ExtAffine& w, const RootFraction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second = RootFraction::add(ctx_, it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
  require_same(ctx_, o.ctx_);
  SkewElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

SkewElement SkewElement::operator-(const SkewElement& o) const {
  return *this + (-o);
}

SkewElement SkewElement::operator-() const {
  SkewElement r(ctx_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.negated());
  return r;
}

SkewElement SkewElement::scaled(const Rational& c) const {
  SkewElement r(ctx_);
  if (c == 0) return r;
  for (const auto& [w, f] : terms_) r.terms_.emplace(w, f.scaled(c));
  return r;
}

SkewElement SkewElement::operator*(const SkewElement& o) const {
  require_same(ctx_, o.ctx_);
  SkewElement r(ctx_);
  for (const auto& [u, c] : terms_)
    for (const auto& [v, d] : o.terms_) {
      RootFraction twisted = d.applied(ctx_, u);
      r.add_term(u * v, RootFraction::mul(ctx_, c, twisted));
    }
  return r;
}

RootFraction SkewElement::act(const SparsePoly& f) const {
  RootFraction acc = RootFraction::zero(ctx_);
  for (const auto& [w, c] : terms_) {
    auto pm = w.inverse_point_map();
    SparsePoly moved = f.substitute_linear(pm.matrix, pm.hbar_shift, ctx_.hbar);
    acc = RootFraction::add(ctx_, acc,
                            RootFraction::mul(ctx_, c, RootFraction(moved)));
  }
  return acc;
}

std::string SkewElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str(ctx_) << ")*[t=";
    for (size_t i = 0; i < w.translation_part().size(); ++i)
      out << (i ? "," : "") << w.translation_part()[i];
    out << ";w=";
    for (int i = 0; i < w.finite_matrix().n; ++i)
      for (int j = 0; j < w.finite_matrix().n; ++j)
        out << w.finite_matrix().at(i, j) << ((i + 1 == w.finite_matrix().n &&
                                               j + 1 == w.finite_matrix().n)
                                                  ? ""
                                                  : " ");
    out << "]";
  }
  return out.str();
}

SkewElement theta_simple(const EvalContext& ctx, int i) {
  const RootDatum& d = *ctx.datum;
  AffineForm form = AffineForm::node(ctx, i);
  RootFraction inv = RootFraction::reciprocal_form(ctx, form);
  SkewElement e(ctx);
  e.add_term(ExtAffine::simple_reflection(d, i), inv);
  e.add_term(ExtAffine::identity(d), inv.negated());
  return e;
}

SkewElement theta_root(const EvalContext& ctx, const Root& beta) {
  const RootDatum& d = *ctx.datum;
  auto cls = d.classify_root(beta.wt.c);
  if (!cls) throw std::invalid_argument("theta_root: not a root of the datum");
  // Deterministic conjugator: breadth-first search from the simple roots.
  struct Node {
    ExtAffine w;
    int simple;
  };
  std::map<std::vector<long long>, Node> seen;
  std::vector<std::vector<long long>> frontier;
  for (int j = 0; j < d.rank(); ++j) {
    auto wc = d.simple_root(j).c;
    seen.emplace(wc, Node{ExtAffine::identity(d), j});
    frontier.push_back(wc);
  }
  while (!seen.count(beta.wt.c)) {
    if (frontier.empty())
      throw std::logic_error("conjugation orbit search exhausted");
    std::vector<std::vector<long long>> next;
    for (const auto& wc : frontier) {
      const Node& node = seen.at(wc);
      for (int i = 1; i <= d.rank(); ++i) {
        ExtAffine s = ExtAffine::simple_reflection(d, i);
        auto img = s.finite_matrix().apply(wc);
        if (seen.emplace(img, Node{s * node.w, node.simple}).second)
          next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  const Node& node = seen.at(beta.wt.c);
  SkewElement conj = SkewElement::group(ctx, node.w);
  SkewElement conj_inv = SkewElement::group(ctx, node.w.inverse());
  return conj * theta_simple(ctx, node.simple + 1) * conj_inv;
}

SkewElement group_embed(const EvalContext& ctx, const ExtAffine& w) {
  return SkewElement::group(ctx, w);
}

SparsePoly coroot_poly(const EvalContext& ctx, const Coroot& v) {
  return SparsePoly::linear(ctx.nvars(), v.c);
}

bool check_ddh(const EvalContext& ctx, const Weight& mu, const Coroot& xi) {
  const RootDatum& d = *ctx.datum;
  SkewElement e_mu = SkewElement::group(ctx, ExtAffine::translation(mu));
  SkewElement xi_elem = SkewElement::poly(ctx, coroot_poly(ctx, xi));
  Rational pairing = rat(d.pairing(mu, xi));
  SparsePoly shift =
      ctx.hbar ? SparsePoly::constant(ctx.nvars(), pairing * *ctx.hbar)
               : SparsePoly::hbar(ctx.nvars()) * pairing;
  SkewElement rhs_inner =
      SkewElement::poly(ctx, coroot_poly(ctx, xi) + shift);
  return xi_elem * e_mu == e_mu * rhs_inner;
}

}  // namespace nhk
