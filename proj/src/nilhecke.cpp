#include "nhk/nilhecke.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nhk/linalg.hpp"

namespace nhk {

NilHeckeElement NilHeckeElement::zero(const EvalContext& ctx) {
  return NilHeckeElement(ctx);
}

NilHeckeElement NilHeckeElement::one(const EvalContext& ctx) {
  return poly(ctx, SparsePoly::constant(ctx.nvars(), 1));
}

NilHeckeElement NilHeckeElement::theta(const EvalContext& ctx, const ExtAffine& w) {
  NilHeckeElement u(ctx);
  u.add_term(w, SparsePoly::constant(ctx.nvars(), 1));
  return u;
}

NilHeckeElement NilHeckeElement::poly(const EvalContext& ctx, const SparsePoly& f) {
  NilHeckeElement u(ctx);
  u.add_term(ExtAffine::identity(*ctx.datum), f);
  return u;
}

SparsePoly NilHeckeElement::coeff_of(const ExtAffine& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? SparsePoly(ctx_.nvars()) : it->second;
}

void NilHeckeElement::add_term(const ExtAffine& w, const SparsePoly& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) terms_.erase(it);
}

NilHeckeElement NilHeckeElement::operator+(const NilHeckeElement& o) const {
  require_same(ctx_, o.ctx_);
  NilHeckeElement r = *this;
  for (const auto& [w, f] : o.terms_) r.add_term(w, f);
  return r;
}

NilHeckeElement NilHeckeElement::operator-(const NilHeckeElement& o) const {
  return *this + (-o);
}

NilHeckeElement NilHeckeElement::operator-() const {
  NilHeckeElement r(ctx_);
  for (const auto& [w, f] : terms_) r.terms_.emplace(w, -f);
  return r;
}

NilHeckeElement NilHeckeElement::scaled(const Rational& c) const {
  NilHeckeElement r(ctx_);
  if (c == 0) return r;
  for (const auto& [w, f] : terms_) r.terms_.emplace(w, f * c);
  return r;
}

std::string NilHeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, f] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << f.str() << ")*theta[t=";
    for (size_t i = 0; i < w.translation_part().size(); ++i)
      out << (i ? "," : "") << w.translation_part()[i];
    out << ";l=" << w.length() << "]";
  }
  return out.str();
}

const SkewElement& ThetaCache::get(const ExtAffine& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  auto [omega, word] = reduced_word(w);
  SkewElement e = SkewElement::group(ctx_, omega);
  for (int i : word) e = e * theta_simple(ctx_, i);
  return memo_.emplace(w, std::move(e)).first->second;
}

SkewElement theta_of(const EvalContext& ctx, const ExtAffine& w) {
  ThetaCache cache(ctx);
  return cache.get(w);
}

SkewElement expand(const NilHeckeElement& u) {
  const EvalContext& ctx = u.ctx();
  ThetaCache cache(ctx);
  SkewElement out = SkewElement::zero(ctx);
  for (const auto& [w, f] : u.terms()) {
    const SkewElement& theta = cache.get(w);
    for (const auto& [v, c] : theta.terms())
      out.add_term(v, RootFraction::mul(ctx, RootFraction(f), c));
  }
  return out;
}

MembershipResult membership(const SkewElement& u) {
  const EvalContext& ctx = u.ctx();
  ThetaCache cache(ctx);
  NilHeckeElement out(ctx);
  std::optional<MembershipWitness> witness;
  SkewElement rem = u;
  while (!rem.is_zero()) {
    // Maximal-length support element (ties broken by the canonical order).
    // Copies, since the subtraction below rewrites rem.
    ExtAffine w = rem.terms().rbegin()->first;
    RootFraction c = rem.terms().rbegin()->second;
    const SkewElement& theta = cache.get(w);
    RootFraction lead = theta.coeff_of(w);
    RootFraction f = RootFraction::mul(ctx, c, lead.reciprocal(ctx));
    if (auto p = f.as_polynomial()) {
      out.add_term(w, *p);
    } else if (!witness) {
      witness = MembershipWitness{w, f};
    }
    // Subtract f * theta_w; this cancels the coefficient at [w] exactly and
    // only touches strictly shorter support elements.
    for (const auto& [v, d] : theta.terms())
      rem.add_term(v, RootFraction::mul(ctx, f, d).negated());
  }
  if (witness) return {std::nullopt, witness};
  return {out, std::nullopt};
}

NilHeckeElement nh_mul(const NilHeckeElement& a, const NilHeckeElement& b) {
  require_same(a.ctx(), b.ctx());
  MembershipResult r = membership(expand(a) * expand(b));
  if (!r.ok())
    throw std::logic_error(
        "nh_mul: product left the algebra (implementation bug)");
  return *r.element;
}

namespace {

// theta_u * g as a normal form, by recursion along the canonical reduced word:
// theta_i g = s_i(g) theta_i + theta_i(g).
NilHeckeElement theta_times_poly(const EvalContext& ctx, const ExtAffine& u,
                                 const SparsePoly& g);

// a * theta_j, using theta_u theta_j = theta_{u s_j} when lengths add and 0
// otherwise.
NilHeckeElement right_mul_theta(const NilHeckeElement& a, int j) {
  const EvalContext& ctx = a.ctx();
  ExtAffine s = ExtAffine::simple_reflection(*ctx.datum, j);
  NilHeckeElement r(ctx);
  for (const auto& [u, f] : a.terms()) {
    ExtAffine us = u * s;
    if (us.length() == u.length() + 1) r.add_term(us, f);
  }
  return r;
}

// a * [omega] for a length-zero element: theta_u [omega] = theta_{u omega}.
NilHeckeElement right_mul_omega(const NilHeckeElement& a, const ExtAffine& omega) {
  if (omega.length() != 0)
    throw std::invalid_argument("right_mul_omega: not length zero");
  NilHeckeElement r(a.ctx());
  for (const auto& [u, f] : a.terms()) r.add_term(u * omega, f);
  return r;
}

NilHeckeElement right_mul_poly(const NilHeckeElement& a, const SparsePoly& g) {
  NilHeckeElement r(a.ctx());
  for (const auto& [u, f] : a.terms()) {
    NilHeckeElement part = theta_times_poly(a.ctx(), u, g);
    for (const auto& [v, h] : part.terms()) r.add_term(v, f * h);
  }
  return r;
}

NilHeckeElement theta_times_poly(const EvalContext& ctx, const ExtAffine& u,
                                 const SparsePoly& g) {
  if (g.is_zero()) return NilHeckeElement::zero(ctx);
  if (u.length() == 0) {
    // [omega] g = (omega ~> g) [omega].
    auto pm = u.inverse_point_map();
    NilHeckeElement r(ctx);
    r.add_term(u, g.substitute_linear(pm.matrix, pm.hbar_shift, ctx.hbar));
    return r;
  }
  auto [omega, word] = reduced_word(u);
  int j = word.back();
  ExtAffine s = ExtAffine::simple_reflection(*ctx.datum, j);
  ExtAffine shorter = u * s;
  auto spm = s.inverse_point_map();
  SparsePoly sg = g.substitute_linear(spm.matrix, spm.hbar_shift, ctx.hbar);
  auto div = exact_divide(ctx, sg - g, AffineForm::node(ctx, j));
  if (!div)
    throw std::logic_error("Demazure divisibility failed (implementation bug)");
  NilHeckeElement r = right_mul_theta(theta_times_poly(ctx, shorter, sg), j);
  NilHeckeElement tail = theta_times_poly(ctx, shorter, *div);
  for (const auto& [v, h] : tail.terms()) r.add_term(v, h);
  return r;
}

}  // namespace

NilHeckeElement nh_mul_straighten(const NilHeckeElement& a, const NilHeckeElement& b) {
  require_same(a.ctx(), b.ctx());
  NilHeckeElement out(a.ctx());
  for (const auto& [v, g] : b.terms()) {
    NilHeckeElement acc = right_mul_poly(a, g);
    auto [omega, word] = reduced_word(v);
    if (!omega.is_identity()) acc = right_mul_omega(acc, omega);
    for (int j : word) acc = right_mul_theta(acc, j);
    for (const auto& [w, f] : acc.terms()) out.add_term(w, f);
  }
  return out;
}

bool theta_word_invariance(const EvalContext& ctx, const ExtAffine& w,
                           const std::vector<int>& word1,
                           const std::vector<int>& word2) {
  auto check = [&](const std::vector<int>& word) {
    if (static_cast<int>(word.size()) != w.length())
      throw std::invalid_argument("word length does not match element length");
    ExtAffine prod = ExtAffine::identity(*ctx.datum);
    for (int i : word) prod = prod * ExtAffine::simple_reflection(*ctx.datum, i);
    auto [omega, canonical] = reduced_word(w);
    if (!(omega * prod == w))
      throw std::invalid_argument("word is not a reduced word for the element");
  };
  check(word1);
  check(word2);
  auto expand_word = [&](const std::vector<int>& word) {
    auto [omega, canonical] = reduced_word(w);
    SkewElement e = SkewElement::group(ctx, omega);
    for (int i : word) e = e * theta_simple(ctx, i);
    return e;
  };
  return expand_word(word1) == expand_word(word2);
}

std::map<int, NilHeckeElement> grade(const NilHeckeElement& u) {
  std::map<int, NilHeckeElement> parts;
  for (const auto& [w, f] : u.terms())
    for (const auto& [d, part] : f.homogeneous_parts()) {
      auto [it, inserted] =
          parts.emplace(d - w.length(), NilHeckeElement::zero(u.ctx()));
      it->second.add_term(w, part);
    }
  return parts;
}

std::optional<int> homogeneous_degree(const NilHeckeElement& u) {
  auto parts = grade(u);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

NilHeckeElement specialize(const NilHeckeElement& u, const Rational& c) {
  EvalContext sctx = specialized_context(*u.ctx().datum, c);
  NilHeckeElement r(sctx);
  for (const auto& [w, f] : u.terms()) {
    // The index lattice is shared between the contexts; rebuild the key so
    // its datum pointer stays, only coefficients change.
    r.add_term(w, f.specialize_hbar(c));
  }
  return r;
}

NilHeckeElement nh_mul_specialized(const NilHeckeElement& a, const NilHeckeElement& b) {
  require_same(a.ctx(), b.ctx());
  if (!a.ctx().hbar) return nh_mul(a, b);
  EvalContext generic = generic_context(*a.ctx().datum);
  NilHeckeElement la(generic), lb(generic);
  for (const auto& [w, f] : a.terms()) la.add_term(w, f);
  for (const auto& [w, f] : b.terms()) lb.add_term(w, f);
  return specialize(nh_mul(la, lb), *a.ctx().hbar);
}

NilHeckeElement symmetrizer(const EvalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  SkewElement sum = SkewElement::zero(ctx);
  auto weyl = enumerate_finite_weyl(d);
  for (const auto& w : weyl) sum = sum + SkewElement::group(ctx, w);
  MembershipResult r =
      membership(sum.scaled(Rational(1) / rat(static_cast<long long>(weyl.size()))));
  if (!r.ok()) throw std::logic_error("symmetrizer left the algebra");
  return *r.element;
}

NilHeckeElement spherical_project(const NilHeckeElement& u) {
  NilHeckeElement e = symmetrizer(u.ctx());
  return nh_mul(nh_mul(e, u), e);
}

CheckResult verify_th0(const EvalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  Weight mu = d.find_weight_pairing_one(d.highest_root().cv);
  SkewElement conj = SkewElement::group(ctx, ExtAffine::translation(mu));
  SkewElement conj_inv = SkewElement::group(ctx, ExtAffine::translation(-mu));
  SkewElement lhs = conj * theta_root(ctx, d.highest_root()) * conj_inv;
  SkewElement rhs = theta_simple(ctx, 0);
  if (lhs == rhs) return {true, "conjugated highest-root Demazure element equals the affine node generator"};
  return {false, "mismatch: lhs = " + lhs.str() + " ; rhs = " + rhs.str()};
}

TorusSkew phi_image(const EvalContext& ctx, int i) {
  if (!ctx.hbar || *ctx.hbar != 0)
    throw std::invalid_argument("phi_image requires the context specialized at 0");
  const RootDatum& d = *ctx.datum;
  const Root& root = (i == 0)
                         ? d.highest_root()
                         : d.positive_roots()[d.classify_root(d.simple_root(i - 1).c)->first];
  RootFraction inv = RootFraction::reciprocal_form(
      ctx, AffineForm::normalized(root.cv.c, Rational(0)).first);
  ExtAffine refl = ExtAffine::root_reflection(d, root);
  TorusSkew out = TorusSkew::zero(ctx);
  out.add_term(refl, TorusMixed::fraction(ctx, inv));
  out.add_term(ExtAffine::identity(d), TorusMixed::fraction(ctx, inv.negated()));
  return out;
}

CheckResult verify_phi2(const EvalContext& ctx, const Weight& mu, int i) {
  if (!ctx.hbar || *ctx.hbar != 0)
    throw std::invalid_argument("verify_phi2 requires the context specialized at 0");
  const RootDatum& d = *ctx.datum;
  if (i < 1 || i > d.rank())
    throw std::invalid_argument("verify_phi2 takes a finite simple index");
  TorusSkew a = phi_image(ctx, i);
  TorusSkew t_mu = TorusSkew::coeff(ctx, TorusMixed::monomial(ctx, mu));
  TorusSkew t_neg = TorusSkew::coeff(ctx, TorusMixed::monomial(ctx, -mu));
  TorusSkew s = TorusSkew::group(
      ctx, ExtAffine::simple_reflection(d, i));
  TorusSkew lhs = t_mu * a * t_neg * s + a;

  long long p = d.pairing(mu, d.simple_coroot(i - 1));
  TorusMixed rhs_coeff = TorusMixed::zero(ctx);
  RootFraction inv = RootFraction::reciprocal_form(
      ctx, AffineForm::normalized(d.simple_coroot(i - 1).c, Rational(0)).first);
  rhs_coeff.add_term((d.simple_root(i - 1) * p).c, inv);
  rhs_coeff.add_term(d.zero_weight().c, inv.negated());
  TorusSkew rhs = TorusSkew::coeff(ctx, rhs_coeff);
  if (lhs == rhs) return {true, "torus localization identity holds"};
  return {false, "torus localization identity failed"};
}

MoritaUnitResult morita_unit(const EvalContext& ctx, int max_degree) {
  const RootDatum& d = *ctx.datum;
  NilHeckeElement e = symmetrizer(ctx);
  NilHeckeElement unit = NilHeckeElement::one(ctx);
  auto weyl = enumerate_finite_weyl(d);

  // Monomials in the x variables only, grouped by total degree.
  std::vector<Monomial> monos;
  {
    std::vector<int> exps(ctx.nvars(), 0);
    // Enumerate all x-monomials with total degree <= max_degree.
    std::function<void(int, int)> rec = [&](int var, int remaining) {
      if (var == ctx.rank()) {
        monos.push_back(Monomial{exps});
        return;
      }
      for (int k = 0; k <= remaining; ++k) {
        exps[var] = k;
        rec(var + 1, remaining - k);
      }
      exps[var] = 0;
    };
    rec(0, max_degree);
    std::sort(monos.begin(), monos.end());
  }

  struct Basis {
    Monomial m;
    ExtAffine w;
    int mono_deg;
    int total_deg;  // deg(m) - l(w)
  };
  std::vector<Basis> basis;
  for (const auto& m : monos)
    for (const auto& w : weyl)
      basis.push_back(Basis{m, w, m.degree(), m.degree() - w.length()});

  auto element_of = [&](const Basis& b) {
    NilHeckeElement u(ctx);
    SparsePoly f(ctx.nvars());
    f.add_term(b.m, 1);
    u.add_term(b.w, f);
    return u;
  };

  for (int bound = 0; bound <= max_degree; ++bound) {
    // Pairs of total degree zero with both monomial degrees <= bound.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
      if (basis[i].mono_deg > bound) continue;
      for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
        if (basis[j].mono_deg > bound) continue;
        if (basis[i].total_deg + basis[j].total_deg != 0) continue;
        pairs.emplace_back(i, j);
      }
    }
    if (pairs.empty()) continue;

    // Precompute b_i * e once per left factor.
    std::map<int, NilHeckeElement> left;
    for (const auto& [i, j] : pairs)
      if (!left.count(i)) left.emplace(i, nh_mul(element_of(basis[i]), e));

    std::vector<NilHeckeElement> products;
    products.reserve(pairs.size());
    for (const auto& [i, j] : pairs)
      products.push_back(nh_mul(left.at(i), element_of(basis[j])));

    // Row space: (theta index, monomial) -> row.
    std::map<std::pair<std::vector<long long>, std::pair<IntMat, Monomial>>, int> rows;
    auto key_of = [](const ExtAffine& w, const Monomial& m) {
      return std::pair(w.translation_part(), std::pair(w.finite_matrix(), m));
    };
    auto intern = [&rows](const std::pair<std::vector<long long>,
                                          std::pair<IntMat, Monomial>>& k) {
      auto it = rows.find(k);
      if (it != rows.end()) return it->second;
      int id = static_cast<int>(rows.size());
      rows.emplace(k, id);
      return id;
    };
    for (const auto& u : products)
      for (const auto& [w, f] : u.terms())
        for (const auto& [m, c] : f.terms()) intern(key_of(w, m));
    for (const auto& [w, f] : unit.terms())
      for (const auto& [m, c] : f.terms()) intern(key_of(w, m));

    QMat a(static_cast<int>(rows.size()), static_cast<int>(pairs.size()));
    for (int col = 0; col < static_cast<int>(products.size()); ++col)
      for (const auto& [w, f] : products[col].terms())
        for (const auto& [m, c] : f.terms())
          a.at(intern(key_of(w, m)), col) = c;
    std::vector<Rational> b(rows.size(), Rational(0));
    for (const auto& [w, f] : unit.terms())
      for (const auto& [m, c] : f.terms()) b[intern(key_of(w, m))] = c;

    auto sol = a.solve(b);
    if (!sol) continue;

    MoritaUnitResult result;
    result.found = true;
    result.degree = bound;
    NilHeckeElement check = NilHeckeElement::zero(ctx);
    for (size_t p = 0; p < pairs.size(); ++p) {
      if ((*sol)[p] == 0) continue;
      NilHeckeElement h1 = element_of(basis[pairs[p].first]).scaled((*sol)[p]);
      NilHeckeElement h2 = element_of(basis[pairs[p].second]);
      result.pairs.emplace_back(h1, h2);
      check = check + nh_mul(nh_mul(h1, e), h2);
    }
    if (!(check == unit))
      throw std::logic_error("morita_unit: solver produced an invalid decomposition");
    result.message = "decomposition with " + std::to_string(result.pairs.size()) +
                     " pairs at monomial degree " + std::to_string(bound);
    return result;
  }
  return MoritaUnitResult{
      false, -1, {},
      "no decomposition up to monomial degree " + std::to_string(max_degree)};
}

std::pair<int, int> faithfulness_rank(const EvalContext& ctx, int coeff_degree,
                                      int poly_degree) {
  const RootDatum& d = *ctx.datum;
  auto weyl = enumerate_finite_weyl(d);
  ThetaCache cache(ctx);

  std::vector<Monomial> coeff_monos, in_monos;
  std::map<Monomial, int> out_index;
  std::function<void(std::vector<int>&, int, int, std::vector<Monomial>&)> rec =
      [&](std::vector<int>& exps, int var, int remaining, std::vector<Monomial>& out) {
        if (var == ctx.rank()) {
          out.push_back(Monomial{exps});
          return;
        }
        for (int k = 0; k <= remaining; ++k) {
          exps[var] = k;
          rec(exps, var + 1, remaining - k, out);
        }
        exps[var] = 0;
      };
  std::vector<int> exps(ctx.nvars(), 0);
  rec(exps, 0, coeff_degree, coeff_monos);
  rec(exps, 0, poly_degree, in_monos);
  std::vector<Monomial> out_monos;
  rec(exps, 0, poly_degree + coeff_degree, out_monos);
  for (int i = 0; i < static_cast<int>(out_monos.size()); ++i)
    out_index.emplace(out_monos[i], i);

  int cols = static_cast<int>(coeff_monos.size() * weyl.size());
  int rows = static_cast<int>(in_monos.size() * out_monos.size());
  QMat mat(rows, cols);
  int col = 0;
  for (const auto& m : coeff_monos)
    for (const auto& w : weyl) {
      const SkewElement& theta = cache.get(w);
      for (int in = 0; in < static_cast<int>(in_monos.size()); ++in) {
        SparsePoly f(ctx.nvars());
        f.add_term(in_monos[in], 1);
        RootFraction image = theta.act(f);
        auto p = image.as_polynomial();
        if (!p)
          throw std::logic_error("theta action left the polynomial ring");
        SparsePoly shifted(ctx.nvars());
        shifted.add_term(m, 1);
        SparsePoly full = shifted * *p;
        for (const auto& [mono, c] : full.terms()) {
          auto it = out_index.find(mono);
          if (it == out_index.end())
            throw std::logic_error("output degree bound exceeded");
          mat.at(in * static_cast<int>(out_monos.size()) + it->second, col) = c;
        }
      }
      ++col;
    }
  return {mat.rank(), cols};
}

std::vector<SparsePoly> invariant_polys(const EvalContext& ctx, int max_degree) {
  const RootDatum& d = *ctx.datum;
  auto weyl = enumerate_finite_weyl(d);
  std::vector<Monomial> monos;
  std::vector<int> exps(ctx.nvars(), 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == ctx.rank()) {
      monos.push_back(Monomial{exps});
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      exps[var] = k;
      rec(var + 1, remaining - k);
    }
    exps[var] = 0;
  };
  rec(0, max_degree);

  std::map<Monomial, int> index;
  for (int i = 0; i < static_cast<int>(monos.size()); ++i) index.emplace(monos[i], i);

  // Reynolds averages, then a row reduction to extract a basis.
  std::vector<SparsePoly> averaged;
  for (const auto& m : monos) {
    SparsePoly f(ctx.nvars());
    f.add_term(m, 1);
    SparsePoly avg(ctx.nvars());
    for (const auto& w : weyl) {
      auto pm = w.inverse_point_map();
      avg = avg + f.substitute_linear(pm.matrix, pm.hbar_shift, ctx.hbar);
    }
    averaged.push_back(avg * (Rational(1) / rat(static_cast<long long>(weyl.size()))));
  }
  QMat mat(static_cast<int>(averaged.size()), static_cast<int>(monos.size()));
  for (int i = 0; i < static_cast<int>(averaged.size()); ++i)
    for (const auto& [m, c] : averaged[i].terms()) mat.at(i, index.at(m)) = c;
  mat.rref();
  std::vector<SparsePoly> basis;
  for (int i = 0; i < mat.rows(); ++i) {
    SparsePoly p(ctx.nvars());
    for (int j = 0; j < mat.cols(); ++j)
      if (mat.at(i, j) != 0) p.add_term(monos[j], mat.at(i, j));
    if (!p.is_zero()) basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace nhk
