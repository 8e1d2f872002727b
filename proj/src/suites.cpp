#include "nhk/suites.hpp"

#include <omp.h>

#include <atomic>
#include <chrono>
#include <memory>
#include <set>
#include <sstream>

#include "nhk/module_slice.hpp"
#include "nhk/serialize.hpp"

namespace nhk {

namespace {

using DatumPtr = std::shared_ptr<const RootDatum>;

DatumPtr make_datum(const std::string& type) {
  return std::make_shared<RootDatum>(RootDatum::build(type));
}

std::string elem_id(const ExtAffine& w) {
  std::ostringstream out;
  out << "t=";
  for (size_t i = 0; i < w.translation_part().size(); ++i)
    out << (i ? "." : "") << w.translation_part()[i];
  out << ",w=";
  const IntMat& m = w.finite_matrix();
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out << m.at(i, j) << ((i + 1 < m.n || j + 1 < m.n) ? "." : "");
  return out.str();
}

CaseOutcome pass() { return CaseOutcome{true, ""}; }
CaseOutcome fail(const std::string& msg) { return CaseOutcome{false, msg}; }

// ---------------------------------------------------------------------------
// braid: squares and alternating braid products of the Demazure generators.
std::vector<SuiteCase> build_braid(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  std::vector<SuiteCase> cases;
  for (int i = 0; i <= d->rank(); ++i) {
    cases.push_back(SuiteCase{
        "square/" + std::to_string(i), [d, i]() {
          EvalContext ctx = generic_context(*d);
          SkewElement t = theta_simple(ctx, i);
          return (t * t).is_zero() ? pass()
                                   : fail("theta_" + std::to_string(i) +
                                          "^2 != 0");
        }});
  }
  for (int i = 0; i <= d->rank(); ++i)
    for (int j = i + 1; j <= d->rank(); ++j) {
      int m = braid_order(*d, i, j);
      if (m < 0) continue;  // infinite order: no relation
      cases.push_back(SuiteCase{
          "pair/" + std::to_string(i) + "-" + std::to_string(j) + "/m" +
              std::to_string(m),
          [d, i, j, m]() {
            EvalContext ctx = generic_context(*d);
            SkewElement ti = theta_simple(ctx, i), tj = theta_simple(ctx, j);
            SkewElement a = SkewElement::unit(ctx), b = SkewElement::unit(ctx);
            for (int k = 0; k < m; ++k) {
              a = a * (k % 2 == 0 ? ti : tj);
              b = b * (k % 2 == 0 ? tj : ti);
            }
            return a == b ? pass()
                          : fail("alternating products of length " +
                                 std::to_string(m) + " differ");
          }});
    }
  return cases;
}

// ---------------------------------------------------------------------------
// words: all reduced words of an element give the same theta product.
std::vector<SuiteCase> build_words(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  std::vector<SuiteCase> cases;
  std::set<std::string> seen;
  auto add_elem = [&](const ExtAffine& w) {
    std::string id = elem_id(w);
    if (!seen.insert(id).second) return;
    cases.push_back(SuiteCase{id, [d, w]() {
      EvalContext ctx = generic_context(*d);
      auto words = all_reduced_words(w);
      if (words.empty()) return fail("no reduced word found");
      auto [omega, canonical] = reduced_word(w);
      SkewElement reference = SkewElement::group(ctx, omega);
      for (int i : words.front()) reference = reference * theta_simple(ctx, i);
      for (size_t k = 1; k < words.size(); ++k) {
        SkewElement other = SkewElement::group(ctx, omega);
        for (int i : words[k]) other = other * theta_simple(ctx, i);
        if (!(other == reference))
          return fail("words " + std::to_string(0) + " and " + std::to_string(k) +
                      " of " + std::to_string(words.size()) + " disagree");
      }
      return pass();
    }});
  };
  for (const auto& w : enumerate_finite_weyl(*d)) add_elem(w);
  for (const auto& w : affine_elements_up_to(*d, opts.max_length)) add_elem(w);
  return cases;
}

// ---------------------------------------------------------------------------
// defrel: theta_i s_i(h) - h theta_i = <alpha_i, h> for h in the coroot basis.
// For the affine node the pairing is against the highest root.
std::vector<SuiteCase> build_defrel(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  std::vector<SuiteCase> cases;
  for (int i = 0; i <= d->rank(); ++i)
    for (int k = 0; k < d->rank(); ++k) {
      cases.push_back(SuiteCase{
          "i" + std::to_string(i) + "/h" + std::to_string(k + 1), [d, i, k]() {
            EvalContext ctx = generic_context(*d);
            Coroot h = d->simple_coroot(k);
            SparsePoly hp = coroot_poly(ctx, h);
            ExtAffine s = ExtAffine::simple_reflection(*d, i);
            auto pm = s.inverse_point_map();
            SparsePoly sh = hp.substitute_linear(pm.matrix, pm.hbar_shift, ctx.hbar);
            SkewElement theta = theta_simple(ctx, i);
            SkewElement lhs = theta * SkewElement::poly(ctx, sh) -
                              SkewElement::poly(ctx, hp) * theta;
            Weight root_i = (i == 0) ? d->highest_root().wt : d->simple_root(i - 1);
            SkewElement rhs = SkewElement::poly(
                ctx, SparsePoly::constant(ctx.nvars(), rat(d->pairing(root_i, h))));
            return lhs == rhs ? pass() : fail("twisted commutator mismatch");
          }});
    }
  return cases;
}

// ---------------------------------------------------------------------------
// ddh: xi e^mu = e^mu (xi + <mu, xi> h) over fundamental weights and the
// coroot basis.
std::vector<SuiteCase> build_ddh(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  std::vector<SuiteCase> cases;
  for (int j = 0; j < d->rank(); ++j)
    for (int k = 0; k < d->rank(); ++k)
      cases.push_back(SuiteCase{
          "mu" + std::to_string(j + 1) + "/xi" + std::to_string(k + 1),
          [d, j, k]() {
            EvalContext ctx = generic_context(*d);
            return check_ddh(ctx, d->fundamental_weight(j), d->simple_coroot(k))
                       ? pass()
                       : fail("translation commutation failed");
          }});
  return cases;
}

// ---------------------------------------------------------------------------
std::vector<SuiteCase> build_th0(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  return {SuiteCase{"conjugation", [d]() {
    EvalContext ctx = generic_context(*d);
    CheckResult r = verify_th0(ctx);
    return r.ok ? pass() : fail(r.message);
  }}};
}

// ---------------------------------------------------------------------------
// membership: accepted random members round-trip; corrupted elements are
// rejected with a witness.
std::vector<SuiteCase> build_membership(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  std::vector<SuiteCase> cases;
  for (int n = 0; n < opts.cases; ++n) {
    uint64_t case_seed = opts.seed * 1000003ull + static_cast<uint64_t>(n);
    cases.push_back(SuiteCase{"accept/" + std::to_string(n), [d, case_seed]() {
      EvalContext ctx = generic_context(*d);
      Rng rng(case_seed);
      SkewElement u = random_member(ctx, rng, 3 + static_cast<int>(rng.next() % 3));
      MembershipResult m = membership(u);
      if (!m.ok())
        return fail("member rejected with witness at length " +
                    std::to_string(m.witness->index.length()));
      if (!(expand(*m.element) == u)) return fail("round trip changed the element");
      return pass();
    }});
  }
  for (int n = 0; n < opts.cases; ++n) {
    uint64_t case_seed = opts.seed * 2000003ull + static_cast<uint64_t>(n);
    cases.push_back(SuiteCase{"reject/" + std::to_string(n), [d, case_seed]() {
      EvalContext ctx = generic_context(*d);
      Rng rng(case_seed);
      SkewElement u = random_member(ctx, rng, 2 + static_cast<int>(rng.next() % 3));
      SkewElement bad =
          u + SkewElement::coeff(
                  ctx, RootFraction::reciprocal_form(ctx, AffineForm::node(ctx, 1)));
      MembershipResult m = membership(bad);
      if (m.ok()) return fail("corrupted element accepted");
      if (!m.witness) return fail("rejection without witness");
      if (m.witness->coeff.as_polynomial()) return fail("witness coefficient is polynomial");
      return pass();
    }});
  }
  return cases;
}

// ---------------------------------------------------------------------------
std::vector<SuiteCase> build_faithfulness(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  return {SuiteCase{"rank", [d]() {
    EvalContext ctx = generic_context(*d);
    auto [rank, size] = faithfulness_rank(ctx, 3, 6);
    if (rank == size) return pass();
    return fail("evaluation map rank " + std::to_string(rank) + " < " +
                std::to_string(size));
  }}};
}

// ---------------------------------------------------------------------------
// phi2: classical-limit generator images square to zero, satisfy the twisted
// commutator, and the torus localization identity holds for every
// (fundamental weight, simple root) pair.
std::vector<SuiteCase> build_phi2(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  std::vector<SuiteCase> cases;
  for (int i = 0; i <= d->rank(); ++i)
    cases.push_back(SuiteCase{"square/" + std::to_string(i), [d, i]() {
      EvalContext ctx = specialized_context(*d, 0);
      TorusSkew img = phi_image(ctx, i);
      return (img * img).is_zero() ? pass() : fail("image square nonzero");
    }});
  for (int i = 1; i <= d->rank(); ++i)
    for (int k = 0; k < d->rank(); ++k)
      cases.push_back(SuiteCase{
          "defrel0/i" + std::to_string(i) + "/h" + std::to_string(k + 1),
          [d, i, k]() {
            EvalContext ctx = specialized_context(*d, 0);
            TorusSkew img = phi_image(ctx, i);
            SparsePoly hp = coroot_poly(ctx, d->simple_coroot(k));
            ExtAffine s = ExtAffine::simple_reflection(*d, i);
            auto pm = s.inverse_point_map();
            SparsePoly sh = hp.substitute_linear(pm.matrix, pm.hbar_shift, ctx.hbar);
            TorusSkew lhs =
                img * TorusSkew::coeff(ctx, TorusMixed::fraction(ctx, RootFraction(sh))) -
                TorusSkew::coeff(ctx, TorusMixed::fraction(ctx, RootFraction(hp))) * img;
            long long pairing = d->pairing(d->simple_root(i - 1), d->simple_coroot(k));
            TorusSkew rhs = TorusSkew::coeff(
                ctx, TorusMixed::fraction(
                         ctx, RootFraction::constant(ctx, rat(pairing))));
            return lhs == rhs ? pass() : fail("twisted commutator at h=0 failed");
          }});
  for (int j = 0; j < d->rank(); ++j)
    for (int i = 1; i <= d->rank(); ++i)
      cases.push_back(SuiteCase{
          "loc/mu" + std::to_string(j + 1) + "/alpha" + std::to_string(i),
          [d, j, i]() {
            EvalContext ctx = specialized_context(*d, 0);
            CheckResult r = verify_phi2(ctx, d->fundamental_weight(j), i);
            return r.ok ? pass() : fail(r.message);
          }});
  return cases;
}

// ---------------------------------------------------------------------------
// spherical: e^2 = e, invariants commute with the finite generators, and
// e f e = f e for invariant f.
std::vector<SuiteCase> build_spherical(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  std::vector<SuiteCase> cases;
  cases.push_back(SuiteCase{"idempotent", [d]() {
    EvalContext ctx = generic_context(*d);
    NilHeckeElement e = symmetrizer(ctx);
    return nh_mul(e, e) == e ? pass() : fail("e^2 != e");
  }});
  int invariant_count = 0;
  {
    EvalContext ctx = generic_context(*d);
    invariant_count =
        static_cast<int>(invariant_polys(ctx, std::min(opts.max_degree, 4)).size());
  }
  for (int n = 0; n < invariant_count; ++n) {
    for (int i = 1; i <= d->rank(); ++i)
      cases.push_back(SuiteCase{
          "central/f" + std::to_string(n) + "/theta" + std::to_string(i),
          [d, n, i, opts]() {
            EvalContext ctx = generic_context(*d);
            auto inv = invariant_polys(ctx, std::min(opts.max_degree, 4));
            SkewElement f = SkewElement::poly(ctx, inv[n]);
            SkewElement t = theta_simple(ctx, i);
            return f * t == t * f ? pass() : fail("invariant does not commute");
          }});
    cases.push_back(SuiteCase{"sandwich/f" + std::to_string(n), [d, n, opts]() {
      EvalContext ctx = generic_context(*d);
      auto inv = invariant_polys(ctx, std::min(opts.max_degree, 4));
      NilHeckeElement e = symmetrizer(ctx);
      NilHeckeElement f = NilHeckeElement::poly(ctx, inv[n]);
      NilHeckeElement efe = nh_mul(nh_mul(e, f), e);
      NilHeckeElement fe = nh_mul(f, e);
      return efe == fe ? pass() : fail("e f e != f e for invariant f");
    }});
  }
  return cases;
}

// ---------------------------------------------------------------------------
std::vector<SuiteCase> build_morita_unit(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  int max_degree = opts.max_degree;
  return {SuiteCase{"decomposition/D" + std::to_string(max_degree),
                    [d, max_degree]() {
                      EvalContext ctx = generic_context(*d);
                      MoritaUnitResult r = morita_unit(ctx, max_degree);
                      return r.found ? pass() : fail(r.message);
                    }}};
}

// ---------------------------------------------------------------------------
std::vector<SuiteCase> build_module_criterion(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  int depth = std::max(opts.max_degree, 6);
  std::vector<SuiteCase> cases;
  for (int i = 1; i <= d->rank(); ++i)
    cases.push_back(SuiteCase{
        "sym-t/alpha" + std::to_string(i) + "/D" + std::to_string(depth),
        [d, i, depth]() {
          GradedModuleSlice slice = GradedModuleSlice::sym_t(*d, depth);
          ExtensionReport r = module_extension_check(*d, slice, i);
          if (!r.bijective_on_range) return fail(r.summary);
          if (!r.theta) return fail("theta not emitted: " + r.summary);
          if (!r.theta_square_zero) return fail("theta^2 != 0 on slice");
          if (!r.commutation_ok) return fail("twisted commutator failed on slice");
          return pass();
        }});
  return cases;
}

// ---------------------------------------------------------------------------
// freeness: membership(expand(theta_w)) = {w -> 1}, generically and at h = 0.
std::vector<SuiteCase> build_freeness(const SuiteOptions& opts) {
  DatumPtr d = make_datum(opts.type);
  std::vector<SuiteCase> cases;
  std::set<std::string> seen;
  auto add = [&](const ExtAffine& w) {
    std::string id = elem_id(w);
    if (!seen.insert(id).second) return;
    for (bool classical : {false, true}) {
      cases.push_back(SuiteCase{
          std::string(classical ? "h0/" : "generic/") + id, [d, w, classical]() {
            EvalContext ctx = classical ? specialized_context(*d, 0)
                                        : generic_context(*d);
            MembershipResult m = membership(theta_of(ctx, w));
            if (!m.ok()) return fail("theta basis element rejected");
            NilHeckeElement expected = NilHeckeElement::theta(ctx, w);
            return *m.element == expected ? pass()
                                          : fail("roundtrip produced different coefficients");
          }});
    }
  };
  for (const auto& w : enumerate_finite_weyl(*d)) add(w);
  for (const auto& w : affine_elements_up_to(*d, opts.max_length)) add(w);
  return cases;
}

}  // namespace

SparsePoly random_poly(const EvalContext& ctx, Rng& rng, int max_degree, int terms) {
  SparsePoly p(ctx.nvars());
  for (int t = 0; t < terms; ++t) {
    Monomial m{std::vector<int>(ctx.nvars(), 0)};
    int degree = static_cast<int>(rng.uniform(0, max_degree));
    for (int k = 0; k < degree; ++k)
      m.e[static_cast<size_t>(rng.uniform(0, ctx.nvars() - 1))] += 1;
    long long num = rng.uniform(-4, 4);
    long long den = rng.uniform(1, 3);
    p.add_term(std::move(m), rat(num) / rat(den));
  }
  return p;
}

SkewElement random_member(const EvalContext& ctx, Rng& rng, int factors) {
  const RootDatum& d = *ctx.datum;
  SkewElement u = SkewElement::unit(ctx);
  int translations = 0;
  for (int k = 0; k < factors; ++k) {
    int kind = static_cast<int>(rng.uniform(0, 2));
    if (kind == 0 && translations < 2) {
      ++translations;
      int j = static_cast<int>(rng.uniform(0, d.rank() - 1));
      Weight mu = d.fundamental_weight(j);
      if (rng.uniform(0, 1)) mu = -mu;
      u = u * SkewElement::group(ctx, ExtAffine::translation(mu));
    } else if (kind == 1) {
      int i = static_cast<int>(rng.uniform(0, d.rank()));
      u = u * theta_simple(ctx, i);
    } else {
      SparsePoly p = random_poly(ctx, rng, 2, 2);
      if (p.is_zero()) p = SparsePoly::constant(ctx.nvars(), 1);
      u = u * SkewElement::poly(ctx, p);
    }
  }
  if (u.is_zero()) u = SkewElement::unit(ctx);
  return u;
}

const std::map<std::string, SuiteBuilder>& suite_registry() {
  static const std::map<std::string, SuiteBuilder> registry = {
      {"braid", build_braid},
      {"words", build_words},
      {"defrel", build_defrel},
      {"ddh", build_ddh},
      {"th0", build_th0},
      {"membership", build_membership},
      {"faithfulness", build_faithfulness},
      {"phi2", build_phi2},
      {"spherical", build_spherical},
      {"morita-unit", build_morita_unit},
      {"module-criterion", build_module_criterion},
      {"freeness", build_freeness},
  };
  return registry;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  auto it = suite_registry().find(name);
  if (it == suite_registry().end())
    throw std::invalid_argument("unknown suite: " + name);
  std::vector<SuiteCase> cases = it->second(opts);

  SuiteReport report;
  report.suite = name;
  report.type = opts.type;
  report.cases_run = cases.size();

  auto start = std::chrono::steady_clock::now();
  auto elapsed_s = [&start]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  };

  std::vector<CaseOutcome> outcomes(cases.size());
  std::atomic<bool> over_budget{false};

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (size_t i = 0; i < cases.size(); ++i) {
    if (over_budget.load()) {
      outcomes[i] = CaseOutcome{false, "skipped: budget exceeded"};
      continue;
    }
    try {
      outcomes[i] = cases[i].run();
    } catch (const std::exception& e) {
      outcomes[i] = CaseOutcome{false, std::string("exception: ") + e.what()};
    }
    if (opts.budget_seconds > 0 && elapsed_s() > opts.budget_seconds)
      over_budget.store(true);
  }

  report.budget_exceeded = over_budget.load();
  for (size_t i = 0; i < cases.size(); ++i) {
    if (outcomes[i].ok) continue;
    SuiteFailure f;
    f.case_id = cases[i].id;
    f.message = outcomes[i].message;
    f.counterexample = {{"suite", name},
                        {"type", opts.type},
                        {"id", cases[i].id},
                        {"seed", opts.seed},
                        {"max_length", opts.max_length},
                        {"max_degree", opts.max_degree},
                        {"cases", opts.cases}};
    report.failures.push_back(std::move(f));
  }
  report.duration_ms = elapsed_s() * 1000.0;
  return report;
}

CaseOutcome run_single_case(const std::string& suite, const std::string& case_id,
                            const SuiteOptions& opts) {
  auto it = suite_registry().find(suite);
  if (it == suite_registry().end())
    throw std::invalid_argument("unknown suite: " + suite);
  for (const auto& c : it->second(opts))
    if (c.id == case_id) return c.run();
  throw std::invalid_argument("unknown case id '" + case_id + "' in suite " + suite);
}

nlohmann::json SuiteReport::to_json(bool include_duration) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["type"] = type;
  j["cases"] = cases_run;
  j["ok"] = ok();
  j["budget_exceeded"] = budget_exceeded;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"id", f.case_id},
                             {"message", f.message},
                             {"counterexample", f.counterexample}});
  if (include_duration) j["duration_ms"] = duration_ms;
  return j;
}

std::string SuiteReport::human() const {
  std::ostringstream out;
  out << suite << ": ";
  if (ok()) {
    out << "OK (" << cases_run << (suite == "th0" && cases_run == 1 ? " identity" : (cases_run == 1 ? " case" : " cases"))
        << ", exact)";
  } else if (budget_exceeded) {
    out << "FAIL (budget exceeded after " << cases_run << " cases)";
  } else {
    out << "FAIL (" << failures.size() << "/" << cases_run << " cases)";
    for (const auto& f : failures)
      out << "\n  " << f.case_id << ": " << f.message;
  }
  return out.str();
}

}  // namespace nhk
