#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nhk/skew.hpp"
#include "nhk/torus.hpp"

namespace nhk {

/// Normal form sum f_w theta_w with *polynomial* coefficients, indexed by
/// extended affine Weyl elements. Polynomiality of every coefficient is
/// exactly membership in the nil-Hecke algebra; the theta basis is free, so
/// the representation is unique.
///
/// theta_w is defined through the canonical reduced word of w: for
/// reduced_word(w) = (omega, [i_1..i_k]), theta_w = [omega] theta_{i_1} ...
/// theta_{i_k}. Independence from the word is a verified property, not an
/// assumption.
class NilHeckeElement {
 public:
  explicit NilHeckeElement(EvalContext ctx) : ctx_(std::move(ctx)) {}

  static NilHeckeElement zero(const EvalContext& ctx);
  static NilHeckeElement one(const EvalContext& ctx);
  static NilHeckeElement theta(const EvalContext& ctx, const ExtAffine& w);
  static NilHeckeElement poly(const EvalContext& ctx, const SparsePoly& f);

  const EvalContext& ctx() const { return ctx_; }
  const std::map<ExtAffine, SparsePoly, ExtAffineLess>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  SparsePoly coeff_of(const ExtAffine& w) const;
  void add_term(const ExtAffine& w, const SparsePoly& f);

  NilHeckeElement operator+(const NilHeckeElement& o) const;
  NilHeckeElement operator-(const NilHeckeElement& o) const;
  NilHeckeElement operator-() const;
  NilHeckeElement scaled(const Rational& c) const;
  friend bool operator==(const NilHeckeElement&, const NilHeckeElement&) = default;

  std::string str() const;

 private:
  EvalContext ctx_;
  std::map<ExtAffine, SparsePoly, ExtAffineLess> terms_;
};

/// Memoized expansion of theta basis elements into the skew algebra.
class ThetaCache {
 public:
  explicit ThetaCache(EvalContext ctx) : ctx_(std::move(ctx)) {}
  const SkewElement& get(const ExtAffine& w);

 private:
  EvalContext ctx_;
  std::map<ExtAffine, SkewElement, ExtAffineLess> memo_;
};

/// theta_w as a skew element (uncached convenience).
SkewElement theta_of(const EvalContext& ctx, const ExtAffine& w);

/// Expansion of a normal form into the skew algebra.
SkewElement expand(const NilHeckeElement& u);

struct MembershipWitness {
  ExtAffine index;
  RootFraction coeff;  // the non-polynomial theta-basis coefficient
};

struct MembershipResult {
  std::optional<NilHeckeElement> element;
  std::optional<MembershipWitness> witness;
  bool ok() const { return element.has_value(); }
};

/// Decides membership in the nil-Hecke algebra by triangular peeling: the
/// support of theta_w consists of w plus strictly shorter elements, and its
/// leading coefficient at [w] is a unit multiple of a product of reciprocal
/// affine-root forms. Repeatedly subtracting coeff(w)/lead(theta_w) * theta_w
/// at a maximal-length support element w computes the unique theta-basis
/// expansion; the element belongs to the algebra iff every recorded
/// coefficient is a polynomial. Rejections carry the first offending
/// coefficient as a witness.
MembershipResult membership(const SkewElement& u);

/// Product in the nil-Hecke algebra, computed in the ambient skew algebra and
/// re-normalized through membership (which must accept; the algebra is
/// closed under products).
NilHeckeElement nh_mul(const NilHeckeElement& a, const NilHeckeElement& b);

/// Independent route for the same product: straightening on theta words via
/// the twisted Leibniz rule theta_i g = s_i(g) theta_i + theta_i(g). Used as
/// a cross-check against nh_mul.
NilHeckeElement nh_mul_straighten(const NilHeckeElement& a, const NilHeckeElement& b);

/// Both words must be reduced words for w (throws otherwise); returns whether
/// their theta products agree exactly as skew elements.
bool theta_word_invariance(const EvalContext& ctx, const ExtAffine& w,
                           const std::vector<int>& word1,
                           const std::vector<int>& word2);

/// Homogeneous decomposition; x_i and h sit in degree +1, theta_w in -l(w).
std::map<int, NilHeckeElement> grade(const NilHeckeElement& u);
/// Degree when homogeneous, nullopt otherwise.
std::optional<int> homogeneous_degree(const NilHeckeElement& u);

/// Specialization h -> c of every coefficient; the result lives in the
/// context specialized at c.
NilHeckeElement specialize(const NilHeckeElement& u, const Rational& c);

/// Product of two specialized elements through canonical lifts (the product
/// of cosets mod (h - c) is the coset of the lifted product).
NilHeckeElement nh_mul_specialized(const NilHeckeElement& a, const NilHeckeElement& b);

/// The symmetrizer idempotent (1/#W) sum_w [w] in normal form.
NilHeckeElement symmetrizer(const EvalContext& ctx);

/// e u e, the projection onto the spherical subalgebra.
NilHeckeElement spherical_project(const NilHeckeElement& u);

struct CheckResult {
  bool ok = false;
  std::string message;
};

/// Conjugation identity for the affine node: with mu a weight pairing to 1
/// with the highest coroot, e^mu theta_delta e^{-mu} = theta_0 exactly.
CheckResult verify_th0(const EvalContext& ctx);

/// Classical-limit (h = 0) images of the Demazure generators in
/// W x C[T x t*, (t^alpha - 1)/alpha-coroot]: theta_i -> (1/alpha_i-coroot)
/// (s_i - 1) and theta_0 -> (1/delta-coroot)(s_delta - 1). Requires a context
/// specialized at 0.
TorusSkew phi_image(const EvalContext& ctx, int i);

/// Torus localization identity
///   t^mu (1/a)(s - 1) t^{-mu} s + (1/a)(s - 1) = (t^{<mu,a> alpha} - 1)/a
/// for a simple root alpha (finite index i in 1..rank), exact in the
/// classical-limit ring.
CheckResult verify_phi2(const EvalContext& ctx, const Weight& mu, int i);

struct MoritaUnitResult {
  bool found = false;
  int degree = -1;  // monomial degree bound that admitted a solution
  std::vector<std::pair<NilHeckeElement, NilHeckeElement>> pairs;
  std::string message;
};

/// Searches for h'_i, h''_i in the finite subalgebra with
/// sum_i h'_i e h''_i = 1, by exact linear solving over pairs
/// (monomial x theta_w) of total degree zero with monomial degree bounded by
/// D, increasing the bound until a solution appears. The returned
/// decomposition is re-verified by multiplication.
MoritaUnitResult morita_unit(const EvalContext& ctx, int max_degree);

/// Exact rank of the evaluation map sending the spanning set
/// {x^a theta_w : |a| <= coeff_degree, w in finite W} to operators on
/// polynomials of degree <= poly_degree. Returns (rank, spanning set size).
std::pair<int, int> faithfulness_rank(const EvalContext& ctx, int coeff_degree,
                                      int poly_degree);

/// Basis of the W-invariant polynomials in the x variables of total degree
/// <= max_degree, computed by Reynolds averaging.
std::vector<SparsePoly> invariant_polys(const EvalContext& ctx, int max_degree);

}  // namespace nhk
