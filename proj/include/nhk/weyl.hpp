#pragma once

#include <utility>
#include <vector>

#include "nhk/rootdata.hpp"

namespace nhk {

/// Element of the extended affine Weyl group W~ = W x X* in the canonical
/// factorization t_mu . w (translation first). The finite part is stored as
/// its integer matrix on weight coordinates.
///
/// The group acts on t*_aff at level hbar: the point map of t_mu . w is
/// x |-> w(x) + hbar mu, so translations match the operator action
/// (e^mu f)(x, hbar) = f(x - hbar mu, hbar) used downstream.
class ExtAffine {
 public:
  ExtAffine(const RootDatum& datum, std::vector<long long> translation, IntMat finite);

  static ExtAffine identity(const RootDatum& datum);
  /// Affine simple reflection; index 0 is the affine node (reflection through
  /// <x, highest-coroot> = hbar, i.e. t_delta . s_delta), indices 1..rank are
  /// the finite simple reflections.
  static ExtAffine simple_reflection(const RootDatum& datum, int i);
  static ExtAffine translation(const Weight& mu);
  /// Finite reflection attached to an arbitrary root.
  static ExtAffine root_reflection(const RootDatum& datum, const Root& beta);

  const RootDatum& datum() const { return *datum_; }
  const std::vector<long long>& translation_part() const { return t_; }
  const IntMat& finite_matrix() const { return w_; }
  const IntMat& finite_inverse() const { return winv_; }
  int length() const { return len_; }
  bool is_identity() const;
  bool is_finite() const;  // zero translation part

  ExtAffine operator*(const ExtAffine& o) const;
  ExtAffine inverse() const;
  friend bool operator==(const ExtAffine&, const ExtAffine&) = default;

  /// Finite-part action on a weight (ignores the translation part).
  Weight apply_finite(const Weight& mu) const;

  /// The point map of the inverse element, x |-> M x + hbar v: used to build
  /// the substitution realizing (w ~> f) = f o w^{-1}.
  struct PointMap {
    IntMat matrix;
    std::vector<long long> hbar_shift;
  };
  PointMap inverse_point_map() const;

 private:
  const RootDatum* datum_;
  std::vector<long long> t_;
  IntMat w_;
  IntMat winv_;
  int len_;
};

/// Strict total order: by length, then translation, then matrix. Gives maps
/// over ExtAffine a deterministic iteration order with the longest element
/// last, which the triangular normal form exploits.
struct ExtAffineLess {
  bool operator()(const ExtAffine& a, const ExtAffine& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.translation_part() != b.translation_part())
      return a.translation_part() < b.translation_part();
    return a.finite_matrix() < b.finite_matrix();
  }
};

/// Iwahori-Matsumoto length of t_mu . w:
///   sum over alpha > 0 with w^{-1} alpha > 0 of |<mu, alpha-coroot>|
/// + sum over alpha > 0 with w^{-1} alpha < 0 of |<mu, alpha-coroot> - 1|.
int length(const ExtAffine& x);

/// Right-descent factorization: returns (omega, [i_1..i_k]) with
/// length(omega) = 0, x = omega . s_{i_1} ... s_{i_k} and k = length(x).
/// Strips the smallest descent index first, so the word is deterministic.
std::pair<ExtAffine, std::vector<int>> reduced_word(const ExtAffine& x);

bool is_right_descent(const ExtAffine& x, int i);

/// Demazure (nil-Coxeter monoid) product: folds w <- s_i w when that raises
/// the length, reading the word right to left.
ExtAffine demazure_product(const RootDatum& datum, const std::vector<int>& word);

/// All reduced words of x (omega part dropped); intended for small elements.
std::vector<std::vector<int>> all_reduced_words(const ExtAffine& x);

/// The finite Weyl group, enumerated by closure under simple reflections.
std::vector<ExtAffine> enumerate_finite_weyl(const RootDatum& datum);

/// The group of length-zero elements, generated by the residues of the
/// fundamental-weight translations.
std::vector<ExtAffine> omega_group(const RootDatum& datum);

/// Order of s_i s_j for affine simple indices, capped: returns -1 for
/// infinite order (the crystallographic finite orders are 2, 3, 4, 6).
int braid_order(const RootDatum& datum, int i, int j);

/// Elements of the affine Weyl group (words in the affine simple reflections)
/// of length <= max_len, via breadth-first search.
std::vector<ExtAffine> affine_elements_up_to(const RootDatum& datum, int max_len);

}  // namespace nhk
