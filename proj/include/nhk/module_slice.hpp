#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhk/context.hpp"
#include "nhk/linalg.hpp"

namespace nhk {

/// Truncated graded module over C[t*] x W: per-degree based vector spaces
/// M_0..M_D, matrices for each simple reflection (degree 0) and each
/// coordinate multiplication x_i (degree +1).
struct GradedModuleSlice {
  int max_degree = 0;
  std::vector<int> dims;               // size max_degree + 1
  std::vector<std::vector<QMat>> s;    // s[i][d]: dims[d] x dims[d]
  std::vector<std::vector<QMat>> x;    // x[i][d]: dims[d+1] x dims[d]

  /// Checks the defining relations on the slice: s_i^2 = 1, the finite braid
  /// relations, commuting x_i, and s_j x_i s_j^{-1} = x_{s_j(coroot_i)}.
  /// Throws std::invalid_argument with a description when malformed.
  void validate(const RootDatum& datum) const;

  /// The polynomial ring C[x_1..x_r] truncated at degree D, with the natural
  /// reflection action and coordinate multiplications.
  static GradedModuleSlice sym_t(const RootDatum& datum, int max_degree);

  /// Two copies of sym_t with every s_i acting by (m1, m2) -> (s m2, s m1):
  /// the module induced from the trivial subgroup of Z/2.
  static GradedModuleSlice sym_t_double_swap(const RootDatum& datum, int max_degree);
};

struct DegreeReport {
  int degree;          // d: examines coroot multiplication M_d^+ -> M_{d+1}^-
  int dim_plus;
  int dim_minus;
  bool injective;
  bool surjective;
  bool bijective() const { return injective && surjective; }
};

struct ExtensionReport {
  std::vector<DegreeReport> degrees;
  bool bijective_on_range = false;
  /// theta matrices M_d -> M_{d-1}, present when bijective_on_range (index 0
  /// maps M_0 to the zero space and is only defined when M_0^- = 0).
  std::optional<std::vector<QMat>> theta;
  bool theta_square_zero = false;
  bool commutation_ok = false;  // twisted commutator relation on the range
  std::string summary;
};

/// Test of the extension criterion for one simple root: the action extends to
/// the Demazure generator iff coroot multiplication M^+ -> M^- is bijective.
/// On a truncated slice only the examined range is decidable; the report says
/// which degrees were checked. When bijective, emits theta matrices via
/// s = a theta + 1 and verifies theta^2 = 0 and the twisted commutator
/// relation on the range.
ExtensionReport module_extension_check(const RootDatum& datum,
                                       const GradedModuleSlice& slice,
                                       int alpha_index);  // 1..rank

}  // namespace nhk
