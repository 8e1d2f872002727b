#pragma once

#include <optional>
#include <map>
#include <string>
#include <vector>

#include "nhk/intmat.hpp"

namespace nhk {

class RootDatum;

/// Element of the weight lattice, coordinatized by pairings with the simple
/// coroots: coords[i] = <mu, coroot_i>. The fundamental weight w_j is the
/// standard basis vector e_j in these coordinates.
struct Weight {
  const RootDatum* datum = nullptr;
  std::vector<long long> c;

  friend bool operator==(const Weight&, const Weight&) = default;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(long long k) const;
};

/// Element of the coroot lattice in simple-coroot coordinates.
struct Coroot {
  const RootDatum* datum = nullptr;
  std::vector<long long> c;

  friend bool operator==(const Coroot&, const Coroot&) = default;
  Coroot operator+(const Coroot& o) const;
  Coroot operator-() const;
};

/// A root carries three coordinatizations: the expansion in simple roots, the
/// weight coordinates of the root itself, and the simple-coroot coordinates
/// of its coroot.
struct Root {
  std::vector<long long> root_coords;
  Weight wt;
  Coroot cv;
  long long height = 0;
};

/// Finite crystallographic root datum for the types A-G. Immutable after
/// construction; safe to share across threads.
///
/// Conventions (pinned here and documented in the README):
///   cartan.at(i, j) = <alpha_j, coroot_i>, so the weight coordinates of the
///   simple root alpha_j form the j-th *column* of the Cartan matrix, and
///   coordinates on t* are x_i = <x, coroot_i>.
class RootDatum {
 public:
  /// Builds the datum for a label such as "A2", "B3", "C2", "D4", "E6", "F4",
  /// "G2". Throws std::invalid_argument for unknown or unsupported labels.
  static RootDatum build(const std::string& label);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const IntMat& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_[highest_]; }
  /// Description of the coordinate conventions in force.
  const std::string& coordinate_convention() const { return convention_; }

  Weight weight(std::vector<long long> coords) const;
  Coroot coroot(std::vector<long long> coords) const;
  Weight zero_weight() const;
  Weight fundamental_weight(int j) const;
  Weight simple_root(int j) const;     // column j of the Cartan matrix
  Coroot simple_coroot(int j) const;   // basis vector e_j

  /// The bilinear pairing <mu, v>; rejects operands from another datum.
  long long pairing(const Weight& mu, const Coroot& v) const;

  /// Some weight mu with <mu, v> = 1, produced by a deterministic iterated
  /// extended gcd over the coordinates of v. Throws (reporting the gcd) when
  /// the coordinates have gcd != 1.
  Weight find_weight_pairing_one(const Coroot& v) const;

  /// Looks a weight-coordinate vector up in the root table. Returns
  /// (index into positive_roots, +1/-1) or nullopt if not a root.
  std::optional<std::pair<int, int>> classify_root(
      const std::vector<long long>& weight_coords) const;

  /// |X*/Q| = det(Cartan matrix); the order of the fundamental group.
  long long fundamental_group_order() const { return det_; }

  /// Weyl-group order, from the closure computed at build time.
  long long weyl_order() const { return weyl_order_; }

 private:
  RootDatum() = default;
  void generate_roots();
  void validate() const;

  std::string label_;
  int rank_ = 0;
  IntMat cartan_;
  std::vector<Root> positive_;
  int highest_ = -1;
  long long det_ = 0;
  long long weyl_order_ = 0;
  std::string convention_;
  std::map<std::vector<long long>, int> index_;  // weight coords -> index
};

}  // namespace nhk
