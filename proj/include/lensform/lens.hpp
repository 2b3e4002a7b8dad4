#pragma once

// Lens space data model and the three classification levels: isometry,
// homotopy equivalence, and tangential homotopy equivalence.
//
// A lens space is stored by its odd prime p and the multiset of rotation
// weights, folded into 1 .. (p-1)/2 and sorted, so equality of the stored
// form is exactly unoriented isometry of the presented spaces with the
// identity on fundamental groups.

#include "lensform/exact.hpp"
#include "lensform/repring.hpp"

#include <optional>
#include <span>
#include <string>

namespace lensform {

class LensSpace {
 public:
  LensSpace(const OddPrime& prime, std::span<const long> raw_weights);
  LensSpace(const OddPrime& prime, std::initializer_list<long> raw_weights)
      : LensSpace(prime, std::span<const long>(raw_weights.begin(), raw_weights.size())) {}

  long p() const { return p_; }
  long n() const { return static_cast<long>(weights_.size()); }
  long dimension() const { return 2 * n() - 1; }
  const std::vector<long>& weights() const { return weights_; }

  /// The space with every weight multiplied by the unit s (then folded).
  LensSpace scaled(long s) const;

  VirtualRep tangent_representation() const;

  friend bool operator==(const LensSpace& a, const LensSpace& b) {
    return a.p_ == b.p_ && a.weights_ == b.weights_;
  }
  friend bool operator<(const LensSpace& a, const LensSpace& b) {
    return std::tie(a.p_, a.weights_) < std::tie(b.p_, b.weights_);
  }

  std::string str() const;

 private:
  long p_;
  std::vector<long> weights_;  // sorted, folded into 1 .. (p-1)/2
};

/// Multiplicity profile: counts[k-1] = number of weights equal to k after
/// folding, k = 1 .. (p-1)/2.  An isometry invariant up to permutation.
struct WeightProfile {
  std::vector<long> counts;

  friend bool operator==(const WeightProfile& a, const WeightProfile& b) {
    return a.counts == b.counts;
  }
};

WeightProfile weight_profile(const LensSpace& l);

/// Smallest unit s with {fold(s * a_i)} = {b_i} as multisets, if any.
/// Spaces with different p or different n are simply not isometric.
std::optional<long> isometry_witness(const LensSpace& a, const LensSpace& b);

/// All units e for which a homotopy equivalence a -> b inducing
/// multiplication by e on fundamental groups exists: the classical
/// criterion prod(a_i) = +- e^n prod(b_i) mod p.
std::vector<long> homotopy_witnesses(const LensSpace& a, const LensSpace& b);

struct TangentialResult {
  bool comparable = false;       // same p and n
  bool homotopy_equivalent = false;
  std::optional<long> homotopy_witness;  // smallest
  bool equivalent = false;       // tangential homotopy equivalence
  std::optional<long> witness;   // smallest unit passing the full test
  std::string reason;
};

/// Tangential homotopy equivalence test.  For each homotopy witness e the
/// weights of a are re-indexed by e^{-1} (so the covering map can be taken
/// equivariant) and the difference of tangent representations is tested
/// for (i) membership in the kernel of RO(Z/p) -> KO(L^{2n-1}) and
/// (ii) fiber-homotopy triviality: the mod-p reduction must be a multiple
/// of the sum of all rotation representations.
TangentialResult tangentially_equivalent(const LensSpace& a, const LensSpace& b);

struct ClassificationVerdict {
  bool comparable = false;
  bool isometric = false;
  std::optional<long> isometry_witness;
  bool homotopy_equivalent = false;
  std::optional<long> homotopy_witness;
  bool tangentially_equivalent = false;
  std::optional<long> tangential_witness;
  std::vector<std::string> conclusions;

  void enforce_consistency() const;
};

/// Full three-level verdict for an arbitrary pair.
ClassificationVerdict classify_pair(const LensSpace& a, const LensSpace& b);

/// Conclusions for a pair already known to be tangentially equivalent:
/// for n >= p-1 the pair must be isometric (a failed isometry search is a
/// fatal internal inconsistency); for n < p-1 the stable conclusion is
/// that the products with R^3 are diffeomorphic.
ClassificationVerdict conclude_tangential_pair(const LensSpace& a, const LensSpace& b);

/// Every unit rescaling of the weights yields an isometric space; returns
/// true when that holds for all units (it always should).
bool rigidity_check(const LensSpace& l);

}  // namespace lensform
