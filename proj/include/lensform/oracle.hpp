#pragma once

// Independent brute-force verifiers: exhaustive weight-multiset
// enumeration, isometry-class partitions, the low-dimension rigidity
// sweep, direct cokernel enumeration (checking Smith reduction), and a
// determinant-based class number cross-check.  Everything here is kept
// deliberately naive; agreement with the closed-form modules is part of
// the test contract.

#include "lensform/lens.hpp"
#include "lensform/smith.hpp"

#include <string>

namespace lensform {
namespace oracle {

/// All lens spaces with the given p and n up to weight-multiset equality,
/// in lexicographic order.  Guarded by a size bound.
std::vector<LensSpace> enumerate_lens_spaces(const OddPrime& p, long n);

struct IsometryClasses {
  std::vector<std::vector<LensSpace>> classes;
  long space_count = 0;
};

/// Partition of the enumeration under the isometry relation.
IsometryClasses exhaustive_isometry_classes(const OddPrime& p, long n);

struct RigidityBandReport {
  long p = 0;
  long pairs_checked = 0;
  long tangential_pairs = 0;
  std::vector<std::string> violations;
  bool all_isometric = true;
  bool patterns_conform = true;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive check over p-1 <= n <= 2(p-1): every tangentially
/// equivalent pair must be isometric, and for every passing witness the
/// re-indexed weight profiles must differ by the constrained pattern
/// (coefficientwise multiples of p; either equal, or a single +p/-p swap
/// over a base value c in {0, 1}).  Violations are collected, never
/// silently dropped.
RigidityBandReport verify_rigidity_band(const OddPrime& p);

struct BruteCokernel {
  FiniteAbelianGroup torsion;
  Eigen::Index free_rank = 0;
};

/// Cokernel of a relation matrix by direct enumeration: the torsion part
/// is reconstructed by counting elements of each exponent inside the
/// finite quotient (Z/D)^N / (rows mod D) for a suitable D, with the free
/// rank from fraction-free elimination.  Rejects torsion parts larger
/// than 10^4 elements.
BruteCokernel brute_cokernel(const IntMat& relations);

/// Class number cross-check through the classical half-system
/// determinant: det[(a b^{-1} mod p)]_{1<=a,b<=(p-1)/2} equals
/// (-p)^{(p-3)/2} h^-(p).
Int h_minus_determinant(const OddPrime& p);

}  // namespace oracle
}  // namespace lensform
