#pragma once

// Exact signature-defect (rho) invariants of lens spaces.
//
// For L(p; a_1..a_n) the value at a nontrivial group element g is the
// product over the weights of (z^{g a} + 1)/(z^{g a} - 1) with z a fixed
// primitive p-th root of unity, assembled in exact cyclotomic arithmetic.
// Values are stored per group element because re-aligning fundamental
// groups along a homotopy-equivalence witness permutes the elements.
//
// Orientation: the folded canonical weights orient the space; reversing
// orientation negates every value.  Comparisons therefore carry both an
// oriented and an unoriented verdict.

#include "lensform/cyclotomic.hpp"
#include "lensform/lens.hpp"

namespace lensform {

struct RhoInvariant {
  long p;
  std::vector<Cyclotomic> values;  // index g-1 for g = 1 .. p-1
  Cyclotomic total;                // sum over all g; always rational

  const Cyclotomic& at(long g) const {
    if (g <= 0 || g >= p) throw std::invalid_argument("group element must be 1..p-1");
    return values[g - 1];
  }
};

RhoInvariant rho_invariant(const LensSpace& l);

struct RhoComparison {
  bool comparable = false;   // a homotopy-equivalence witness exists
  std::string reason;
  long witness = 0;          // alignment used for the reported difference
  bool oriented_zero = false;    // some witness aligns the values exactly
  bool unoriented_zero = false;  // some witness aligns them up to a global sign
  std::vector<Cyclotomic> difference;  // rho_a(g) - rho_b(witness * g), g = 1..p-1
};

/// Element-wise rho difference after aligning fundamental groups through
/// each homotopy-equivalence witness.  A zero verdict marks the pair as
/// candidates for being normally cobordant.
RhoComparison rho_difference(const LensSpace& a, const LensSpace& b);

}  // namespace lensform
