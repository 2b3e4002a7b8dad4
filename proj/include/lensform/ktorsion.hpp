#pragma once

// Algebraic detectors for the two lowest codimensions: the rank of the
// Whitehead group of Z/p and the minus-part class number h^-(p) of the
// p-th cyclotomic field, which controls the reduced projective class
// group detector.
//
// h^- is evaluated exactly from generalized Bernoulli numbers:
//   h^-(p) = 2p * prod over odd characters chi of (-B_{1,chi} / 2),
// with the character sums carried in Z[x]/(x^{p-1} - 1) and the rational
// value extracted by reduction modulo the (p-1)-st cyclotomic polynomial.

#include "lensform/cyclotomic.hpp"
#include "lensform/exact.hpp"

#include <string>

namespace lensform {

/// Rank of Wh(Z/p): (p-3)/2.
long whitehead_rank(const OddPrime& p);

inline constexpr long kHMinusDefaultBound = 200;

/// Exact minus-part class number of Q(zeta_p).  The result is asserted to
/// be a positive integer; a non-integral product is a fatal diagnostic.
/// p beyond the bound is rejected.
Int h_minus(const OddPrime& p, long bound = kHMinusDefaultBound);

/// Same evaluation but with a caller-chosen primitive root mod p, used to
/// cross-check the default evaluation through an independent character
/// indexing.
Int h_minus_with_root(const OddPrime& p, long primitive_root);

/// Smallest primitive root mod p (not mod p^2).
long smallest_primitive_root_mod_p(const OddPrime& p);

enum class K0Triviality { True, False, UnknownUnderPlusPart };

struct LowCodimDetectors {
  long p = 0;
  long wh_rank = 0;
  Int h_minus_value = 1;
  K0Triviality k0_trivial = K0Triviality::True;
  std::string tate_h0_note;
};

/// Assembles the codimension-1/2 detector data.  The projective class
/// group is reported trivial only when h^- = 1 and p < 163, where the
/// plus part is known trivial; for larger p with h^- = 1 the verdict is
/// unknown-under-plus-part, never silently assumed.
LowCodimDetectors low_codim_detectors(const OddPrime& p);

}  // namespace lensform
