#pragma once

// The codimension filtration governing when tangentially homotopy
// equivalent (fake) lens spaces become homeomorphic after crossing with a
// euclidean factor, together with desuspension orders, the loop-vs-circle
// order model, and per-pair thickness reports.
//
// The filtration subgroups are cyclic p-groups determined by their orders;
// only the order data is modelled.  With m = floor(n/(p-1)):
//   * the image of the classifying-space cohomotopy has order p^m;
//   * its image in the normal-invariant group has order p^m when
//     n != 0 mod p-1 and p^{m-1} otherwise;
//   * the even-step quotients for j = 1..m each have order p or 1, with
//     exactly one trivial quotient iff n = 0 mod p-1.  When n = j(p-1)
//     with j <= p-1 the trivial quotient is pinned at j0 = 1; otherwise
//     its position is reported as unknown (the conjecture j0 = 1 is
//     surfaced as an annotation, never silently assumed).

#include "lensform/exact.hpp"
#include "lensform/lens.hpp"
#include "lensform/rho.hpp"

#include <optional>
#include <string>

namespace lensform {

struct ThicknessFiltration {
  long p = 0;
  long n = 0;
  long m = 0;                     // floor(n/(p-1))
  Int t_order = 1;                // order of the cohomotopy image T(L) = p^m
  Int tprime_order = 1;           // order of its image among normal invariants
  bool exceptional = false;       // n = 0 mod p-1
  std::vector<long> quotient_orders;      // size m, each 1 or p
  bool positions_known = true;            // per-j assignment meaningful?
  std::optional<long> exceptional_j0;     // set only when pinned
  std::optional<long> smooth_j0_bound;    // smooth-category bound nu+1, informational
  std::string note;
  Int e0k_order = 1;              // order of the Adams summand E0K of KO(L)
  long stable_codim = 2;          // 2m+2: equality is guaranteed from here on

  /// Orders of the even filtration subgroups theta_2, theta_4, ...,
  /// theta_{2m+2}; only available when the quotient positions are known.
  std::optional<std::vector<Int>> even_orders() const;

  friend bool operator==(const ThicknessFiltration& a, const ThicknessFiltration& b) {
    return a.p == b.p && a.n == b.n && a.m == b.m && a.t_order == b.t_order &&
           a.tprime_order == b.tprime_order && a.exceptional == b.exceptional &&
           a.quotient_orders == b.quotient_orders &&
           a.positions_known == b.positions_known &&
           a.exceptional_j0 == b.exceptional_j0 &&
           a.smooth_j0_bound == b.smooth_j0_bound && a.note == b.note &&
           a.e0k_order == b.e0k_order && a.stable_codim == b.stable_codim;
  }
};

/// Filtration data for (p, n); requires n >= 3.
ThicknessFiltration theta_filtration(const OddPrime& p, long n);

struct DesuspensionResult {
  long exponent = 0;          // the input order exponent t
  long min_codim = 0;         // minimal k with the order dividing p^k
  std::optional<long> sphere_dim;  // 2k-1; absent in the degenerate t = 0 case
  bool degenerate = false;    // order-1 class, desuspends fully
  bool extrapolated = false;  // t = m lies outside the proved range 1..m-1
};

/// Minimal sphere of origin for a class of order p^t in the cohomotopy
/// image: it desuspends to codimension k iff p^t divides p^k, so k = t.
DesuspensionResult min_desuspension(long t, const ThicknessFiltration& filt);

struct OrderPair {
  Int loop_order;
  Int circle_order;
};

/// Orders of an element of the ideal (p) in Z/p^{m+1} under the additive
/// (loop) structure and under the circle operation x o y = x + y + xy.
/// The circle order is obtained by brute-force iteration; the contract is
/// that the two orders agree.  Units of the ring are rejected.
OrderPair circle_order(long x, const OddPrime& p, long m);

struct ImageJOrder {
  long nu = 0;
  Int order = 1;              // p^nu, following the source convention
  bool flagged_trivial = false;   // nu = 0 gives the trivial group; flagged
  std::string discrepancy_note;   // the standard convention reads p^{nu+1}
};

/// Order of the p-primary image-of-J group in dimension 2n-1 for
/// n = p^nu (p-1) r with r prime to p.  Requires n = 0 mod p-1.
ImageJOrder image_j_order(const OddPrime& p, long n);

enum class CodimState { Equal, Unequal, Undecided };

struct CodimVerdict {
  long codim = 0;
  CodimState state = CodimState::Undecided;
  std::string note;
};

struct ThicknessReport {
  bool comparable = false;  // pair is tangentially equivalent
  std::string reason;
  long p = 0;
  long n = 0;
  long stable_codim = 2;
  std::vector<CodimVerdict> verdicts;  // codim 0 .. stable_codim
  std::vector<std::string> detectors;  // which invariants were consulted
};

/// Per-codimension equality report for a tangentially equivalent pair:
/// codim 0 by the isometry search, codims 1-2 by the torsion detector
/// status, codim 3 by the rho difference, higher codims by the filtration
/// orders, with guaranteed equality from stable_codim on.  Verdicts are
/// monotone in the codimension.
ThicknessReport thickness_report(const LensSpace& a, const LensSpace& b);

}  // namespace lensform
