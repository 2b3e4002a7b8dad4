#pragma once

// Real and complex representation rings of Z/p, Adams operations, and the
// reduced K-ring of a lens space presented by generators and relations.
//
// The reduced complex K-ring of L^{2n-1}(p) is presented on the monomial
// basis s, s^2, ..., s^{n-1}, where s = t - 1 for the tautological line
// character t, subject to s^n = 0 (cell truncation) and (1+s)^p = 1
// (character relation).  The additive relation lattice is spanned by
// s^j * ((1+s)^p - 1) truncated at s^n; Smith reduction of that lattice
// resolves the group, whose order matches the count of even cells.

#include "lensform/exact.hpp"
#include "lensform/smith.hpp"

#include <memory>

namespace lensform {

/// Virtual real representation of Z/p: a trivial rank plus integer
/// multiplicities of the 2-dimensional rotation representations indexed
/// by a = 1 .. (p-1)/2.  Index a and p-a are identified on input.
struct VirtualRep {
  long p;
  Int trivial_rank;
  IntVec mult;  // size (p-1)/2, entry a-1 = coefficient of rotation a

  explicit VirtualRep(const OddPrime& prime)
      : p(prime.value()), trivial_rank(0), mult(IntVec::Zero(prime.half())) {}

  /// Adds k copies of the rotation representation with raw weight a
  /// (any residue not divisible by p).
  void add_rotation(long a, const Int& k = 1) {
    long r = mod_norm(a, p);
    if (r == 0) throw std::invalid_argument("rotation weight must be nonzero mod p");
    if (r > (p - 1) / 2) r = p - r;
    mult(r - 1) += k;
  }

  Int dimension() const { return trivial_rank + 2 * mult.sum(); }

  friend VirtualRep operator-(const VirtualRep& a, const VirtualRep& b) {
    if (a.p != b.p) throw std::invalid_argument("representations of different groups");
    VirtualRep out(OddPrime(a.p));
    out.trivial_rank = a.trivial_rank - b.trivial_rank;
    out.mult = a.mult - b.mult;
    return out;
  }
  friend VirtualRep operator+(const VirtualRep& a, const VirtualRep& b) {
    if (a.p != b.p) throw std::invalid_argument("representations of different groups");
    VirtualRep out(OddPrime(a.p));
    out.trivial_rank = a.trivial_rank + b.trivial_rank;
    out.mult = a.mult + b.mult;
    return out;
  }
  friend bool operator==(const VirtualRep& a, const VirtualRep& b) {
    return a.p == b.p && a.trivial_rank == b.trivial_rank && a.mult == b.mult;
  }
};

/// Virtual complex representation of Z/p on the characters t^j, j = 1..p-1.
struct ComplexVirtualRep {
  long p;
  Int trivial_rank;
  IntVec mult;  // size p-1, entry j-1 = coefficient of t^j

  explicit ComplexVirtualRep(const OddPrime& prime)
      : p(prime.value()), trivial_rank(0), mult(IntVec::Zero(prime.value() - 1)) {}

  /// True when mult(j) = mult(p-j) for every j, i.e. the class is fixed by
  /// complex conjugation and hence comes from a real representation.
  bool is_self_conjugate() const {
    for (long j = 1; j < p; ++j)
      if (mult(j - 1) != mult(p - j - 1)) return false;
    return true;
  }

  friend ComplexVirtualRep operator+(const ComplexVirtualRep& a, const ComplexVirtualRep& b) {
    if (a.p != b.p) throw std::invalid_argument("representations of different groups");
    ComplexVirtualRep out(OddPrime(a.p));
    out.trivial_rank = a.trivial_rank + b.trivial_rank;
    out.mult = a.mult + b.mult;
    return out;
  }
  friend bool operator==(const ComplexVirtualRep& a, const ComplexVirtualRep& b) {
    return a.p == b.p && a.trivial_rank == b.trivial_rank && a.mult == b.mult;
  }
};

/// Complexification: each rotation a contributes t^a + t^{p-a}; the
/// trivial real summand keeps its rank.
ComplexVirtualRep complexify(const VirtualRep& v);

/// Adams operation psi^r, gcd(r, p) = 1: the coefficient of t^j in the
/// output is the coefficient of t^{j r^{-1} mod p} in the input.
ComplexVirtualRep adams_operation(const ComplexVirtualRep& v, long r);

/// Presentation of the reduced complex K-ring of L^{2n-1}(p).
class KRingPresentation {
 public:
  KRingPresentation(const OddPrime& prime, long n);

  long p() const { return p_; }
  long n() const { return n_; }
  Eigen::Index basis_size() const { return relations_.cols(); }
  const IntMat& relations() const { return relations_; }
  const FiniteAbelianGroup& resolved_group() const { return resolved_; }
  const RowLattice& relation_lattice() const { return lattice_; }

  /// Reduced class of a virtual complex representation: substitute
  /// t^j -> (1+s)^j, subtract the rank, and return the canonical coset
  /// representative on the monomial basis.
  IntVec reduced_class(const ComplexVirtualRep& v) const;

  /// Conjugation t -> t^{-1} applied to a canonical representative.
  IntVec conjugate_class(const IntVec& x) const;

  bool is_self_conjugate_class(const IntVec& x) const {
    return lattice_.contains(conjugate_class(x) - x);
  }

 private:
  static IntMat build_relations(const OddPrime& prime, long n);

  long p_;
  long n_;
  IntMat relations_;
  FiniteAbelianGroup resolved_;
  RowLattice lattice_;
  std::vector<IntVec> power_table_;  // (1+s)^j - 1 truncated, j = 0..p-1
};

/// Shared, cached presentation for (p, n); presentations are immutable.
std::shared_ptr<const KRingPresentation> k_ring_of_lens(const OddPrime& p, long n);

/// Image of v - dim(v) * trivial under RO(Z/p) -> KO(L^{2n-1}), computed
/// through the complex presentation (complexification is injective on
/// these odd-torsion groups).  Canonical representative; throws on a
/// p mismatch.
IntVec stable_class(const VirtualRep& v, const KRingPresentation& k);

/// Whether a virtual-dimension-zero class maps to zero in KO(L^{2n-1}),
/// i.e. the associated stable bundle is trivial.  For inputs with no
/// trivial summand (weight differences) a true verdict additionally
/// asserts that every coefficient is divisible by p, the containment in
/// p * RO(Z/p) that the rigidity argument rests on; violation of that
/// containment is reported as a hard error, never patched.
bool in_stable_kernel(const VirtualRep& v, const OddPrime& p, long n);

}  // namespace lensform
