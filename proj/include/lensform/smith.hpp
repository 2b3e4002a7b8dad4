#pragma once

// Integer linear algebra over exact integers: Smith normal form of a
// relation matrix, Hermite-form coset reduction for working inside the
// cokernel, and fraction-free determinant/rank.
//
// Throughout, an m x N matrix is read as m relations on Z^N; its row span
// is the relation lattice and the object of interest is the cokernel
// Z^N / rowspan.

#include "lensform/exact.hpp"

#include <optional>
#include <string>

namespace lensform {

/// Finite abelian group in invariant-factor form d1 | d2 | ... | dr, di >= 2.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;

  bool is_trivial() const { return invariant_factors.empty(); }

  Int order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
  }

  Int exponent() const {
    return invariant_factors.empty() ? Int(1) : invariant_factors.back();
  }

  void validate() const {
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
      if (invariant_factors[i] < 2)
        throw std::logic_error("invariant factors must be >= 2");
      if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
        throw std::logic_error("invariant factors must form a divisibility chain");
    }
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.invariant_factors == b.invariant_factors;
  }

  std::string str() const;
};

struct SmithResult {
  FiniteAbelianGroup torsion;
  Eigen::Index free_rank = 0;
  std::vector<Int> diagonal;  // full diagonal d1 | d2 | ... | dr including 1s
};

/// Smith normal form of a relation matrix: the torsion invariant factors
/// and free rank of coker(Z^N / rowspan).  Deterministic canonical output.
SmithResult smith_normal_form(const IntMat& relations);

/// Row Hermite form of the lattice spanned by the rows of a matrix,
/// supporting canonical coset representatives in Z^N / lattice.
class RowLattice {
 public:
  explicit RowLattice(const IntMat& relations);

  Eigen::Index ambient_dim() const { return hermite_.cols(); }
  Eigen::Index rank() const { return hermite_.rows(); }
  const IntMat& hermite_basis() const { return hermite_; }

  /// Canonical representative of x + lattice; the zero vector iff x lies
  /// in the lattice.  reduce is a homomorphism onto its image:
  /// reduce(x + y) = reduce(reduce(x) + reduce(y)).
  IntVec reduce(IntVec x) const;

  bool contains(const IntVec& x) const { return reduce(std::move(x)).isZero(Int(0)); }

 private:
  IntMat hermite_;             // rank x N, row echelon with positive pivots
  std::vector<Eigen::Index> pivot_col_;
};

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Int integer_determinant(IntMat a);

/// Rank over Q via fraction-free elimination.
Eigen::Index integer_rank(IntMat a);

}  // namespace lensform
