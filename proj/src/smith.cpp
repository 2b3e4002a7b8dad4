#include "lensform/smith.hpp"

#include <sstream>

namespace lensform {

std::string FiniteAbelianGroup::str() const {
  if (invariant_factors.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << invariant_factors[i];
  }
  return os.str();
}

namespace {

// Position of an entry of minimal nonzero absolute value in the submatrix
// starting at (t, t); nullopt when that submatrix is zero.
std::optional<std::pair<Eigen::Index, Eigen::Index>> min_nonzero(const IntMat& a,
                                                                 Eigen::Index t) {
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  Int best_abs = 0;
  for (Eigen::Index i = t; i < a.rows(); ++i)
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& relations) {
  IntMat a = relations;
  const Eigen::Index n_cols = a.cols();
  const Eigen::Index bound = std::min(a.rows(), a.cols());
  std::vector<Int> diag;

  for (Eigen::Index t = 0; t < bound; ++t) {
    auto pos = min_nonzero(a, t);
    if (!pos) break;
    a.row(t).swap(a.row(pos->first));
    a.col(t).swap(a.col(pos->second));

    // Eliminate the pivot row and column; a failed exact division lowers
    // the pivot, so this terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) {  // remainder became the smaller pivot
          a.row(t).swap(a.row(i));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          clean = false;
        }
      }
    }

    // Enforce d_t | (everything below-right): fold a bad entry's row in
    // and redo the elimination of this pivot.
    bool divisible = true;
    for (Eigen::Index i = t + 1; i < a.rows() && divisible; ++i)
      for (Eigen::Index j = t + 1; j < a.cols() && divisible; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.row(t) += a.row(i);
          divisible = false;
        }
    if (!divisible) {
      --t;
      continue;
    }
    diag.push_back(abs(a(t, t)));
  }

  SmithResult out;
  out.diagonal = diag;
  out.free_rank = n_cols - static_cast<Eigen::Index>(diag.size());
  for (const Int& d : diag)
    if (d > 1) out.torsion.invariant_factors.push_back(d);
  out.torsion.validate();
  return out;
}

RowLattice::RowLattice(const IntMat& relations) {
  IntMat a = relations;
  const Eigen::Index n = a.cols();
  Eigen::Index r = 0;  // rows 0..r-1 are finished echelon rows
  for (Eigen::Index col = 0; col < n && r < a.rows(); ++col) {
    // gcd-reduce the column below the working row to a single entry
    while (true) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = r; i < a.rows(); ++i)
        if (a(i, col) != 0 && (pivot < 0 || abs(a(i, col)) < abs(a(pivot, col))))
          pivot = i;
      if (pivot < 0) break;
      a.row(r).swap(a.row(pivot));
      bool others = false;
      for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        Int q = a(i, col) / a(r, col);
        a.row(i) -= q * a.row(r);
        if (a(i, col) != 0) others = true;
      }
      if (!others) break;
    }
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0) a.row(r) = -a.row(r);
    // reduce entries above the pivot into [0, pivot)
    for (Eigen::Index i = 0; i < r; ++i) {
      Int q = a(i, col) / a(r, col);
      if (a(i, col) - q * a(r, col) < 0) q -= 1;
      a.row(i) -= q * a.row(r);
    }
    pivot_col_.push_back(col);
    ++r;
  }
  hermite_ = a.topRows(r);
}

IntVec RowLattice::reduce(IntVec x) const {
  if (x.size() != hermite_.cols())
    throw std::invalid_argument("vector dimension does not match lattice");
  for (Eigen::Index i = 0; i < hermite_.rows(); ++i) {
    const Eigen::Index c = pivot_col_[i];
    Int q = x(c) / hermite_(i, c);
    if (x(c) - q * hermite_(i, c) < 0) q -= 1;
    if (q != 0) x -= q * hermite_.row(i).transpose();
  }
  return x;
}

Int integer_determinant(IntMat a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Int denom = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / denom;
    denom = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Eigen::Index integer_rank(IntMat a) {
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < a.cols() && r < a.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(r).swap(a.row(pivot));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      // integer cross-multiplication elimination keeps everything exact
      Int g = gcd(a(i, col), a(r, col));
      Int fr = a(i, col) / g, fi = a(r, col) / g;
      a.row(i) = (fi * a.row(i) - fr * a.row(r)).eval();
    }
    ++r;
  }
  return r;
}

}  // namespace lensform
