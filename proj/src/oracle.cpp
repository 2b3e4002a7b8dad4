#include "lensform/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace lensform {
namespace oracle {

namespace {

Int multiset_count(long options, long n) {
  // C(options + n - 1, n)
  Int num = 1, den = 1;
  for (long k = 1; k <= n; ++k) {
    num *= options + n - k;
    den *= k;
  }
  return num / den;
}

void emit_multisets(long options, long n, long min_value, std::vector<long>& current,
                    std::vector<std::vector<long>>& out) {
  if (static_cast<long>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  for (long v = min_value; v <= options; ++v) {
    current.push_back(v);
    emit_multisets(options, n, v, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<LensSpace> enumerate_lens_spaces(const OddPrime& p, long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const long options = p.half();
  if (multiset_count(options, n) > 500000)
    throw std::domain_error("enumeration exceeds the desk-scale bound");
  std::vector<std::vector<long>> multisets;
  std::vector<long> current;
  emit_multisets(options, n, 1, current, multisets);
  std::vector<LensSpace> out;
  out.reserve(multisets.size());
  for (const auto& w : multisets) out.emplace_back(p, std::span<const long>(w));
  return out;
}

IsometryClasses exhaustive_isometry_classes(const OddPrime& p, long n) {
  std::vector<LensSpace> spaces = enumerate_lens_spaces(p, n);
  IsometryClasses out;
  out.space_count = static_cast<long>(spaces.size());
  // orbit representative: the least rescaling of the weight multiset
  std::map<LensSpace, std::vector<LensSpace>> by_rep;
  for (const LensSpace& l : spaces) {
    LensSpace rep = l;
    for (long s = 2; s < p.value(); ++s) rep = std::min(rep, l.scaled(s));
    by_rep[rep].push_back(l);
  }
  for (auto& [rep, members] : by_rep) out.classes.push_back(std::move(members));
  return out;
}

namespace {

// The constrained difference pattern for re-indexed tangential witnesses:
// profiles are equal, or differ by one +p and one -p entry over a base
// value c in {0, 1}.
bool profile_pattern_conforms(const std::vector<long>& a, const std::vector<long>& b,
                              long p) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if ((a[j] - b[j]) % p != 0) return false;
  if (a == b) return true;
  long plus = -1, minus = -1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == b[j]) continue;
    if (a[j] - b[j] == p && plus < 0)
      plus = static_cast<long>(j);
    else if (b[j] - a[j] == p && minus < 0)
      minus = static_cast<long>(j);
    else
      return false;
  }
  if (plus < 0 || minus < 0) return false;
  long c = b[plus];  // base value at the swapped slots
  if (c != 0 && c != 1) return false;
  if (a[minus] != c) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (static_cast<long>(j) == plus || static_cast<long>(j) == minus) continue;
    if (a[j] != c || b[j] != c) return false;
  }
  return true;
}

}  // namespace

RigidityBandReport verify_rigidity_band(const OddPrime& prime) {
  const long p = prime.value();
  if (p != 3 && p != 5 && p != 7)
    throw std::domain_error("rigidity sweep is configured for p in {3, 5, 7}");
  RigidityBandReport rep;
  rep.p = p;
  for (long n = p - 1; n <= 2 * (p - 1); ++n) {
    std::vector<LensSpace> spaces = enumerate_lens_spaces(prime, n);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      for (std::size_t j = i; j < spaces.size(); ++j) {
        ++rep.pairs_checked;
        TangentialResult t = tangentially_equivalent(spaces[i], spaces[j]);
        if (!t.equivalent) continue;
        ++rep.tangential_pairs;
        if (!isometry_witness(spaces[i], spaces[j])) {
          rep.all_isometric = false;
          rep.violations.push_back("tangentially equivalent but not isometric: " +
                                   spaces[i].str() + " vs " + spaces[j].str());
        }
        for (long e : homotopy_witnesses(spaces[i], spaces[j])) {
          LensSpace re_indexed = spaces[i].scaled(inverse_mod(e, p));
          VirtualRep diff =
              re_indexed.tangent_representation() - spaces[j].tangent_representation();
          bool fht = true;
          Int first = ((diff.mult(0) % p) + p) % p;
          for (Eigen::Index k = 1; k < diff.mult.size(); ++k)
            if (((diff.mult(k) % p) + p) % p != first) fht = false;
          if (!fht || !in_stable_kernel(diff, prime, n)) continue;
          std::vector<long> pa = weight_profile(re_indexed).counts;
          std::vector<long> pb = weight_profile(spaces[j]).counts;
          if (!profile_pattern_conforms(pa, pb, p)) {
            rep.patterns_conform = false;
            std::ostringstream os;
            os << "witness " << e << " of " << spaces[i].str() << " vs "
               << spaces[j].str() << " violates the coefficient pattern";
            rep.violations.push_back(os.str());
          }
        }
      }
    }
  }
  return rep;
}

namespace {

using Key = std::vector<long>;

// subgroup of (Z/D)^N generated by the rows, as an explicit element set
std::set<Key> span_mod(const IntMat& rows, long d) {
  const Eigen::Index n = rows.cols();
  std::set<Key> span;
  Key zero(n, 0);
  span.insert(zero);
  std::vector<Key> frontier{zero};
  std::vector<Key> gens;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    Key g(n);
    bool nz = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      g[j] = static_cast<long>(((rows(i, j) % d) + d) % d);
      nz = nz || g[j] != 0;
    }
    if (nz) gens.push_back(std::move(g));
  }
  while (!frontier.empty()) {
    Key base = std::move(frontier.back());
    frontier.pop_back();
    for (const Key& g : gens) {
      Key next(n);
      for (Eigen::Index j = 0; j < n; ++j) next[j] = (base[j] + g[j]) % d;
      if (span.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return span;
}

// invariant factors of a finite abelian group from its exponent-counting
// function: count(e) = number of elements killed by e
std::vector<Int> factors_from_counts(const Int& order,
                                     const std::function<Int(const Int&)>& count) {
  std::vector<Int> factors;
  if (order == 1) return factors;
  // collect the prime-power profile per prime
  std::map<Int, std::vector<long>> ranks;  // prime -> (number of factors with q-exponent >= j)
  Int rest = order;
  for (Int q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    ranks[q] = {};
  }
  if (rest > 1) ranks[rest] = {};
  for (auto& [q, profile] : ranks) {
    Int prev = 1;
    for (long j = 1;; ++j) {
      Int cur = count(int_pow(static_cast<long>(q), j));
      // count(q^j)/count(q^{j-1}) = q^{#factors with exponent >= j}
      Int ratio = cur / prev;
      long r = 0;
      while (ratio > 1) {
        ratio /= q;
        ++r;
      }
      if (r == 0) break;
      profile.push_back(r);
      prev = cur;
    }
  }
  // assemble invariant factors largest-first, then reverse
  std::size_t chain = 0;
  for (auto& [q, profile] : ranks) chain = std::max(chain, profile.empty() ? 0 : static_cast<std::size_t>(profile[0]));
  std::vector<Int> build(chain, Int(1));
  for (auto& [q, profile] : ranks) {
    // profile[j-1] factors have q-exponent >= j; factor i (0-based,
    // largest first) gets q-exponent = #{j : profile[j-1] > i}
    for (std::size_t i = 0; i < chain; ++i) {
      long e = 0;
      for (std::size_t j = 0; j < profile.size(); ++j)
        if (profile[j] > static_cast<long>(i)) ++e;
      build[i] *= int_pow(static_cast<long>(q), e);
    }
  }
  std::reverse(build.begin(), build.end());
  for (const Int& d : build)
    if (d > 1) factors.push_back(d);
  return factors;
}

}  // namespace

BruteCokernel brute_cokernel(const IntMat& relations) {
  BruteCokernel out;
  const Eigen::Index n = relations.cols();
  const Eigen::Index r = integer_rank(relations);
  out.free_rank = n - r;
  if (r == 0 || n == 0) return out;  // no torsion without relations

  // Pick r independent rows and a nonzero r x r minor D: D annihilates
  // the torsion part, so the torsion survives intact in (Z/D)^N.
  IntMat chosen(r, n);
  {
    Eigen::Index taken = 0;
    IntMat probe(0, n);
    for (Eigen::Index i = 0; i < relations.rows() && taken < r; ++i) {
      IntMat trial(taken + 1, n);
      if (taken > 0) trial.topRows(taken) = probe;
      trial.row(taken) = relations.row(i);
      if (integer_rank(trial) == taken + 1) {
        probe = trial;
        ++taken;
      }
    }
    chosen = probe;
  }
  Int d_big = 0;
  {
    // find column subset with nonzero determinant
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < n && static_cast<Eigen::Index>(cols.size()) < r; ++j) {
      cols.push_back(j);
      IntMat sub(r, cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) sub.col(k) = chosen.col(cols[k]);
      if (integer_rank(sub) != static_cast<Eigen::Index>(cols.size())) cols.pop_back();
    }
    IntMat square(r, r);
    for (Eigen::Index k = 0; k < r; ++k) square.col(k) = chosen.col(cols[k]);
    d_big = abs(integer_determinant(square));
  }
  if (d_big == 0) throw std::logic_error("independent rows produced a zero minor");
  if (d_big > 100000) throw std::domain_error("cokernel too large for brute enumeration");
  const long d = static_cast<long>(d_big);
  if (d == 1) return out;  // torsion is trivial

  std::set<Key> span = span_mod(relations, d);
  const Int span_size = static_cast<long>(span.size());
  Int group_order = int_pow(d, n) / span_size;  // |(Z/D)^N / span| = |torsion| * D^{free}
  Int torsion_order = group_order / int_pow(d, out.free_rank);
  if (torsion_order > 10000)
    throw std::domain_error("cokernel torsion exceeds the 10^4 bound");

  // count(e) in the full quotient group, then strip the free-rank factors
  auto count_full = [&](const Int& e) -> Int {
    Int g = gcd(e, Int(d));
    long gl = static_cast<long>(g);
    Int members = 0;
    for (const Key& s : span) {
      bool in_image = true;
      for (long coord : s)
        if (coord % gl != 0) {
          in_image = false;
          break;
        }
      if (in_image) ++members;
    }
    // |{x : e x in span}| / |span| = g^N * |span ∩ (g)·(Z/D)^N| / |span|
    return int_pow(static_cast<long>(g), n) * members / span_size;
  };
  std::vector<Int> all = factors_from_counts(group_order, count_full);
  // The quotient is torsion ⊕ (Z/D)^{free_rank}; the free-rank slots sit at
  // the top of the divisibility chain as factors equal to D.
  for (Eigen::Index i = 0; i < out.free_rank; ++i) {
    if (all.empty() || all.back() != d)
      throw std::logic_error("expected a full Z/D factor for each free rank slot");
    all.pop_back();
  }
  out.torsion.invariant_factors = std::move(all);
  out.torsion.validate();
  return out;
}

Int h_minus_determinant(const OddPrime& prime) {
  const long p = prime.value();
  const long q = (p - 1) / 2;
  IntMat m(q, q);
  for (long a = 1; a <= q; ++a)
    for (long b = 1; b <= q; ++b)
      m(a - 1, b - 1) = mod_norm(a * inverse_mod(b, p), p);
  Int det = integer_determinant(m);
  Int scale = int_pow(p, (p - 3) / 2);
  if ((p - 3) / 2 % 2 == 1) scale = -scale;  // (-p)^{(p-3)/2}
  if (det % scale != 0)
    throw std::logic_error("half-system determinant is not the expected multiple");
  return det / scale;
}

}  // namespace oracle
}  // namespace lensform
