#include "lensform/repring.hpp"

namespace lensform {

ComplexVirtualRep complexify(const VirtualRep& v) {
  ComplexVirtualRep out{OddPrime(v.p)};
  out.trivial_rank = v.trivial_rank;
  for (long a = 1; a <= (v.p - 1) / 2; ++a) {
    out.mult(a - 1) += v.mult(a - 1);
    out.mult(v.p - a - 1) += v.mult(a - 1);
  }
  return out;
}

ComplexVirtualRep adams_operation(const ComplexVirtualRep& v, long r) {
  long u = mod_norm(r, v.p);
  if (u == 0) throw std::invalid_argument("Adams exponent must be prime to p");
  long uinv = inverse_mod(u, v.p);
  ComplexVirtualRep out{OddPrime(v.p)};
  out.trivial_rank = v.trivial_rank;
  for (long j = 1; j < v.p; ++j)
    out.mult(j - 1) = v.mult(mod_norm(j * uinv, v.p) - 1);
  return out;
}

namespace {

// Coefficients of (1+s)^j - 1 on s, s^2, ..., s^{N} (truncated).
IntVec truncated_power(long j, Eigen::Index n_basis) {
  IntVec out = IntVec::Zero(n_basis);
  Int binom = 1;
  for (long k = 1; k <= j && k <= n_basis; ++k) {
    binom = binom * (j - k + 1) / k;
    out(k - 1) = binom;
  }
  return out;
}

}  // namespace

KRingPresentation::KRingPresentation(const OddPrime& prime, long n)
    : p_(prime.value()),
      n_(n),
      relations_(build_relations(prime, n)),
      resolved_(smith_normal_form(relations_).torsion),
      lattice_(relations_) {
  // group order must be a power of p
  Int o = resolved_.order();
  while (o % p_ == 0) o /= p_;
  if (o != 1) throw std::logic_error("K-ring order is not a power of p");
  power_table_.reserve(p_);
  for (long j = 0; j < p_; ++j) power_table_.push_back(truncated_power(j, basis_size()));
}

IntMat KRingPresentation::build_relations(const OddPrime& prime, long n) {
  if (n < 1) throw std::invalid_argument("lens dimension parameter n must be >= 1");
  const long p = prime.value();
  const Eigen::Index basis = n - 1;  // monomials s .. s^{n-1}
  IntVec rel = truncated_power(p, basis);  // (1+s)^p - 1 truncated at s^n
  IntMat rows = IntMat::Zero(basis, basis);
  for (Eigen::Index shift = 0; shift < basis; ++shift)
    for (Eigen::Index k = 0; k + shift < basis; ++k)
      rows(shift, k + shift) = rel(k);
  return rows;
}

IntVec KRingPresentation::reduced_class(const ComplexVirtualRep& v) const {
  if (v.p != p_) throw std::invalid_argument("representation and presentation primes differ");
  IntVec x = IntVec::Zero(basis_size());
  for (long j = 1; j < p_; ++j)
    if (v.mult(j - 1) != 0) x += v.mult(j - 1) * power_table_[j];
  return lattice_.reduce(std::move(x));
}

IntVec KRingPresentation::conjugate_class(const IntVec& x) const {
  // t -> t^{-1} = t^{p-1}: substitute s -> (1+s)^{p-1} - 1 monomial by monomial.
  IntVec out = IntVec::Zero(basis_size());
  IntVec conj_s = power_table_[p_ - 1];
  IntVec power = conj_s;
  for (Eigen::Index k = 1; k <= basis_size(); ++k) {
    if (x(k - 1) != 0) out += x(k - 1) * power;
    if (k < basis_size()) {
      // multiply power by conj_s, truncating beyond the basis
      IntVec next = IntVec::Zero(basis_size());
      for (Eigen::Index i = 0; i < basis_size(); ++i) {
        if (power(i) == 0) continue;
        for (Eigen::Index j = 0; i + j + 1 < basis_size(); ++j)
          next(i + j + 1) += power(i) * conj_s(j);
      }
      power = next;
    }
  }
  return lattice_.reduce(std::move(out));
}

std::shared_ptr<const KRingPresentation> k_ring_of_lens(const OddPrime& p, long n) {
  static SharedCache<std::pair<long, long>, std::shared_ptr<const KRingPresentation>> cache;
  return cache.get({p.value(), n}, [&] {
    return std::make_shared<const KRingPresentation>(p, n);
  });
}

IntVec stable_class(const VirtualRep& v, const KRingPresentation& k) {
  if (v.p != k.p()) throw std::invalid_argument("representation and presentation primes differ");
  IntVec cls = k.reduced_class(complexify(v));
  // real classes land in the self-conjugate part of the complex K-ring
  if (!k.is_self_conjugate_class(cls))
    throw std::logic_error("real stable class failed the self-conjugacy check");
  return cls;
}

bool in_stable_kernel(const VirtualRep& v, const OddPrime& p, long n) {
  if (v.p != p.value())
    throw std::invalid_argument("representation and presentation primes differ");
  if (v.dimension() != 0)
    throw std::domain_error("kernel membership requires virtual dimension zero");
  auto pres = k_ring_of_lens(p, n);
  bool in_kernel = stable_class(v, *pres).isZero(Int(0));
  if (in_kernel && v.trivial_rank == 0) {
    for (Eigen::Index i = 0; i < v.mult.size(); ++i)
      if (v.mult(i) % p.value() != 0)
        throw std::logic_error(
            "kernel element violates the p*RO containment; "
            "presentation disagrees with the rigidity argument");
  }
  return in_kernel;
}

}  // namespace lensform
