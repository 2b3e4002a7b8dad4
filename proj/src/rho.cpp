#include "lensform/rho.hpp"

namespace lensform {

RhoInvariant rho_invariant(const LensSpace& l) {
  const OddPrime prime(l.p());
  const long p = l.p();
  RhoInvariant out{p, {}, Cyclotomic::zero(prime)};
  out.values.reserve(p - 1);
  for (long g = 1; g < p; ++g) {
    Cyclotomic num = Cyclotomic::one(prime);
    Cyclotomic den = Cyclotomic::one(prime);
    for (long a : l.weights()) {
      Cyclotomic z = Cyclotomic::zeta_power(prime, g * a);
      num = num * (z + Cyclotomic::one(prime));
      den = den * (z - Cyclotomic::one(prime));
    }
    out.values.push_back(num / den);
    out.total = out.total + out.values.back();
  }
  if (!out.total.is_rational())
    throw std::logic_error("sum of rho values over the group must be rational");
  return out;
}

RhoComparison rho_difference(const LensSpace& a, const LensSpace& b) {
  RhoComparison out;
  if (a.p() != b.p() || a.n() != b.n()) {
    out.reason = "not comparable: different fundamental group or dimension";
    return out;
  }
  std::vector<long> witnesses = homotopy_witnesses(a, b);
  if (witnesses.empty()) {
    out.reason = "not comparable: no homotopy-equivalence witness";
    return out;
  }
  out.comparable = true;
  const long p = a.p();
  RhoInvariant ra = rho_invariant(a);
  RhoInvariant rb = rho_invariant(b);

  auto aligned_difference = [&](long e, bool flip) {
    std::vector<Cyclotomic> diff;
    diff.reserve(p - 1);
    for (long g = 1; g < p; ++g) {
      Cyclotomic other = rb.at(mod_norm(e * g, p));
      diff.push_back(flip ? ra.at(g) + other : ra.at(g) - other);
    }
    return diff;
  };
  auto all_zero = [](const std::vector<Cyclotomic>& d) {
    for (const Cyclotomic& x : d)
      if (!x.is_zero()) return false;
    return true;
  };

  for (long e : witnesses) {
    std::vector<Cyclotomic> diff = aligned_difference(e, false);
    if (all_zero(diff)) {
      out.oriented_zero = true;
      out.unoriented_zero = true;
      out.witness = e;
      out.difference = std::move(diff);
      return out;
    }
    if (!out.unoriented_zero && all_zero(aligned_difference(e, true))) {
      out.unoriented_zero = true;
      out.witness = e;
      out.difference = std::move(diff);
    }
  }
  if (!out.unoriented_zero) {
    out.witness = witnesses.front();
    out.difference = aligned_difference(witnesses.front(), false);
  }
  return out;
}

}  // namespace lensform
