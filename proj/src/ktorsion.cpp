#include "lensform/ktorsion.hpp"

namespace lensform {

long whitehead_rank(const OddPrime& p) { return (p.value() - 3) / 2; }

long smallest_primitive_root_mod_p(const OddPrime& p) {
  for (long g = 2; g < p.value(); ++g)
    if (multiplicative_order(g, p.value()) == p.value() - 1) return g;
  throw std::logic_error("no primitive root mod p (unreachable)");
}

Int h_minus_with_root(const OddPrime& prime, long g) {
  const long p = prime.value();
  const long m = p - 1;
  const long q = m / 2;
  if (multiplicative_order(g, p) != m)
    throw std::invalid_argument("given root does not generate the units mod p");

  // index table: g^{ind(a)} = a
  std::vector<long> ind(p, 0);
  long acc = 1;
  for (long k = 0; k < m; ++k) {
    ind[acc] = k;
    acc = mod_norm(acc * g, p);
  }

  // R(x) = sum_a a x^{ind(a)}; the character sum for chi_j is R at x^j.
  CyclicPoly r(m);
  for (long a = 1; a < p; ++a) r.at(ind[a]) += a;

  // product over odd characters of R, evaluated at a primitive root of
  // unity at the very end
  CyclicPoly h(m);
  h.at(0) = 1;
  for (long j = 1; j < m; j += 2) h = h * r.substitute_power(j);
  Int value = h.rational_root_value();

  // h^- = 2p * prod_{chi odd} (-B_{1,chi}/2) with B_{1,chi_j} = R(zeta^j)/p
  Int numerator = (q % 2 == 0 ? value : -value) * 2 * p;
  Int denominator = int_pow(2, q) * int_pow(p, q);
  if (numerator % denominator != 0)
    throw std::logic_error("class number evaluation is not an integer");
  Int result = numerator / denominator;
  if (result < 1)
    throw std::logic_error("class number evaluation is not positive");
  return result;
}

Int h_minus(const OddPrime& p, long bound) {
  if (p.value() > bound)
    throw std::domain_error("prime exceeds the configured class-number bound");
  return h_minus_with_root(p, smallest_primitive_root_mod_p(p));
}

LowCodimDetectors low_codim_detectors(const OddPrime& p) {
  LowCodimDetectors out;
  out.p = p.value();
  out.wh_rank = whitehead_rank(p);
  out.h_minus_value = h_minus(p);
  if (out.h_minus_value > 1) {
    out.k0_trivial = K0Triviality::False;
  } else if (p.value() < 163) {
    out.k0_trivial = K0Triviality::True;
  } else {
    out.k0_trivial = K0Triviality::UnknownUnderPlusPart;
  }
  out.tate_h0_note =
      "codim-2-but-not-1 classes biject with the nonzero elements of the "
      "Tate group H^0(Z/2; K0~) of the projective class group; that group "
      "is trivial whenever K0~ is";
  return out;
}

}  // namespace lensform
