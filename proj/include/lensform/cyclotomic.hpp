#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_p) for an odd prime p,
// and in the cyclic group ring Z[x]/(x^m - 1) for arbitrary m >= 1.
//
// Q(zeta_p) is represented on the basis zeta, zeta^2, ..., zeta^{p-1}
// (not the power basis 1, zeta, ..., zeta^{p-2}): on this basis a Galois
// substitution zeta -> zeta^r is a coefficient permutation, which is the
// operation the signature-defect sums need.  A rational q is carried as
// -q * (zeta + ... + zeta^{p-1}).

#include "lensform/exact.hpp"

#include <ostream>
#include <string>

namespace lensform {

class Cyclotomic {
 public:
  Cyclotomic(const OddPrime& p, RatVec coeffs) : p_(p.value()), c_(std::move(coeffs)) {
    if (c_.size() != p_ - 1)
      throw std::invalid_argument("coefficient vector must have p-1 entries");
  }

  static Cyclotomic zero(const OddPrime& p) {
    return Cyclotomic(p, RatVec::Zero(p.value() - 1));
  }

  static Cyclotomic rational(const OddPrime& p, const Rat& q) {
    return Cyclotomic(p, RatVec::Constant(p.value() - 1, -q));
  }

  static Cyclotomic one(const OddPrime& p) { return rational(p, 1); }

  /// zeta^k for any integer k; k = 0 mod p yields the representation of 1.
  static Cyclotomic zeta_power(const OddPrime& p, long k) {
    long e = mod_norm(k, p.value());
    if (e == 0) return one(p);
    RatVec c = RatVec::Zero(p.value() - 1);
    c(e - 1) = 1;
    return Cyclotomic(p, c);
  }

  long prime() const { return p_; }
  const RatVec& coefficients() const { return c_; }

  /// Coefficient of zeta^j, 1 <= j <= p-1.
  const Rat& coeff(long j) const { return c_(j - 1); }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < c_.size(); ++i)
      if (c_(i) != 0) return false;
    return true;
  }

  /// An element is rational iff all basis coefficients are equal; its
  /// value is then the negated common coefficient.
  bool is_rational() const {
    for (Eigen::Index i = 1; i < c_.size(); ++i)
      if (c_(i) != c_(0)) return false;
    return true;
  }

  Rat rational_value() const {
    if (!is_rational())
      throw std::domain_error("element is not rational");
    return -c_(0);
  }

  /// Galois substitution zeta -> zeta^r for a unit r mod p.
  Cyclotomic galois(long r) const {
    long u = mod_norm(r, p_);
    if (u == 0) throw std::domain_error("Galois exponent must be a unit mod p");
    RatVec out = RatVec::Zero(p_ - 1);
    for (long j = 1; j < p_; ++j) out(mod_norm(j * u, p_) - 1) = c_(j - 1);
    return Cyclotomic(OddPrime(p_), std::move(out));
  }

  Cyclotomic conjugate() const { return galois(p_ - 1); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_field(b);
    return Cyclotomic(OddPrime(a.p_), a.c_ + b.c_);
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_field(b);
    return Cyclotomic(OddPrime(a.p_), a.c_ - b.c_);
  }

  Cyclotomic operator-() const { return Cyclotomic(OddPrime(p_), (-c_).eval()); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_field(b);
    const long p = a.p_;
    // Accumulate on exponents 0..p-1, then fold the rational slot
    // through 1 = -(zeta + ... + zeta^{p-1}).
    std::vector<Rat> acc(p, Rat(0));
    for (long i = 1; i < p; ++i) {
      if (a.c_(i - 1) == 0) continue;
      for (long j = 1; j < p; ++j) {
        if (b.c_(j - 1) == 0) continue;
        acc[(i + j) % p] += a.c_(i - 1) * b.c_(j - 1);
      }
    }
    RatVec out(p - 1);
    for (long e = 1; e < p; ++e) out(e - 1) = acc[e] - acc[0];
    return Cyclotomic(OddPrime(p), std::move(out));
  }

  friend Cyclotomic operator*(const Rat& q, const Cyclotomic& a) {
    return Cyclotomic(OddPrime(a.p_), (q * a.c_.array()).matrix().eval());
  }

  /// Field norm down to Q: the product of all Galois conjugates.
  Rat norm() const {
    Cyclotomic acc = *this;
    for (long r = 2; r < p_; ++r) acc = acc * galois(r);
    return acc.rational_value();
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta_p)");
    Cyclotomic conj_prod = one(OddPrime(p_));
    for (long r = 2; r < p_; ++r) conj_prod = conj_prod * galois(r);
    Rat n = (*this * conj_prod).rational_value();
    return Rat(1) / n * conj_prod;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_same_field(const Cyclotomic& other) const {
    if (p_ != other.p_)
      throw std::invalid_argument("cyclotomic operands live in different fields");
  }

  long p_;
  RatVec c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

// --- dense integer polynomials and the cyclic ring Z[x]/(x^m - 1) ---

using IntPoly = std::vector<Int>;  // coefficient c[k] of x^k, no trailing zeros required

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Exact division of integer polynomials; throws if the division leaves
/// a remainder (the divisor must be monic or divide exactly).
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den);

/// Remainder of a modulo a monic divisor.
IntPoly poly_mod_monic(IntPoly a, const IntPoly& monic);

/// The m-th cyclotomic polynomial, computed by exact recursive division of
/// x^m - 1 by the cyclotomic polynomials of the proper divisors of m.
IntPoly cyclotomic_polynomial(long m);

/// Element of Z[x]/(x^m - 1), dense on exponents 0..m-1.
class CyclicPoly {
 public:
  explicit CyclicPoly(long m) : m_(m), c_(m, Int(0)) {
    if (m < 1) throw std::invalid_argument("cyclic ring index must be >= 1");
  }
  CyclicPoly(long m, std::vector<Int> coeffs) : m_(m), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != m)
      throw std::invalid_argument("cyclic ring element needs m coefficients");
  }

  long modulus() const { return m_; }
  const std::vector<Int>& coefficients() const { return c_; }
  Int& at(long e) { return c_[mod_norm(e, m_)]; }
  const Int& at(long e) const { return c_[mod_norm(e, m_)]; }

  /// Substitution x -> x^j (a ring endomorphism of Z[x]/(x^m - 1)).
  CyclicPoly substitute_power(long j) const {
    CyclicPoly out(m_);
    for (long e = 0; e < m_; ++e) out.at(e * j) += c_[e];
    return out;
  }

  friend CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("cyclic ring mismatch");
    CyclicPoly out(a.m_);
    for (long i = 0; i < a.m_; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; j < a.m_; ++j) {
        if (b.c_[j] == 0) continue;
        out.c_[(i + j) % a.m_] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  /// Value at a primitive m-th root of unity, provided that value is
  /// rational: reduces mod the m-th cyclotomic polynomial and insists the
  /// remainder is constant.
  Int rational_root_value() const {
    IntPoly rem = poly_mod_monic(IntPoly(c_.begin(), c_.end()), cyclotomic_polynomial(m_));
    for (std::size_t k = 1; k < rem.size(); ++k)
      if (rem[k] != 0)
        throw std::logic_error("cyclic ring element is not rational at a primitive root");
    return rem.empty() ? Int(0) : rem[0];
  }

 private:
  long m_;
  std::vector<Int> c_;
};

}  // namespace lensform
