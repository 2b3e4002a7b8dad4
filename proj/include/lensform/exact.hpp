#pragma once

// Exact scalar types and elementary number theory used across the library.
// All arithmetic in this project is exact: integers are GMP-backed
// multiprecision integers and rationals are exact fractions.  Floating
// point is deliberately absent.

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace lensform {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A fixed odd prime, validated on construction.
class OddPrime {
 public:
  explicit OddPrime(long p) : p_(p) {
    if (p < 3 || !is_prime(p))
      throw std::invalid_argument("modulus must be an odd prime >= 3");
  }
  long value() const { return p_; }
  long half() const { return (p_ - 1) / 2; }

 private:
  long p_;
};

/// Largest nu with p^nu dividing x.  Rejects x = 0.
inline long p_adic_valuation(const Int& x, long p) {
  if (x == 0) throw std::domain_error("p-adic valuation of zero is undefined");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  Int y = abs(x);
  long nu = 0;
  while (y % p == 0) {
    y /= p;
    ++nu;
  }
  return nu;
}

inline long mod_norm(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long pow_mod(long base, long exp, long mod) {
  Int acc = 1, b = mod_norm(base, mod);
  while (exp > 0) {
    if (exp & 1) acc = (acc * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<long>(acc);
}

/// Multiplicative inverse of a mod m; requires gcd(a, m) = 1.
inline long inverse_mod(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = mod_norm(a, m);
  while (new_r != 0) {
    long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element is not a unit");
  return mod_norm(t, m);
}

inline long multiplicative_order(long a, long m) {
  if (std::gcd(mod_norm(a, m), m) != 1)
    throw std::domain_error("order is defined for units only");
  long x = mod_norm(a, m), acc = x, ord = 1;
  while (acc != 1) {
    acc = static_cast<long>((Int(acc) * x) % m);
    ++ord;
  }
  return ord;
}

/// Smallest positive r generating the multiplicative group mod p^2.
/// Such r exists for every odd prime and is then also a generator mod p.
inline long primitive_root_mod_p_squared(const OddPrime& p) {
  const long m = p.value() * p.value();
  const long target = p.value() * (p.value() - 1);
  for (long r = 2; r < m; ++r) {
    if (r % p.value() == 0) continue;
    if (multiplicative_order(r, m) == target) return r;
  }
  throw std::logic_error("no primitive root found (unreachable for odd primes)");
}

inline Int int_pow(long base, long exp) {
  Int acc = 1;
  for (long i = 0; i < exp; ++i) acc *= base;
  return acc;
}

/// Thread-safe memo cache for pure builders keyed by small tuples.
template <typename Key, typename Value>
class SharedCache {
 public:
  template <typename Fn>
  const Value& get(const Key& key, Fn&& build) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) it = map_.emplace(key, build()).first;
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> map_;
};

}  // namespace lensform
