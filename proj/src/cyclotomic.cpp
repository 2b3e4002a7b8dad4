#include "lensform/cyclotomic.hpp"

#include <sstream>

namespace lensform {

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (long j = 1; j < p_; ++j) {
    if (c_(j - 1) == 0) continue;
    if (!first) os << " + ";
    os << c_(j - 1) << "*z^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

namespace {

void strip_leading_zeros(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly r = num, d = den;
  strip_leading_zeros(r);
  strip_leading_zeros(d);
  if (d.empty()) throw std::invalid_argument("polynomial division by zero");
  if (r.empty()) return {};
  if (r.size() < d.size()) throw std::logic_error("inexact polynomial division");
  IntPoly q(r.size() - d.size() + 1, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Int lead = r[k + d.size() - 1];
    if (lead % d.back() != 0) throw std::logic_error("inexact polynomial division");
    Int c = lead / d.back();
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
  }
  strip_leading_zeros(r);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

IntPoly poly_mod_monic(IntPoly a, const IntPoly& monic) {
  if (monic.empty() || monic.back() != 1)
    throw std::invalid_argument("divisor must be monic");
  strip_leading_zeros(a);
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    Int c = a.back();
    std::size_t shift = a.size() - 1 - d;
    if (c != 0)
      for (std::size_t j = 0; j < monic.size(); ++j) a[shift + j] -= c * monic[j];
    a.pop_back();
  }
  strip_leading_zeros(a);
  return a;
}

IntPoly cyclotomic_polynomial(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  IntPoly num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  IntPoly den{Int(1)};
  for (long d = 1; d < m; ++d)
    if (m % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  return poly_div_exact(num, den);
}

}  // namespace lensform
