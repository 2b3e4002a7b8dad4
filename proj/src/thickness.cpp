#include "lensform/thickness.hpp"

#include "lensform/ktorsion.hpp"

#include <sstream>

namespace lensform {

std::optional<std::vector<Int>> ThicknessFiltration::even_orders() const {
  if (!positions_known) return std::nullopt;
  std::vector<Int> orders;
  orders.reserve(m + 1);
  Int acc = 1;
  orders.push_back(acc);  // theta_2 is trivial by definition
  for (long j = 1; j <= m; ++j) {
    acc *= quotient_orders[j - 1];
    orders.push_back(acc);
  }
  return orders;
}

ThicknessFiltration theta_filtration(const OddPrime& prime, long n) {
  if (n < 3) throw std::domain_error("filtration is defined for n >= 3");
  const long p = prime.value();
  ThicknessFiltration f;
  f.p = p;
  f.n = n;
  f.m = n / (p - 1);
  f.t_order = int_pow(p, f.m);
  f.exceptional = (n % (p - 1) == 0);
  f.tprime_order = f.exceptional ? int_pow(p, f.m - 1) : f.t_order;
  f.e0k_order = int_pow(p, (n - 1) / (p - 1));
  f.stable_codim = 2 * f.m + 2;
  f.quotient_orders.assign(f.m, p);
  if (f.exceptional) {
    if (f.m <= p - 1) {
      // n = j(p-1) with j <= p-1: the trivial quotient sits at j0 = 1
      f.exceptional_j0 = 1;
      f.quotient_orders[0] = 1;
      f.note = "trivial quotient pinned at j0 = 1 for n = j(p-1), j <= p-1";
    } else {
      f.positions_known = false;
      f.exceptional_j0 = std::nullopt;
      // canonical multiset listing; the position of the trivial quotient
      // is genuinely open, conjecturally j0 = 1
      f.quotient_orders[0] = 1;
      f.note =
          "exactly one trivial quotient exists but its position is UNKNOWN; "
          "conjecturally j0 = 1 (orders listed as a multiset)";
    }
    // smooth-category bound on the exceptional position, only meaningful
    // for nu >= 1
    ImageJOrder ij = image_j_order(prime, n);
    if (ij.nu >= 1) f.smooth_j0_bound = ij.nu + 1;
  }
  return f;
}

DesuspensionResult min_desuspension(long t, const ThicknessFiltration& filt) {
  if (t < 0 || t > filt.m)
    throw std::domain_error("order exponent must lie in 0..m");
  DesuspensionResult out;
  out.exponent = t;
  out.min_codim = t;  // least k with p^t | p^k
  if (t == 0) {
    out.degenerate = true;
    return out;
  }
  out.sphere_dim = 2 * t - 1;
  out.extrapolated = (t == filt.m);  // proved range stops at m-1
  return out;
}

OrderPair circle_order(long x, const OddPrime& prime, long m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  Int modulus_big = int_pow(prime.value(), m + 1);
  if (modulus_big > 1000000000)
    throw std::domain_error("model ring exceeds the desk-scale bound");
  const long modulus = static_cast<long>(modulus_big);
  long v = mod_norm(x, modulus);
  if (v % prime.value() != 0)
    throw std::domain_error("element must lie in the ideal (p)");

  OrderPair out{1, 1};
  // additive order: modulus / gcd(x, modulus)
  out.loop_order = modulus / std::gcd(v, modulus);

  // circle order by iterating x o y = x + y + xy until the identity 0
  long acc = v, k = 1;
  while (acc != 0) {
    acc = static_cast<long>((Int(acc) + v + Int(acc) * v) % modulus);
    ++k;
    if (k > modulus) throw std::logic_error("circle iteration failed to terminate");
  }
  out.circle_order = k;
  return out;
}

ImageJOrder image_j_order(const OddPrime& prime, long n) {
  const long p = prime.value();
  if (n % (p - 1) != 0)
    throw std::domain_error("image-of-J order needs n = 0 mod p-1");
  ImageJOrder out;
  out.nu = p_adic_valuation(Int(n / (p - 1)), p);
  out.order = int_pow(p, out.nu);
  out.flagged_trivial = (out.nu == 0);
  out.discrepancy_note =
      "order follows the source convention p^nu for n = p^nu (p-1) r; the "
      "standard image-of-J convention reads p^{nu+1}";
  return out;
}

namespace {

std::string group_order_note(const ThicknessFiltration& f, long codim) {
  std::ostringstream os;
  long j = codim / 2 - 1;  // quotient index feeding theta_{codim}
  os << "filtration step " << codim << " admits order-";
  if (f.positions_known && j >= 1 && j <= f.m)
    os << f.quotient_orders[j - 1];
  else
    os << f.p << " or 1";
  os << " growth";
  return os.str();
}

}  // namespace

ThicknessReport thickness_report(const LensSpace& a, const LensSpace& b) {
  ThicknessReport rep;
  rep.p = a.p();
  rep.n = a.n();
  TangentialResult t = tangentially_equivalent(a, b);
  if (!t.equivalent) {
    rep.reason = "not comparable: the stable-equivalence hypothesis "
                 "(tangential homotopy equivalence) fails";
    return rep;
  }
  rep.comparable = true;
  const OddPrime prime(a.p());

  std::optional<ThicknessFiltration> filt;
  if (a.n() >= 3) filt = theta_filtration(prime, a.n());
  // below the theorem range (n < 3) only the universal dim+1 bound applies
  rep.stable_codim = filt ? filt->stable_codim : 2 * a.n();
  const long top = std::max<long>(rep.stable_codim, 3);

  LowCodimDetectors det = low_codim_detectors(prime);
  RhoComparison rho = rho_difference(a, b);

  bool equal_from_here = false;
  for (long k = 0; k <= top; ++k) {
    CodimVerdict v;
    v.codim = k;
    if (equal_from_here) {
      v.state = CodimState::Equal;
      v.note = "monotone: equal at a lower codimension";
      rep.verdicts.push_back(std::move(v));
      continue;
    }
    switch (k) {
      case 0: {
        std::optional<long> s = isometry_witness(a, b);
        if (s) {
          v.state = CodimState::Equal;
          std::ostringstream os;
          os << "isometric, witness s = " << *s;
          v.note = os.str();
          equal_from_here = true;
        } else {
          v.state = CodimState::Unequal;
          v.note = "not isometric";
        }
        break;
      }
      case 1: {
        v.state = CodimState::Undecided;
        std::ostringstream os;
        os << "h-cobordism detector: Wh(Z/" << rep.p << ") has rank " << det.wh_rank
           << "; realization of specific torsions is out of scope";
        v.note = os.str();
        break;
      }
      case 2: {
        v.state = CodimState::Undecided;
        if (det.k0_trivial == K0Triviality::True)
          v.note = "projective-class detector trivial (h^- = 1): codim 2 adds "
                   "nothing beyond codim 1";
        else if (det.k0_trivial == K0Triviality::False)
          v.note = "projective-class detector nontrivial (h^- > 1)";
        else
          v.note = "projective-class detector unknown under the plus part";
        break;
      }
      case 3: {
        if (rho.unoriented_zero) {
          v.state = CodimState::Equal;
          v.note = rho.oriented_zero
                       ? "rho difference vanishes: normally cobordant candidates"
                       : "rho difference vanishes up to orientation: normally "
                         "cobordant candidates";
          equal_from_here = true;
        } else {
          v.state = CodimState::Unequal;
          v.note = "rho difference is nonzero under every witness";
        }
        break;
      }
      default: {
        if (k >= rep.stable_codim) {
          v.state = CodimState::Equal;
          v.note = "stable range: products are homeomorphic from here on";
          equal_from_here = true;
        } else if (k % 2 == 1) {
          v.state = CodimState::Undecided;
          v.note = "odd codimension: pinned between the neighbouring even steps";
        } else {
          v.state = CodimState::Undecided;
          v.note = group_order_note(*filt, k);
        }
        break;
      }
    }
    rep.verdicts.push_back(std::move(v));
  }
  rep.detectors = {"isometry", "whitehead-torsion", "projective-class", "rho",
                   "theta-filtration"};
  return rep;
}

}  // namespace lensform
