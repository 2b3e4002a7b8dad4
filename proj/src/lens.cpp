#include "lensform/lens.hpp"

#include <algorithm>
#include <sstream>

namespace lensform {

namespace {

long fold(long a, long p) {
  long r = mod_norm(a, p);
  return r <= (p - 1) / 2 ? r : p - r;
}

}  // namespace

LensSpace::LensSpace(const OddPrime& prime, std::span<const long> raw_weights)
    : p_(prime.value()) {
  if (raw_weights.empty())
    throw std::invalid_argument("a lens space needs at least one weight");
  weights_.reserve(raw_weights.size());
  for (long a : raw_weights) {
    if (mod_norm(a, p_) == 0)
      throw std::invalid_argument("weights must be nonzero mod p (the action must be free)");
    weights_.push_back(fold(a, p_));
  }
  std::sort(weights_.begin(), weights_.end());
}

LensSpace LensSpace::scaled(long s) const {
  if (mod_norm(s, p_) == 0) throw std::invalid_argument("scaling factor must be a unit");
  std::vector<long> w;
  w.reserve(weights_.size());
  for (long a : weights_) w.push_back(s * a);
  return LensSpace(OddPrime(p_), w);
}

VirtualRep LensSpace::tangent_representation() const {
  VirtualRep v(OddPrime(p_));
  for (long a : weights_) v.add_rotation(a);
  return v;
}

std::string LensSpace::str() const {
  std::ostringstream os;
  os << "L(" << p_ << ";";
  for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : " ") << weights_[i];
  os << ")";
  return os.str();
}

WeightProfile weight_profile(const LensSpace& l) {
  WeightProfile out;
  out.counts.assign((l.p() - 1) / 2, 0);
  for (long a : l.weights()) ++out.counts[a - 1];
  return out;
}

std::optional<long> isometry_witness(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p() || a.n() != b.n()) return std::nullopt;
  for (long s = 1; s < a.p(); ++s)
    if (a.scaled(s) == b) return s;
  return std::nullopt;
}

std::vector<long> homotopy_witnesses(const LensSpace& a, const LensSpace& b) {
  std::vector<long> out;
  if (a.p() != b.p() || a.n() != b.n()) return out;
  const long p = a.p();
  long prod_a = 1, prod_b = 1;
  for (long w : a.weights()) prod_a = mod_norm(prod_a * w, p);
  for (long w : b.weights()) prod_b = mod_norm(prod_b * w, p);
  for (long e = 1; e < p; ++e) {
    long rhs = mod_norm(pow_mod(e, a.n(), p) * prod_b, p);
    if (prod_a == rhs || prod_a == mod_norm(-rhs, p)) out.push_back(e);
  }
  return out;
}

namespace {

// Fiber-homotopy triviality on the mod-p level: the reduction of the
// difference must be a constant multiple of the sum of all rotations.
bool fht_multiple_of_regular(const VirtualRep& diff) {
  const long p = diff.p;
  auto residue = [p](const Int& x) {
    Int r = x % p;
    return r < 0 ? Int(r + p) : r;
  };
  Int first = residue(diff.mult(0));
  for (Eigen::Index i = 1; i < diff.mult.size(); ++i)
    if (residue(diff.mult(i)) != first) return false;
  return true;
}

}  // namespace

TangentialResult tangentially_equivalent(const LensSpace& a, const LensSpace& b) {
  TangentialResult out;
  if (a.p() != b.p() || a.n() != b.n()) {
    out.reason = "not comparable: different fundamental group or dimension";
    return out;
  }
  out.comparable = true;
  std::vector<long> witnesses = homotopy_witnesses(a, b);
  if (witnesses.empty()) {
    out.reason = "not homotopy equivalent";
    return out;
  }
  out.homotopy_equivalent = true;
  out.homotopy_witness = witnesses.front();
  const OddPrime prime(a.p());
  for (long e : witnesses) {
    LensSpace re_indexed = a.scaled(inverse_mod(e, a.p()));
    VirtualRep diff = re_indexed.tangent_representation() - b.tangent_representation();
    if (!fht_multiple_of_regular(diff)) continue;
    if (in_stable_kernel(diff, prime, a.n())) {
      out.equivalent = true;
      out.witness = e;
      return out;
    }
  }
  out.reason = "tangent bundle difference is not stably trivial for any witness";
  return out;
}

void ClassificationVerdict::enforce_consistency() const {
  if (isometric && !homotopy_equivalent)
    throw std::logic_error("inconsistent verdict: isometric but not homotopy equivalent");
  if (isometric && !tangentially_equivalent)
    throw std::logic_error("inconsistent verdict: isometric but tangent classes differ");
}

ClassificationVerdict classify_pair(const LensSpace& a, const LensSpace& b) {
  ClassificationVerdict v;
  TangentialResult t = tangentially_equivalent(a, b);
  v.comparable = t.comparable;
  if (!t.comparable) {
    v.conclusions.push_back(t.reason);
    return v;
  }
  v.isometry_witness = isometry_witness(a, b);
  v.isometric = v.isometry_witness.has_value();
  v.homotopy_equivalent = t.homotopy_equivalent;
  v.homotopy_witness = t.homotopy_witness;
  v.tangentially_equivalent = t.equivalent;
  v.tangential_witness = t.witness;
  if (t.equivalent) {
    ClassificationVerdict c = conclude_tangential_pair(a, b);
    v.conclusions = c.conclusions;
  } else if (!t.homotopy_equivalent) {
    v.conclusions.push_back("not homotopy equivalent");
  } else {
    v.conclusions.push_back("homotopy equivalent but not tangentially equivalent");
  }
  v.enforce_consistency();
  return v;
}

ClassificationVerdict conclude_tangential_pair(const LensSpace& a, const LensSpace& b) {
  TangentialResult t = tangentially_equivalent(a, b);
  if (!t.equivalent)
    throw std::invalid_argument("conclusions require a tangentially equivalent pair");
  ClassificationVerdict v;
  v.comparable = true;
  v.homotopy_equivalent = true;
  v.homotopy_witness = t.homotopy_witness;
  v.tangentially_equivalent = true;
  v.tangential_witness = t.witness;
  v.isometry_witness = isometry_witness(a, b);
  v.isometric = v.isometry_witness.has_value();
  if (a.n() >= a.p() - 1) {
    if (!v.isometric)
      throw std::logic_error(
          "tangentially equivalent pair with n >= p-1 is not isometric: "
          "internal inconsistency");
    v.conclusions.push_back("isometric (hence diffeomorphic): n >= p-1");
  } else {
    v.conclusions.push_back("products with R^3 are diffeomorphic");
    if (v.isometric) v.conclusions.push_back("isometric");
  }
  v.enforce_consistency();
  return v;
}

bool rigidity_check(const LensSpace& l) {
  for (long v = 1; v < l.p(); ++v) {
    std::optional<long> s = isometry_witness(l.scaled(v), l);
    if (!s) return false;
  }
  return true;
}

}  // namespace lensform
