#include "radx/radical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "radx/errors.hpp"

namespace radx {

namespace {

u64 den_u64(const Rat& r) { return to_u64(r.get_den()); }

}  // namespace

RadicalQ::RadicalQ(const Rat& twist, const std::map<u64, Rat>& exps) : twist_(floor_frac(twist)) {
  for (const auto& [p, e] : exps) {
    if (e != 0) {
      Rat c = e;
      c.canonicalize();
      exps_[p] = c;
    }
  }
}

RadicalQ RadicalQ::root_of_unity(const Rat& twist) { return RadicalQ(twist, {}); }

RadicalQ RadicalQ::zeta(u64 m, long long k) {
  if (m == 0) throw PreconditionError("zeta_0 is undefined");
  return RadicalQ(Rat(Int(static_cast<long>(k)), to_int(m)), {});
}

RadicalQ RadicalQ::rational(const Rat& value) { return canonicalize(value, 1); }

RadicalQ RadicalQ::from_parts(const Rat& twist, const Rat& radicand, u64 root_degree, u64 trial_bound) {
  if (radicand <= 0) throw PreconditionError("radicand must be positive");
  return RadicalQ::root_of_unity(twist) * canonicalize(radicand, root_degree, trial_bound);
}

Rat RadicalQ::exp(u64 p) const {
  auto it = exps_.find(p);
  return it == exps_.end() ? Rat(0) : it->second;
}

RadicalQ RadicalQ::operator*(const RadicalQ& rhs) const {
  std::map<u64, Rat> e = exps_;
  for (const auto& [p, v] : rhs.exps_) e[p] += v;
  return RadicalQ(twist_ + rhs.twist_, e);
}

RadicalQ RadicalQ::pow(long long k) const {
  std::map<u64, Rat> e;
  Rat kk{Int(static_cast<long>(k))};
  for (const auto& [p, v] : exps_) e[p] = v * kk;
  return RadicalQ(twist_ * kk, e);
}

u64 RadicalQ::order_mod_rationals() const {
  u64 b = den_u64(twist_);
  u64 order = b / gcd(b, 2);
  for (const auto& [p, e] : exps_) order = lcm(order, den_u64(e));
  return order;
}

std::optional<Rat> RadicalQ::as_rational() const {
  if (twist_ != 0 && twist_ != Rat(1, 2)) return std::nullopt;
  Rat value = twist_ == 0 ? Rat(1) : Rat(-1);
  for (const auto& [p, e] : exps_) {
    if (e.get_den() != 1) return std::nullopt;
    value *= rat_pow(Rat(to_int(p)), e.get_num().get_si());
  }
  return value;
}

u64 RadicalQ::denominator_lcm() const {
  u64 d = den_u64(twist_);
  for (const auto& [p, e] : exps_) d = lcm(d, den_u64(e));
  return d;
}

std::string RadicalQ::to_string() const {
  std::vector<std::string> parts;
  if (twist_ != 0) {
    std::string s = "zeta_" + twist_.get_den().get_str();
    if (twist_.get_num() != 1) s += "^" + twist_.get_num().get_str();
    parts.push_back(s);
  }
  for (const auto& [p, e] : exps_) {
    std::string s = std::to_string(p);
    if (e != 1) s += "^(" + (e.get_den() == 1 ? e.get_num().get_str() : e.get_str()) + ")";
    parts.push_back(s);
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

RadicalQ canonicalize(const Rat& value, u64 root_degree, u64 trial_bound) {
  if (value == 0) throw PreconditionError("cannot take a root of zero");
  if (root_degree == 0) throw PreconditionError("root degree must be positive");
  Rat d{to_int(root_degree)};
  std::map<u64, Rat> exps;
  for (const auto& [p, k] : factor_int(value.get_num(), trial_bound)) exps[p] += Rat(k) / d;
  for (const auto& [p, k] : factor_int(value.get_den(), trial_bound)) exps[p] -= Rat(k) / d;
  Rat twist = value < 0 ? Rat(1) / (2 * d) : Rat(0);
  return RadicalQ(twist, exps);
}

ClassSpace::ClassSpace(std::vector<u64> primes, u64 scale) : primes_(std::move(primes)), scale_(scale) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  if (scale_ % 4 != 0) throw PreconditionError("class scale must be divisible by 4");
}

ClassSpace ClassSpace::covering(const std::vector<RadicalQ>& elements, u64 scale_multiple, u64 extra_primes_of) {
  std::set<u64> primes;
  u64 scale = lcm(4, scale_multiple);
  for (const auto& a : elements) {
    scale = lcm(scale, a.denominator_lcm());
    for (const auto& [p, e] : a.exps()) {
      if (e.get_den() != 1) primes.insert(p);
    }
  }
  for (u64 p : prime_divisors(extra_primes_of)) primes.insert(p);
  return ClassSpace(std::vector<u64>(primes.begin(), primes.end()), scale);
}

std::optional<std::vector<Int>> ClassSpace::coords(const RadicalQ& a) const {
  std::vector<Int> v(rank());
  Rat s{to_int(scale_)};
  for (const auto& [p, e] : a.exps()) {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) {
      if (e.get_den() != 1) return std::nullopt;
      continue;
    }
    Rat c = e * s;
    c.canonicalize();
    if (c.get_den() != 1) return std::nullopt;
    v[static_cast<std::size_t>(it - primes_.begin())] = c.get_num();
  }
  Rat t = a.twist() * s;
  t.canonicalize();
  if (t.get_den() != 1) return std::nullopt;
  v[twist_index()] = t.get_num();
  return v;
}

std::vector<Int> ClassSpace::require_coords(const RadicalQ& a) const {
  auto c = coords(a);
  if (!c) throw InternalInconsistency("radical " + a.to_string() + " is not representable at scale " + std::to_string(scale_));
  return *c;
}

RadicalQ ClassSpace::lift(const std::vector<Int>& v) const {
  if (v.size() != rank()) throw PreconditionError("class vector has wrong length");
  Int s = to_int(scale_);
  std::map<u64, Rat> exps;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    Rat e(v[i], s);
    e.canonicalize();
    e = floor_frac(e);
    if (e != 0) exps[primes_[i]] = e;
  }
  Rat t(v[twist_index()], s);
  t.canonicalize();
  return RadicalQ(t, exps);
}

std::vector<Int> ClassSpace::twist_axis(u64 order) const {
  if (order == 0 || scale_ % order != 0) throw PreconditionError("root of unity order does not divide the class scale");
  std::vector<Int> v(rank());
  v[twist_index()] = to_int(scale_ / order);
  return v;
}

IntMatrix ClassSpace::rational_lattice() const {
  IntMatrix m(rank(), rank());
  for (std::size_t i = 0; i < primes_.size(); ++i) m(i, i) = to_int(scale_);
  m(twist_index(), twist_index()) = to_int(scale_ / 2);
  return m;
}

IntMatrix ClassSpace::column_matrix(const std::vector<RadicalQ>& elements) const {
  IntMatrix m(rank(), elements.size());
  for (std::size_t c = 0; c < elements.size(); ++c) {
    std::vector<Int> v = require_coords(elements[c]);
    for (std::size_t r = 0; r < rank(); ++r) m(r, c) = v[r];
  }
  return m;
}

}  // namespace radx
