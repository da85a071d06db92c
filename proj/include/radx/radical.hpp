#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radx/abgroup.hpp"
#include "radx/arith.hpp"

namespace radx {

// e^{2 pi i twist} * prod p^{e_p} with positive real prime powers.
class RadicalQ {
 public:
  RadicalQ() = default;
  RadicalQ(const Rat& twist, const std::map<u64, Rat>& exps);

  static RadicalQ root_of_unity(const Rat& twist);
  static RadicalQ zeta(u64 m, long long k = 1);
  static RadicalQ rational(const Rat& value);
  // e^{2 pi i twist} * radicand^{1/root_degree}, radicand > 0.
  static RadicalQ from_parts(const Rat& twist, const Rat& radicand, u64 root_degree,
                             u64 trial_bound = kDefaultTrialBound);

  const Rat& twist() const { return twist_; }
  const std::map<u64, Rat>& exps() const { return exps_; }
  Rat exp(u64 p) const;

  RadicalQ operator*(const RadicalQ& rhs) const;
  RadicalQ pow(long long k) const;
  RadicalQ inverse() const { return pow(-1); }
  bool operator==(const RadicalQ& rhs) const { return twist_ == rhs.twist_ && exps_ == rhs.exps_; }
  bool operator!=(const RadicalQ& rhs) const { return !(*this == rhs); }

  bool is_root_of_unity() const { return exps_.empty(); }
  // Least k >= 1 with alpha^k rational.
  u64 order_mod_rationals() const;
  // The value when alpha is rational.
  std::optional<Rat> as_rational() const;
  // lcm of all denominators (twist and exponents).
  u64 denominator_lcm() const;
  std::string to_string() const;

 private:
  Rat twist_;
  std::map<u64, Rat> exps_;
};

// Principal root_degree-th root of a nonzero rational.
RadicalQ canonicalize(const Rat& value, u64 root_degree, u64 trial_bound = kDefaultTrialBound);

// Coordinates for radicals modulo positive rationals: one axis per listed
// prime (value e_p * scale) and the twist axis last (value twist * scale).
class ClassSpace {
 public:
  ClassSpace(std::vector<u64> primes, u64 scale);
  // Smallest space holding all `elements`, the primes of `extra_primes_of`,
  // with scale divisible by 4 and by `scale_multiple`.
  static ClassSpace covering(const std::vector<RadicalQ>& elements, u64 scale_multiple = 1,
                             u64 extra_primes_of = 1);

  std::size_t rank() const { return primes_.size() + 1; }
  std::size_t twist_index() const { return primes_.size(); }
  u64 scale() const { return scale_; }
  const std::vector<u64>& primes() const { return primes_; }

  std::optional<std::vector<Int>> coords(const RadicalQ& a) const;
  std::vector<Int> require_coords(const RadicalQ& a) const;
  RadicalQ lift(const std::vector<Int>& v) const;
  // Class of zeta_order; order must divide the scale.
  std::vector<Int> twist_axis(u64 order) const;
  // Positive rationals and -1: the classes of Q^x.
  IntMatrix rational_lattice() const;
  IntMatrix column_matrix(const std::vector<RadicalQ>& elements) const;

 private:
  std::vector<u64> primes_;
  u64 scale_;
};

}  // namespace radx
