#pragma once

#include <optional>
#include <vector>

#include "radx/arith.hpp"
#include "radx/radical.hpp"

namespace radx {

// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<Int> cyclotomic_polynomial(u64 m);

// Exact arithmetic in Q(zeta_M) on the power basis 1, zeta, ..., zeta^{phi(M)-1}.
class CyclotomicField {
 public:
  using Elem = std::vector<Rat>;

  explicit CyclotomicField(u64 m, u64 max_dim = 4096);

  u64 order() const { return m_; }
  std::size_t dim() const { return phi_.size() - 1; }

  Elem zero() const { return Elem(dim(), Rat(0)); }
  Elem one() const;
  Elem zeta_power(long long k) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, const Rat& r) const;

  // Radicals with half-integral exponents via Gauss sums; nullopt when the
  // radical is not visibly in Q(zeta_M).
  std::optional<Elem> embed(const RadicalQ& a) const;

 private:
  Elem reduce(std::vector<Rat> poly) const;
  Elem sqrt_prime(u64 p) const;

  u64 m_;
  std::vector<Int> phi_;
};

// Smallest M with a in Q(zeta_M) by the Gauss-sum embedding; nullopt when an
// exponent has denominator > 2.
std::optional<u64> cyclotomic_host(const RadicalQ& a);

// Solve sum x_j v_j = target over Q; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<Rat>>& columns,
                                               const std::vector<Rat>& target);

}  // namespace radx
