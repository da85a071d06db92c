#pragma once

#include <string>

#include "radx/abgroup.hpp"
#include "radx/arith.hpp"
#include "radx/radical.hpp"

namespace radx {

enum class FieldKind { Rationals, Cyclotomic, Finite };

// A nonnegative integer or infinity.
struct ExtendedInt {
  u64 value = 0;
  bool infinite = false;

  static ExtendedInt inf() { return {0, true}; }
  bool operator==(const ExtendedInt&) const = default;
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

inline u64 min_ext(ExtendedInt a, u64 b) { return a.infinite ? b : std::min(a.value, b); }

// Q, Q(zeta_z) for odd squarefree z, or F_q with q = p^e.
class BaseField {
 public:
  static BaseField rationals();
  static BaseField cyclotomic(u64 z);
  static BaseField finite(u64 q);
  static BaseField finite_power(u64 p, u64 e);

  FieldKind kind() const { return kind_; }
  bool is_char0() const { return kind_ != FieldKind::Finite; }
  bool is_finite() const { return kind_ == FieldKind::Finite; }
  u64 characteristic() const { return is_finite() ? p_ : 0; }
  u64 z() const { return z_; }
  u64 prime() const { return p_; }
  u64 degree() const { return e_; }  // q = p^e

  // q mod m (finite fields only).
  u64 q_mod(u64 m) const;
  // v_2(q - 1) (finite fields of odd characteristic only).
  unsigned v2_q_minus_1() const;
  // |mu_m(K^x)|.
  u64 mu_gcd(u64 m) const;
  bool contains_root_of_unity(u64 m) const;
  u64 cyclotomic_degree(u64 m) const;
  ExtendedInt two_adic_w() const;
  ExtendedInt two_adic_w_prime() const;
  bool totally_real_2flag() const { return is_char0(); }
  BaseField adjoin_roots_of_unity(u64 m) const;

  // Exact q - 1 (finite fields; may be large).
  Int q_minus_1() const;
  std::string name() const;
  bool operator==(const BaseField&) const = default;

 private:
  BaseField(FieldKind kind, u64 z, u64 p, u64 e) : kind_(kind), z_(z), p_(p), e_(e) {}
  void require_coprime(u64 m) const;

  FieldKind kind_ = FieldKind::Rationals;
  u64 z_ = 1;
  u64 p_ = 0;
  u64 e_ = 0;
};

// Classes of Rad(Q) cap L^x modulo Q^x for L = Q(zeta_z), z odd squarefree:
// zeta_{2z}, -1, and sqrt(p*) for p | z.  The space must contain the primes
// of z and have scale divisible by 4z.
IntMatrix field_lattice(const ClassSpace& space, const BaseField& field);

bool sqrt_in_cyclotomic(const Rat& r, u64 n);
bool radical_in_L(const RadicalQ& alpha, u64 z);
// a in L^{x n} for L = Q(zeta_z).
bool is_nth_power_in_L(const Rat& a, u64 n, u64 z);

}  // namespace radx
