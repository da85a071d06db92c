#include "radx/backend.hpp"

#include <algorithm>

#include "radx/errors.hpp"

namespace radx {

namespace {

bool squarefree_odd(u64 z) {
  if (z == 0 || z % 2 == 0) return false;
  for (const auto& [p, e] : factor(z)) {
    if (e > 1) return false;
  }
  return true;
}

}  // namespace

BaseField BaseField::rationals() { return BaseField(FieldKind::Rationals, 1, 0, 0); }

BaseField BaseField::cyclotomic(u64 z) {
  if (!squarefree_odd(z)) throw UnsupportedInstance("Q(zeta_z) needs z odd and squarefree, got " + std::to_string(z));
  if (z == 1) return rationals();
  return BaseField(FieldKind::Cyclotomic, z, 0, 0);
}

BaseField BaseField::finite(u64 q) {
  auto pp = prime_power(q);
  if (!pp) throw PreconditionError(std::to_string(q) + " is not a prime power");
  return finite_power(pp->first, pp->second);
}

BaseField BaseField::finite_power(u64 p, u64 e) {
  if (!is_prime(p) || e == 0) throw PreconditionError("finite field needs a prime and a positive degree");
  return BaseField(FieldKind::Finite, 1, p, e);
}

void BaseField::require_coprime(u64 m) const {
  if (m == 0) throw PreconditionError("root of unity order must be positive");
  if (is_finite() && m % p_ == 0) {
    throw UnsupportedInstance("characteristic " + std::to_string(p_) + " divides " + std::to_string(m));
  }
}

u64 BaseField::q_mod(u64 m) const {
  if (!is_finite()) throw PreconditionError("q_mod on a field of characteristic 0");
  return pow_mod(p_, e_, m);
}

unsigned BaseField::v2_q_minus_1() const {
  if (!is_finite() || p_ == 2) throw PreconditionError("v2(q-1) needs odd characteristic");
  u64 q = 1;
  for (u64 i = 0; i < e_; ++i) q *= p_;  // wraps: q mod 2^64
  u64 x = q - 1;
  if (x == 0) throw CapacityExceeded("2-adic valuation of q-1 exceeds 63");
  return static_cast<unsigned>(__builtin_ctzll(x));
}

u64 BaseField::mu_gcd(u64 m) const {
  require_coprime(m);
  switch (kind_) {
    case FieldKind::Rationals:
      return gcd(m, 2);
    case FieldKind::Cyclotomic:
      return gcd(m, 2 * z_);
    case FieldKind::Finite:
      return gcd(m, (q_mod(m) + m - 1) % m);
  }
  return 1;
}

bool BaseField::contains_root_of_unity(u64 m) const { return mu_gcd(m) == m; }

u64 BaseField::cyclotomic_degree(u64 m) const {
  require_coprime(m);
  switch (kind_) {
    case FieldKind::Rationals:
      return euler_phi(m);
    case FieldKind::Cyclotomic:
      return euler_phi(lcm(m, z_)) / euler_phi(z_);
    case FieldKind::Finite:
      return multiplicative_order(q_mod(m), m);
  }
  return 1;
}

ExtendedInt BaseField::two_adic_w() const {
  if (is_char0()) return {2, false};
  if (p_ == 2) throw PreconditionError("two-adic invariants need odd characteristic");
  unsigned a = v2_q_minus_1();
  unsigned b;
  {
    u64 q = 1;
    for (u64 i = 0; i < e_; ++i) q *= p_;
    u64 x = q + 1;
    if (x == 0) throw CapacityExceeded("2-adic valuation of q+1 exceeds 63");
    b = static_cast<unsigned>(__builtin_ctzll(x));
  }
  return {std::max(a, b), false};
}

ExtendedInt BaseField::two_adic_w_prime() const {
  if (is_char0()) return {2, false};
  if (p_ == 2) throw PreconditionError("two-adic invariants need odd characteristic");
  return {adjoin_roots_of_unity(4).v2_q_minus_1(), false};
}

BaseField BaseField::adjoin_roots_of_unity(u64 m) const {
  require_coprime(m);
  switch (kind_) {
    case FieldKind::Rationals:
    case FieldKind::Cyclotomic: {
      if (m % 4 == 0) throw UnsupportedInstance("Q(zeta_z) backends only hold odd z");
      return cyclotomic(lcm(z_, odd_part(m)));
    }
    case FieldKind::Finite:
      return finite_power(p_, checked_mul(e_, cyclotomic_degree(m)));
  }
  return *this;
}

Int BaseField::q_minus_1() const {
  if (!is_finite()) throw PreconditionError("q - 1 on a field of characteristic 0");
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, e_);
  return q - 1;
}

std::string BaseField::name() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::Cyclotomic:
      return "Q(zeta_" + std::to_string(z_) + ")";
    case FieldKind::Finite:
      return e_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(p_) + "^" + std::to_string(e_);
  }
  return "?";
}

IntMatrix field_lattice(const ClassSpace& space, const BaseField& field) {
  if (!field.is_char0()) throw PreconditionError("class lattices exist only in characteristic 0");
  IntMatrix m = space.rational_lattice();
  const u64 z = field.z();
  if (z == 1) return m;
  const u64 s = space.scale();
  if (s % (4 * z) != 0) throw PreconditionError("class scale not divisible by 4z");
  m.append_column(space.twist_axis(2 * z));
  for (u64 p : prime_divisors(z)) {
    std::vector<Int> v(space.rank());
    auto it = std::find(space.primes().begin(), space.primes().end(), p);
    if (it == space.primes().end()) throw PreconditionError("class space lacks a prime of z");
    v[static_cast<std::size_t>(it - space.primes().begin())] = to_int(s / 2);
    if (p % 4 == 3) v[space.twist_index()] = to_int(s / 4);
    m.append_column(v);
  }
  return hnf(m);
}

bool sqrt_in_cyclotomic(const Rat& r, u64 n) {
  if (r == 0) throw PreconditionError("square root of zero");
  if (n == 0) throw PreconditionError("cyclotomic level must be positive");
  Int k = sgn(r) < 0 ? Int(-1) : Int(1);
  std::map<u64, unsigned> exps;
  for (const auto& [p, e] : factor_int(r.get_num())) exps[p] += e;
  for (const auto& [p, e] : factor_int(r.get_den())) exps[p] += e;
  for (const auto& [p, e] : exps) {
    if (e % 2 == 1) k *= to_int(p);
  }
  if (k == 1) return true;
  Int mod4 = k % 4;
  if (mod4 < 0) mod4 += 4;
  Int d = mod4 == 1 ? k : 4 * k;
  d = abs(d);
  return to_int(n) % d == 0;
}

bool radical_in_L(const RadicalQ& alpha, u64 z) {
  BaseField L = BaseField::cyclotomic(z);
  ClassSpace space = ClassSpace::covering({alpha}, 4 * z, z);
  auto v = space.coords(alpha);
  if (!v) return false;
  return FinAbQuotient(space.rank(), field_lattice(space, L)).member(*v);
}

bool is_nth_power_in_L(const Rat& a, u64 n, u64 z) {
  if (a == 0 || n == 0) throw PreconditionError("nth power test needs a != 0 and n >= 1");
  BaseField L = BaseField::cyclotomic(z);
  RadicalQ root = canonicalize(a, n);
  // a is an nth power in L iff some nth root of a lies in L, i.e. the class
  // of the principal root lies in Lambda_L + <zeta_n>.
  ClassSpace space = ClassSpace::covering({root}, lcm(4 * z, n), z);
  IntMatrix lat = field_lattice(space, L);
  lat.append_column(space.twist_axis(n));
  return FinAbQuotient(space.rank(), lat).member(space.require_coords(root));
}

}  // namespace radx
