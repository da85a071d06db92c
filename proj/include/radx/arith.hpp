#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radx {

using Int = mpz_class;
using Rat = mpq_class;
using u64 = std::uint64_t;

inline constexpr u64 kDefaultTrialBound = 1000000;

u64 gcd(u64 a, u64 b);
// Throws CapacityExceeded when the result does not fit in 64 bits.
u64 lcm(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 ipow(u64 base, unsigned exp);

bool is_prime(u64 n);
std::map<u64, unsigned> factor(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);
u64 euler_phi(u64 n);
unsigned valuation(u64 n, u64 p);
unsigned valuation(const Int& n, u64 p);
u64 odd_part(u64 n);
u64 squarefree_kernel(u64 n);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
u64 multiplicative_order(u64 a, u64 m);

// q = p^e with p prime, or nullopt.
std::optional<std::pair<u64, unsigned>> prime_power(u64 q);

Int to_int(u64 v);
u64 to_u64(const Int& v);  // throws CapacityExceeded when out of range
bool fits_u64(const Int& v);

// Factorization of |r| for a nonzero integer, by trial division up to
// `bound`; a cofactor below bound^2 is prime.  Throws CapacityExceeded
// when a composite cofactor may remain.
std::map<u64, unsigned> factor_int(const Int& r, u64 bound = kDefaultTrialBound);

// Accepts "a", "-a", "a/b" with optional surrounding blanks.
Rat parse_rational(std::string_view text);
std::string to_string(const Rat& r);      // always "num/den"
std::string to_string(const Int& v);
Rat floor_frac(const Rat& r);             // r - floor(r), in [0,1)
Int floor_div(const Int& a, const Int& b);
Int floor_of(const Rat& r);
Rat rat_pow(const Rat& base, long long exp);

}  // namespace radx
