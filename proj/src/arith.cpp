#include "radx/arith.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "radx/errors.hpp"

namespace radx {

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityExceeded("64-bit overflow in integer product");
  return r;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::map<u64, unsigned> factor(u64 n) {
  std::map<u64, unsigned> out;
  if (n <= 1) return out;
  bool reduced = true;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (reduced && n > 1000000 && is_prime(n)) break;
    reduced = false;
    while (n % p == 0) {
      ++out[p];
      n /= p;
      reduced = true;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factor(n)) {
    std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) return 0;
  u64 r = n;
  for (const auto& [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

unsigned valuation(u64 n, u64 p) {
  if (n == 0) throw PreconditionError("valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

unsigned valuation(const Int& n, u64 p) {
  if (n == 0) throw PreconditionError("valuation of zero");
  Int m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

u64 odd_part(u64 n) {
  if (n == 0) return 0;
  while ((n & 1) == 0) n >>= 1;
  return n;
}

u64 squarefree_kernel(u64 n) {
  u64 r = 1;
  for (const auto& [p, e] : factor(n)) r *= p;
  return r;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m == 0) throw PreconditionError("order modulo zero");
  if (m == 1) return 1;
  a %= m;
  if (gcd(a, m) != 1) throw PreconditionError("order of a non-unit");
  u64 order = euler_phi(m);
  for (const auto& [p, e] : factor(order)) {
    for (unsigned i = 0; i < e && order % p == 0; ++i) {
      if (pow_mod(a, order / p, m) == 1) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factor(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f.begin()->first, f.begin()->second);
}

Int to_int(u64 v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

bool fits_u64(const Int& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

u64 to_u64(const Int& v) {
  if (!fits_u64(v)) throw CapacityExceeded("integer does not fit in 64 bits: " + v.get_str());
  u64 r = 0;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

std::map<u64, unsigned> factor_int(const Int& r, u64 bound) {
  if (r == 0) throw PreconditionError("factorization of zero");
  std::map<u64, unsigned> out;
  Int m = abs(r);
  for (u64 p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    if (m == 1) break;
    Int pp = to_int(p);
    if (pp * pp > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[p];
    }
  }
  if (m != 1) {
    Int b = to_int(bound);
    if (m > b * b) throw CapacityExceeded("radicand cofactor " + m.get_str() + " exceeds the trial-division bound");
    ++out[to_u64(m)];
  }
  return out;
}

Rat parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("not a rational number: '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

std::string to_string(const Int& v) { return v.get_str(); }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_of(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

Rat floor_frac(const Rat& r) {
  Rat out = r - Rat(floor_of(r));
  out.canonicalize();
  return out;
}

Rat rat_pow(const Rat& base, long long exp) {
  if (exp < 0) {
    if (base == 0) throw PreconditionError("zero to a negative power");
    return rat_pow(Rat(base.get_den(), base.get_num()), -exp);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace radx
