#pragma once
// Independent brute-force helpers used only as test oracles.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace brute {

// Size of the subgroup of (Z/mod)^r generated by `gens` (closure by BFS).
inline std::size_t subgroup_size_mod(const std::vector<std::vector<long>>& gens, long mod, std::size_t r) {
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier{std::vector<long>(r, 0)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        std::vector<long> w(r);
        for (std::size_t i = 0; i < r; ++i) w[i] = (((v[i] + g[i]) % mod) + mod) % mod;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace brute

#include <map>
#include <gmpxx.h>

namespace brute {

// A class of Rad(Q)/Q^x: twist modulo 1/2 and exponents modulo 1.
struct QClass {
  mpq_class twist;
  std::map<std::uint64_t, mpq_class> exps;
  bool operator<(const QClass& o) const {
    if (twist != o.twist) return twist < o.twist;
    return exps < o.exps;
  }
};

inline mpq_class mod_q(mpq_class x, const mpq_class& m) {
  mpz_class k;
  mpq_class y = x / m;
  mpz_fdiv_q(k.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  mpq_class out = x - m * mpq_class(k);
  out.canonicalize();
  return out;
}

inline QClass normalize(const mpq_class& twist, const std::map<std::uint64_t, mpq_class>& exps) {
  QClass c;
  c.twist = mod_q(twist, mpq_class(1, 2));
  for (const auto& [p, e] : exps) {
    mpq_class r = mod_q(e, 1);
    if (r != 0) c.exps[p] = r;
  }
  return c;
}

inline QClass add(const QClass& a, const QClass& b) {
  std::map<std::uint64_t, mpq_class> e = a.exps;
  for (const auto& [p, v] : b.exps) e[p] += v;
  return normalize(a.twist + b.twist, e);
}

// Closure of the generated subgroup of Rad(Q)/Q^x (finite by construction).
inline std::set<QClass> closure(const std::vector<QClass>& gens, std::size_t cap = 200000) {
  std::set<QClass> seen{QClass{}};
  std::vector<QClass> frontier{QClass{}};
  while (!frontier.empty()) {
    std::vector<QClass> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        QClass w = add(v, g);
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
    if (seen.size() > cap) throw std::runtime_error("brute closure too large");
  }
  return seen;
}

}  // namespace brute

namespace brute {

// Multiplicative order of q modulo L by direct iteration (small L only).
inline std::uint64_t order_mod(std::uint64_t q, std::uint64_t L) {
  if (L == 1) return 1;
  std::uint64_t x = q % L, k = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * q) % L);
    ++k;
    if (k > L) throw std::runtime_error("q is not a unit modulo L");
  }
  return k;
}

inline std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// [F_q(mu_D) : F_q] = ord_{lcm(D, q-1)}(q).
inline std::uint64_t finite_degree(std::uint64_t q, std::uint64_t D) {
  std::uint64_t L = D / gcd_u(D, q - 1) * (q - 1);
  return order_mod(q, L);
}

}  // namespace brute
