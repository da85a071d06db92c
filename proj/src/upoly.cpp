#include "radx/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <functional>

#include "radx/errors.hpp"

namespace radx::upoly {

namespace {

u64 inv_mod(u64 a, u64 ell) { return pow_mod(a % ell, ell - 2, ell); }

Int mods(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Symmetric residue in (-m/2, m/2].
Int symmetric(const Int& a, const Int& m) {
  Int r = mods(a, m);
  if (2 * r > m) r -= m;
  return r;
}

ZPoly lift_mod(const ModPoly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = to_int(f[i]);
  return out;
}

void reduce_coeffs(ZPoly& f, const Int& m) {
  for (auto& c : f) c = mods(c, m);
  trim(f);
}

ZPoly mul_mod_m(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly p = mul(a, b);
  reduce_coeffs(p, m);
  return p;
}

ZPoly add_mod_m(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  reduce_coeffs(out, m);
  return out;
}

ZPoly sub_mod_m(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  reduce_coeffs(out, m);
  return out;
}

// Division by a monic b modulo m.
std::pair<ZPoly, ZPoly> divrem_mod_m(ZPoly a, const ZPoly& b, const Int& m) {
  reduce_coeffs(a, m);
  if (a.size() < b.size()) return {ZPoly{}, a};
  ZPoly q(a.size() - b.size() + 1, Int(0));
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Int c = mods(a[i], m);
    if (c != 0) {
      q[i - b.size() + 1] = c;
      for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
    }
    if (i == b.size() - 1) break;
  }
  a.resize(b.size() - 1);
  reduce_coeffs(a, m);
  reduce_coeffs(q, m);
  return {q, a};
}

// s, t with s a + t b = 1 over Z/ell.
std::pair<ModPoly, ModPoly> ext_gcd(const ModPoly& a, const ModPoly& b, u64 ell) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, ell);
    ModPoly s2 = sub(s0, mul(q, s1, ell), ell);
    ModPoly t2 = sub(t0, mul(q, t1, ell), ell);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InternalInconsistency("Hensel factors are not coprime modulo the prime");
  u64 inv = inv_mod(r0[0], ell);
  for (auto& c : s0) c = c * inv % ell;
  for (auto& c : t0) c = c * inv % ell;
  return {s0, t0};
}

// Frobenius matrix: row i holds x^{i ell} mod f.
std::vector<ModPoly> frobenius_rows(const ModPoly& f, u64 ell) {
  const std::size_t n = f.size() - 1;
  ModPoly xp{1};
  {
    ModPoly base{0, 1};
    u64 e = ell;
    while (e) {
      if (e & 1) xp = divrem(mul(xp, base, ell), f, ell).second;
      base = divrem(mul(base, base, ell), f, ell).second;
      e >>= 1;
    }
  }
  std::vector<ModPoly> rows(n);
  rows[0] = ModPoly{1};
  for (std::size_t i = 1; i < n; ++i) rows[i] = divrem(mul(rows[i - 1], xp, ell), f, ell).second;
  return rows;
}

// a^ell mod f using the Frobenius rows of f.
ModPoly apply_frobenius(const ModPoly& a, const std::vector<ModPoly>& rows, u64 ell) {
  ModPoly out(rows.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rows[i].size(); ++j) out[j] = (out[j] + a[i] * rows[i][j]) % ell;
  }
  trim(out);
  return out;
}

ModPoly powmod(ModPoly base, u64 e, const ModPoly& f, u64 ell) {
  ModPoly r{1};
  base = divrem(base, f, ell).second;
  while (e) {
    if (e & 1) r = divrem(mul(r, base, ell), f, ell).second;
    base = divrem(mul(base, base, ell), f, ell).second;
    e >>= 1;
  }
  return r;
}

void equal_degree_split(const ModPoly& g, std::size_t d, const ModPoly& big, const std::vector<ModPoly>& rows, u64 ell,
                        std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const std::size_t deg = g.size() - 1;
  if (deg == d) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<u64> coin(0, ell - 1);
  for (;;) {
    ModPoly a(deg);
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (a.size() < 2) continue;
    // s = a^{1 + ell + ... + ell^{d-1}} mod g, then s^{(ell-1)/2}.
    ModPoly t = a, s = a;
    for (std::size_t i = 1; i < d; ++i) {
      t = divrem(apply_frobenius(divrem(t, big, ell).second, rows, ell), g, ell).second;
      s = divrem(mul(s, t, ell), g, ell).second;
    }
    ModPoly b = powmod(s, (ell - 1) / 2, g, ell);
    if (b.empty()) continue;
    b[0] = (b[0] + ell - 1) % ell;
    trim(b);
    ModPoly h = gcd(g, b, ell);
    if (h.size() <= 1 || h.size() == g.size()) continue;
    equal_degree_split(h, d, big, rows, ell, rng, out);
    equal_degree_split(divrem(g, h, ell).first, d, big, rows, ell, rng, out);
    return;
  }
}

std::vector<std::pair<ModPoly, std::size_t>> distinct_degree(const ModPoly& f, const std::vector<ModPoly>& rows,
                                                             u64 ell) {
  std::vector<std::pair<ModPoly, std::size_t>> out;
  ModPoly rest = f;
  ModPoly h{0, 1};
  for (std::size_t d = 1; 2 * d <= rest.size() - 1; ++d) {
    h = apply_frobenius(h, rows, ell);
    ModPoly diff = sub(h, ModPoly{0, 1}, ell);
    ModPoly g = gcd(rest, diff, ell);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      rest = divrem(rest, g, ell).first;
    }
  }
  if (rest.size() > 1) out.emplace_back(rest, rest.size() - 1);
  return out;
}

std::string to_string_u128(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

unsigned __int128 from_int_u128(const Int& v) {
  unsigned __int128 out = 0;
  for (char c : v.get_str()) out = out * 10 + static_cast<unsigned>(c - '0');
  return out;
}

u64 next_prime_above(u64 n) {
  while (!is_prime(n)) ++n;
  return n;
}

}  // namespace

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly reduce(const ZPoly& f, u64 ell) {
  ModPoly out(f.size());
  Int m = to_int(ell);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = to_u64(mods(f[i], m));
  trim(out);
  return out;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 ell) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % ell;
  }
  trim(out);
  return out;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, u64 ell) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + ell - b[i]) % ell;
  trim(out);
  return out;
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b, u64 ell) {
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  if (a.size() < b.size()) return {ModPoly{}, a};
  ModPoly r = a;
  ModPoly q(a.size() - b.size() + 1, 0);
  const u64 inv = inv_mod(b.back(), ell);
  for (std::size_t i = r.size(); i-- >= b.size();) {
    u64 c = r[i] * inv % ell;
    q[i - b.size() + 1] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t k = i - b.size() + 1 + j;
        r[k] = (r[k] + ell - c * b[j] % ell) % ell;
      }
    }
    if (i == b.size() - 1) break;
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

ModPoly make_monic(const ModPoly& f, u64 ell) {
  if (f.empty()) return f;
  u64 inv = inv_mod(f.back(), ell);
  ModPoly out(f);
  for (auto& c : out) c = c * inv % ell;
  return out;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 ell) {
  while (!b.empty()) {
    ModPoly r = divrem(a, b, ell).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, ell);
}

ModPoly derivative(const ModPoly& f, u64 ell) {
  if (f.size() <= 1) return {};
  ModPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * (i % ell) % ell;
  trim(out);
  return out;
}

bool is_squarefree(const ModPoly& f, u64 ell) {
  ModPoly d = derivative(f, ell);
  if (d.empty()) return f.size() <= 1;
  return gcd(f, d, ell).size() == 1;
}

std::vector<ModPoly> factor_mod(const ModPoly& f, u64 ell, std::mt19937_64& rng) {
  if (f.size() <= 2) return {f};
  auto rows = frobenius_rows(f, ell);
  std::vector<ModPoly> out;
  for (const auto& [g, d] : distinct_degree(f, rows, ell)) equal_degree_split(g, d, f, rows, ell, rng, out);
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty() || b.back() != 1) throw PreconditionError("exact division needs a monic divisor");
  if (a.size() < b.size()) {
    if (a.empty()) return ZPoly{};
    return std::nullopt;
  }
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Int(0));
  for (std::size_t i = r.size(); i-- >= b.size();) {
    Int c = r[i];
    q[i - b.size() + 1] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i - b.size() + 1 + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  trim(q);
  return q;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(out);
  return out;
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, u64 ell, const Int& modulus) {
  if (factors.size() == 1) {
    ZPoly g = f;
    reduce_coeffs(g, modulus);
    return {g};
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + half), right(factors.begin() + half, factors.end());
  ModPoly g0{1}, h0{1};
  for (const auto& u : left) g0 = mul(g0, u, ell);
  for (const auto& u : right) h0 = mul(h0, u, ell);
  auto [s0, t0] = ext_gcd(g0, h0, ell);
  ZPoly g = lift_mod(g0), h = lift_mod(h0), s = lift_mod(s0), t = lift_mod(t0);
  Int m = to_int(ell);
  while (m < modulus) {
    Int m2 = m * m;
    // Quadratic Hensel step with h monic.
    ZPoly e = sub_mod_m(f, mul(g, h), m2);
    auto [q, r] = divrem_mod_m(mul(s, e), h, m2);
    ZPoly g1 = add_mod_m(add_mod_m(g, mul(t, e), m2), mul(q, g), m2);
    ZPoly h1 = add_mod_m(h, r, m2);
    ZPoly b = sub_mod_m(add_mod_m(mul(s, g1), mul(t, h1), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = divrem_mod_m(mul(s, b), h1, m2);
    ZPoly s1 = sub_mod_m(s, d, m2);
    ZPoly t1 = sub_mod_m(sub_mod_m(t, mul(t, b), m2), mul(c, g1), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
    m = m2;
  }
  reduce_coeffs(g, modulus);
  reduce_coeffs(h, modulus);
  // g stays monic because the leading term of f is carried by h.
  auto a = hensel_lift(g, left, ell, modulus);
  auto bb = hensel_lift(h, right, ell, modulus);
  a.insert(a.end(), bb.begin(), bb.end());
  return a;
}

// 2^31 - 1; the Hensel primes lie just above 2^20, so it never coincides.
constexpr u64 kCheckPrime = 2147483647;
constexpr std::size_t kMaxPowerSums = 24;

std::optional<std::vector<ZPoly>> factor_monic_squarefree(const ZPoly& f_in, const FactorOptions& opt) {
  if (f_in.empty() || f_in.back() != 1) throw PreconditionError("factorization needs a monic polynomial");
  std::vector<ZPoly> result;
  ZPoly f = f_in;
  if (f.size() > 1 && f[0] == 0) {
    // Squarefree, so x divides f exactly once.
    result.push_back(ZPoly{Int(0), Int(1)});
    f.erase(f.begin());
  }
  if (f.size() <= 2) {
    if (f.size() == 2) result.push_back(f);
    return result;
  }
  std::mt19937_64 rng(opt.seed);

  // Pick the prime with the fewest local factors among a few candidates.
  u64 ell = 0;
  std::vector<ModPoly> best;
  u64 candidate = (1u << 20) + 1;
  unsigned tried = 0, scanned = 0;
  while (tried < opt.trial_primes) {
    if (++scanned > 1000) throw PreconditionError("polynomial is not squarefree");
    candidate = next_prime_above(candidate + 1);
    ModPoly fm = reduce(f, candidate);
    if (fm.size() != f.size() || !is_squarefree(fm, candidate)) continue;
    ++tried;
    auto local = factor_mod(fm, candidate, rng);
    if (ell == 0 || local.size() < best.size()) {
      ell = candidate;
      best = std::move(local);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) {
    result.push_back(f);
    return result;
  }

  // Mignotte: coefficients of a factor are at most 2^deg ||f||_2.
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int norm = sqrt(norm2) + 1;
  Int bound = (Int(1) << static_cast<unsigned long>(f.size() - 1)) * norm;
  Int modulus = to_int(ell);
  u64 modulus_exp = 1;  // modulus = ell^modulus_exp
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    modulus_exp *= 2;
  }
  std::vector<ZPoly> local = hensel_lift(f, best, ell, modulus);

  // Power-sum test: for a true factor of degree k the power sums p_1..p_T of
  // its roots are integers with |p_j| <= k R^j, R a root bound of f
  // (Fujiwara).  Sums are kept modulo a power of ell below 2^120, so a subset
  // costs T additions.  Radical minimal polynomials often have local factors
  // in x^m, for which p_1 alone (or the constant term) rarely discriminates.
  const std::size_t n = f.size() - 1;
  double log2_r = -1e300;
  for (std::size_t k = 1; k <= n; ++k) {
    const Int& a = f[n - k];
    if (a == 0) continue;
    long ex = 0;
    double d = mpz_get_d_2exp(&ex, a.get_mpz_t());
    log2_r = std::max(log2_r, (std::log2(std::fabs(d)) + static_cast<double>(ex)) / static_cast<double>(k));
  }
  log2_r = std::max(log2_r, 0.0) + 1.0;
  using u128 = unsigned __int128;
  // small_mod = ell^K with K <= modulus_exp, so that it divides the modulus.
  u128 small_mod = ell;
  for (u64 k = 1; k < modulus_exp && small_mod < (u128{1} << 119) / ell; ++k) small_mod *= ell;
  const double log2_small = std::log2(static_cast<double>(small_mod));
  std::size_t num_sums = 0;
  while (num_sums < kMaxPowerSums &&
         std::log2(static_cast<double>(n)) + static_cast<double>(num_sums + 1) * log2_r + 3.0 < log2_small)
    ++num_sums;
  const Int small_mod_int(to_string_u128(small_mod));
  std::vector<std::vector<u128>> sums;  // sums[i][j-1] = p_j of local[i]
  auto refresh_sums = [&] {
    sums.clear();
    for (const auto& u : local) {
      // Newton: p_j = -j a_{k-j} - sum_{i<j} a_{k-i} p_{j-i}, with a_{k-i} = 0 for i > k.
      const std::size_t k = u.size() - 1;
      std::vector<Int> p(num_sums + 1, Int(0));
      std::vector<u128> row;
      for (std::size_t j = 1; j <= num_sums; ++j) {
        Int v = j <= k ? Int(-static_cast<long>(j)) * u[k - j] : Int(0);
        for (std::size_t i = 1; i < j && i <= k; ++i) v -= u[k - i] * p[j - i];
        p[j] = mods(v, small_mod_int);
        row.push_back(from_int_u128(p[j]));
      }
      sums.push_back(std::move(row));
    }
  };
  refresh_sums();
  auto sums_plausible = [&](const std::vector<u128>& total, std::size_t deg) {
    for (std::size_t j = 1; j <= num_sums; ++j) {
      const u128 t = total[j - 1];
      const double mag = static_cast<double>(t <= small_mod / 2 ? t : small_mod - t);
      if (mag > static_cast<double>(deg) * std::exp2(static_cast<double>(j) * log2_r) + 1.0) return false;
    }
    return true;
  };

  u64 spent = 0;
  std::size_t s = 1;
  while (2 * s <= local.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    // prefix[k]: power sums of idx[0..k-1] modulo small_mod.
    std::vector<std::vector<u128>> prefix(s + 1, std::vector<u128>(num_sums, 0));
    std::vector<std::size_t> prefix_deg(s + 1, 0);
    auto rebuild = [&](std::size_t from) {
      for (std::size_t k = from; k < s; ++k) {
        for (std::size_t j = 0; j < num_sums; ++j) prefix[k + 1][j] = (prefix[k][j] + sums[idx[k]][j]) % small_mod;
        prefix_deg[k + 1] = prefix_deg[k] + local[idx[k]].size() - 1;
      }
    };
    rebuild(0);
    for (;;) {
      if (++spent > opt.recombination_budget) return std::nullopt;
      bool plausible = sums_plausible(prefix[s], prefix_deg[s]);
      if (plausible) {
        // Constant-term filter before forming the full product.
        Int c0 = 1;
        for (std::size_t i : idx) c0 = mods(c0 * local[i][0], modulus);
        c0 = symmetric(c0, modulus);
        plausible = c0 != 0 && f[0] % c0 == 0;
      }
      ZPoly cand;
      if (plausible) {
        cand = ZPoly{Int(1)};
        for (std::size_t i : idx) cand = mul_mod_m(cand, local[i], modulus);
        for (auto& c : cand) c = symmetric(c, modulus);
        trim(cand);
        // A wrong subset makes the exact quotient explode in size; reject it
        // modulo an unrelated word prime first.
        if (!divrem(reduce(f, kCheckPrime), reduce(cand, kCheckPrime), kCheckPrime).second.empty()) plausible = false;
      }
      if (plausible) {
        auto q = divide_exact(f, cand);
        if (q) {
          result.push_back(cand);
          f = *q;
          for (std::size_t k = s; k-- > 0;) local.erase(local.begin() + static_cast<long>(idx[k]));
          refresh_sums();
          found = true;
          break;
        }
      }
      // Next s-subset in lexicographic order.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == local.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
      rebuild(k - 1);
    }
    if (!found) ++s;
  }
  if (f.size() > 1) result.push_back(f);
  return result;
}

}  // namespace radx::upoly
