#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radx/model.hpp"

namespace radx {

enum class FamilyKind { Kummer, Compatible };

// Kummer: R_N = mu_N <gamma_i^{1/N}>, the full N-th root of Gamma = <gamma_i>.
// Compatible: R_N = <alpha_i^{1/N}> with principal roots.
class GrowthFamily {
 public:
  static GrowthFamily kummer(std::vector<Rat> gamma, BaseField base = BaseField::rationals());
  static GrowthFamily compatible(std::vector<Rat> templates, BaseField base = BaseField::rationals());

  FamilyKind kind() const { return kind_; }
  const BaseField& base() const { return base_; }
  const std::vector<Rat>& values() const { return values_; }
  // Canonical text used for cache keys.
  std::string key() const;
  // 64-bit FNV-1a of key().
  u64 hash() const;

 private:
  GrowthFamily(FamilyKind kind, std::vector<Rat> values, BaseField base);

  FamilyKind kind_;
  std::vector<Rat> values_;
  BaseField base_;
};

RadicalGroupSpec family_group(const GrowthFamily& fam, u64 N);

// Compatible families: R_N^M = R_{N/M} for M | N <= Nmax, R_1 in K^x and
// |R_N K^x : K^x| dividing N^c.  Throws PreconditionError on a violation.
void check_family_hypotheses(const GrowthFamily& fam, u64 Nmax);

struct GrowthRow {
  u64 N = 0;
  Int index;
  Int degree;
  Rat ratio;
};

// On-disk table of (family hash, N, index, degree), one record per line.
class GrowthCache {
 public:
  explicit GrowthCache(std::string path, std::ostream* warnings = nullptr);

  std::optional<std::pair<Int, Int>> lookup(u64 hash, u64 N) const;
  // Appends one line; a single write per record keeps appends whole.
  void store(u64 hash, u64 N, const Int& index, const Int& degree);
  std::size_t corrupt_lines() const { return corrupt_; }

 private:
  std::string path_;
  std::map<std::pair<u64, u64>, std::pair<Int, Int>> rows_;
  std::size_t corrupt_ = 0;
  mutable std::mutex lock_;
};

std::vector<GrowthRow> ratio_table(const GrowthFamily& fam, u64 Nmax, GrowthCache* cache = nullptr);

struct N0Result {
  u64 n0 = 0;
  u64 verified_up_to = 0;  // the identity was checked for every N up to here
};

// Least N0 <= Nmax with ratio(N) = ratio(gcd(N, N0)) * prod (p - 1)/p over
// primes p | N, p not dividing N0, zeta_p not in K, for all N <= Nmax.
// Kummer families over Q only.  Throws CapacityExceeded when none exists.
N0Result find_N0_mama(const GrowthFamily& fam, u64 Nmax, GrowthCache* cache = nullptr);

// Least N0 <= Nmax with ratio(N) = ratio(gcd(N, N0)) for all N <= Nmax.
N0Result check_eventual(const GrowthFamily& fam, u64 Nmax, GrowthCache* cache = nullptr);

}  // namespace radx
