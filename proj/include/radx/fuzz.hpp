#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "radx/model.hpp"
#include "radx/oracle.hpp"

namespace radx {

struct FuzzConfig {
  bool finite = false;  // F_q instead of characteristic 0
  u64 max_q = 200;
  u64 max_D = 2000;
  u64 count = 100;
  u64 seed = 1;
  unsigned threads = 1;
  OracleOptions oracle = [] {
    OracleOptions o;
    o.max_dim = 256;
    return o;
  }();
};

struct FuzzCase {
  u64 id = 0;
  RadicalGroupSpec g;
  Verdict verdict;
};

struct FuzzSummary {
  u64 matches = 0;
  u64 mismatches = 0;
  u64 skipped = 0;
  std::map<std::string, u64> skip_reasons;
  std::vector<FuzzCase> failures;
};

// Up to three generators over Q (sometimes over Q(zeta_z), z in {3, 5, 15}):
// twists with denominator dividing 24, radicands built from primes <= 13 with
// exponent denominators dividing 24; redrawn until the oracle dimension fits.
RadicalGroupSpec random_char0_instance(std::mt19937_64& rng, u64 max_dim);
// mu_D over F_q with q <= max_q a prime power and D <= max_D prime to q.
RadicalGroupSpec random_finite_instance(std::mt19937_64& rng, u64 max_q, u64 max_D);

// Instance `id` of the campaign described by cfg.
RadicalGroupSpec fuzz_instance(const FuzzConfig& cfg, u64 id);

// Instance `id` depends only on (seed, id), so results do not depend on the
// thread count.  `on_failure` runs under a lock for each mismatch.
FuzzSummary run_fuzz(const FuzzConfig& cfg, const std::function<void(const FuzzCase&)>& on_failure = {});

}  // namespace radx
