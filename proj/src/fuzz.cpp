#include "radx/fuzz.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "radx/errors.hpp"

namespace radx {

namespace {

const std::vector<u64> kSmallPrimes = {2, 3, 5, 7, 11, 13};
const std::vector<u64> kDenominators = {1, 2, 3, 4, 6, 8, 12, 24};

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

std::vector<u64> prime_powers_up_to(u64 bound) {
  std::vector<u64> out;
  for (u64 q = 2; q <= bound; ++q)
    if (prime_power(q)) out.push_back(q);
  return out;
}

}  // namespace

RadicalGroupSpec random_char0_instance(std::mt19937_64& rng, u64 max_dim) {
  for (;;) {
    BaseField base = BaseField::rationals();
    if (rng() % 5 == 0) base = BaseField::cyclotomic(pick(std::vector<u64>{3, 5, 15}, rng));
    const std::size_t count = 1 + rng() % 3;
    std::vector<RadicalQ> gens;
    for (std::size_t i = 0; i < count; ++i) {
      u64 td = pick(kDenominators, rng);
      Rat twist(static_cast<long>(rng() % td), static_cast<long>(td));
      std::map<u64, Rat> exps;
      const std::size_t primes = rng() % 3;
      for (std::size_t j = 0; j < primes; ++j) {
        u64 d = pick(kDenominators, rng);
        long num = static_cast<long>(rng() % (2 * d)) - static_cast<long>(d / 2);
        if (num == 0) num = 1;
        exps[pick(kSmallPrimes, rng)] = Rat(num, static_cast<long>(d));
      }
      gens.emplace_back(twist, exps);
    }
    auto g = RadicalGroupSpec::radicals(base, gens);
    if (oracle_dimension(g) <= max_dim) return g;
  }
}

RadicalGroupSpec random_finite_instance(std::mt19937_64& rng, u64 max_q, u64 max_D) {
  static thread_local u64 cached_bound = 0;
  static thread_local std::vector<u64> qs;
  if (cached_bound != max_q) {
    qs = prime_powers_up_to(max_q);
    cached_bound = max_q;
  }
  if (qs.empty()) throw PreconditionError("no prime power below the bound");
  const u64 q = pick(qs, rng);
  const u64 p = prime_power(q)->first;
  for (;;) {
    u64 d = 1 + rng() % max_D;
    if (d % p != 0) return RadicalGroupSpec::roots_of_unity(BaseField::finite(q), d);
  }
}

RadicalGroupSpec fuzz_instance(const FuzzConfig& cfg, u64 id) {
  std::seed_seq seq{cfg.seed, id};
  std::mt19937_64 rng(seq);
  return cfg.finite ? random_finite_instance(rng, cfg.max_q, cfg.max_D) : random_char0_instance(rng, cfg.oracle.max_dim);
}

FuzzSummary run_fuzz(const FuzzConfig& cfg, const std::function<void(const FuzzCase&)>& on_failure) {
  FuzzSummary summary;
  std::mutex lock;
  std::atomic<u64> next{0};
  auto worker = [&] {
    for (;;) {
      const u64 id = next++;
      if (id >= cfg.count) return;
      FuzzCase c{id, fuzz_instance(cfg, id), {}};
      OracleOptions opt = cfg.oracle;
      opt.seed = cfg.seed ^ (id * 0x9e3779b97f4a7c15ULL);
      c.verdict = compare(c.g, opt);
      std::lock_guard<std::mutex> guard(lock);
      switch (c.verdict.kind) {
        case VerdictKind::Match:
          ++summary.matches;
          break;
        case VerdictKind::Skipped:
          ++summary.skipped;
          ++summary.skip_reasons[c.verdict.reason];
          break;
        case VerdictKind::Mismatch:
          ++summary.mismatches;
          if (on_failure) on_failure(c);
          summary.failures.push_back(std::move(c));
          break;
      }
    }
  };
  const unsigned n = std::max(1u, cfg.threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return summary;
}

}  // namespace radx
