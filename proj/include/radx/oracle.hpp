#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "radx/engine_main.hpp"
#include "radx/model.hpp"

namespace radx {

struct OracleOptions {
  u64 max_dim = 4096;
  u64 seed = 1;
  unsigned stable_draws = 3;  // the maximal degree must be seen this often
  unsigned max_draws = 12;
  mpfr_prec_t precision_start = 128;
  mpfr_prec_t precision_max = 4096;
  u64 recombination_budget = 5000000;
};

struct OracleResult {
  Int degree;                     // [K(G):K]
  u64 dimension = 0;              // dimension of the ambient algebra
  std::vector<u64> draw_degrees;  // [Q(theta):Q] per draw
};

// [F_q(mu_D):F_q] as the order of q modulo lcm(D, q - 1).
Int oracle_degree_fq(u64 q, u64 D);

// Dimension of the algebra Q(zeta_L) (x) Q[y_j]/(y_j^{d_j} - p_j) hosting G.
u64 oracle_dimension(const RadicalGroupSpec& g);

// [K(G):K] for K = Q or Q(zeta_z) by minimal polynomials of random
// primitive-element candidates.  Throws CapacityExceeded on any cap.
OracleResult oracle_degree_q(const RadicalGroupSpec& g, const OracleOptions& opt = {});

enum class VerdictKind { Match, Mismatch, Skipped };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Skipped;
  Int engine;
  Int oracle;
  std::string reason;
  std::optional<AnalysisReport> report;  // attached on mismatch
};

// Engine degree against the oracle; capacity problems give Skipped.
Verdict compare(const RadicalGroupSpec& g, const OracleOptions& opt = {});

}  // namespace radx
