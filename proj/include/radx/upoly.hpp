#pragma once

#include <optional>
#include <random>
#include <vector>

#include "radx/arith.hpp"

namespace radx {

// Dense univariate polynomials, lowest degree first, no trailing zeros
// (the zero polynomial is empty).
using ZPoly = std::vector<Int>;
using ModPoly = std::vector<u64>;

namespace upoly {

// Arithmetic over Z/ell for a prime ell < 2^31.
void trim(ModPoly& f);
ModPoly reduce(const ZPoly& f, u64 ell);
ModPoly mul(const ModPoly& a, const ModPoly& b, u64 ell);
ModPoly sub(const ModPoly& a, const ModPoly& b, u64 ell);
// Quotient and remainder; b must be nonzero.
std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b, u64 ell);
ModPoly make_monic(const ModPoly& f, u64 ell);
ModPoly gcd(ModPoly a, ModPoly b, u64 ell);
ModPoly derivative(const ModPoly& f, u64 ell);
bool is_squarefree(const ModPoly& f, u64 ell);

// Irreducible monic factors of a monic squarefree polynomial over Z/ell (ell odd).
std::vector<ModPoly> factor_mod(const ModPoly& f, u64 ell, std::mt19937_64& rng);

// Arithmetic over Z.
void trim(ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
// Exact division by a monic divisor; nullopt if the remainder is nonzero.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);

// Lift f = prod factors (mod ell) to factors modulo `modulus` = ell^k.
// f monic; factors monic, pairwise coprime mod ell.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, u64 ell, const Int& modulus);

struct FactorOptions {
  u64 recombination_budget = 5000000;  // candidate subsets tried before giving up
  unsigned trial_primes = 15;         // primes tried to minimise the local factor count
  u64 seed = 1;
};

// Irreducible factors over Z of a monic squarefree integer polynomial;
// nullopt when recombination exceeds the budget.
std::optional<std::vector<ZPoly>> factor_monic_squarefree(const ZPoly& f, const FactorOptions& opt = {});

}  // namespace upoly
}  // namespace radx
