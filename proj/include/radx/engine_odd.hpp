#pragma once

#include "radx/backend.hpp"
#include "radx/model.hpp"

namespace radx {

struct OddProfile {
  u64 p = 0;
  unsigned v_p = 0;
  unsigned m = 0;          // mu_{p^{v_p}}(G K^x) = <zeta_{p^m}>
  ExtendedInt m0;          // meaningful only when m0_defined
  bool m0_defined = false;
  u64 d_p = 1;             // [K(zeta_p) : K]
  bool zeta_p_in_K = false;
  bool zeta_p_in_GK = false;
  Int index;
  Int degree;
  Rat ratio;
};

// Largest t with zeta_{p^t} in K(zeta_p); requires zeta_p not in K.
ExtendedInt m0(const BaseField& field, u64 p);

// Profile of a group whose exponent is a power of the odd prime p
// (exponent 1 allowed: trivial profile).
OddProfile odd_profile(const RadicalGroupSpec& gp, u64 p);
Int degree_odd_prime_power(const RadicalGroupSpec& gp);
Rat ratio_odd_prime_power(const RadicalGroupSpec& gp);

}  // namespace radx
