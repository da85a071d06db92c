#pragma once
// Shared curated instances with independently known degrees.

#include <vector>

#include "radx/model.hpp"

namespace curated {

struct KnownDegree {
  radx::RadicalGroupSpec g;
  long degree;
  long index;
};

inline radx::RadicalQ sqrt_of(long v) { return radx::canonicalize(v, 2); }

// Degrees from classical facts: Eisenstein polynomials, cyclotomic degrees,
// and explicit field identities noted alongside.
inline std::vector<KnownDegree> char0_known() {
  using radx::BaseField;
  using radx::canonicalize;
  using radx::RadicalGroupSpec;
  using radx::RadicalQ;
  auto q = [](std::vector<RadicalQ> g) { return RadicalGroupSpec::radicals(BaseField::rationals(), g); };
  auto cz = [](radx::u64 z, std::vector<RadicalQ> g) { return RadicalGroupSpec::radicals(BaseField::cyclotomic(z), g); };
  return {
      {q({RadicalQ::zeta(3)}), 2, 3},
      {q({RadicalQ::zeta(9)}), 6, 9},
      {q({RadicalQ::zeta(3), RadicalQ::zeta(5)}), 8, 15},
      {q({canonicalize(2, 3)}), 3, 3},
      {q({canonicalize(2, 4)}), 4, 4},
      {q({radx::one_plus_zeta4()}), 2, 4},
      {q({radx::one_plus_zeta4(), canonicalize(2, 8)}), 16, 32},
      {q({RadicalQ::zeta(3), sqrt_of(2)}), 4, 6},
      {q({RadicalQ::zeta(3), canonicalize(2, 3)}), 6, 9},
      {q({RadicalQ::zeta(4), canonicalize(2, 4)}), 8, 8},
      {q({RadicalQ::zeta(8), canonicalize(2, 8)}), 16, 32},
      {q({sqrt_of(-3)}), 2, 2},
      {q({RadicalQ::zeta(3), sqrt_of(-3)}), 2, 6},
      {q({RadicalQ::zeta(12)}), 4, 6},
      {q({sqrt_of(2), sqrt_of(3), sqrt_of(5)}), 8, 8},
      {q({RadicalQ::zeta(8)}), 4, 4},
      {q({canonicalize(-3, 6)}), 6, 6},   // x^6 + 3 is Eisenstein
      {q({canonicalize(-27, 6)}), 2, 6},  // zeta_12 sqrt3 = (3 + sqrt(-3))/2
      {q({RadicalQ::zeta(5), canonicalize(2, 5)}), 20, 25},
      {q({canonicalize(-4, 8)}), 4, 8},   // x^8 + 4 = (x^4 + 2x^2 + 2)(x^4 - 2x^2 + 2)
      {q({canonicalize(4, 2)}), 1, 1},
      {q({RadicalQ::zeta(15)}), 8, 15},
      {q({RadicalQ::zeta(7), sqrt_of(-7)}), 6, 14},
      {q({RadicalQ::zeta(5), sqrt_of(5)}), 4, 10},
      {q({RadicalQ::zeta(16)}), 8, 8},
      {cz(3, {RadicalQ::zeta(9)}), 3, 3},
      {cz(3, {radx::one_plus_zeta4()}), 2, 4},
      {cz(3, {RadicalQ::zeta(5)}), 4, 5},
      {cz(15, {sqrt_of(5)}), 1, 1},
      {cz(15, {canonicalize(5, 4)}), 2, 2},
      {cz(5, {RadicalQ::zeta(3), canonicalize(3, 3)}), 6, 9},
  };
}

}  // namespace curated
