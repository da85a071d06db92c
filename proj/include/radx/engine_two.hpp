#pragma once

#include <optional>
#include <string>

#include "radx/backend.hpp"
#include "radx/model.hpp"

namespace radx {

enum class SchinzelCase { MinusOne, MinusXi, PlusXi };

struct SchinzelA {
  SchinzelCase kind = SchinzelCase::MinusOne;
  std::optional<Rat> value;  // explicit when it is a rational number
  std::string text;
};

struct TwoAdicProfile {
  unsigned f = 0;
  ExtendedInt w;
  ExtendedInt w_prime;
  SchinzelA a;
  bool a_nontrivial = false;
  bool a_in_powers = false;          // a in G^n K^{xn}
  bool one_plus_zeta_in_GK = false;  // tested only when w < f
  Rat delta = 1;
  std::optional<RadicalGroupSpec> h;
  std::string h_text;
  unsigned m = 0;
  unsigned m_bar = 0;
  unsigned m_prime = 0;
  int table_row = 0;  // 0 when m = 1, else 1..4 in the order of the ratio table
  Rat ratio = 1;
  Int index;
  Int degree;
};

const char* to_string(SchinzelCase c);

SchinzelA schinzel_a(const BaseField& field, unsigned f);
bool a_nontrivial(const BaseField& field, unsigned f);

// All of the following need: exponent 2^f with f >= 2 and zeta_4 not in K.
TwoAdicProfile two_adic_profile(const RadicalGroupSpec& g2);
Rat rybowicz_delta(const RadicalGroupSpec& g2);
RadicalGroupSpec substitute_H(const RadicalGroupSpec& g2);
Rat ratio_two(const RadicalGroupSpec& g2);

// Delta for G over K with the odd defect z; fills `profile` with the
// two-adic profile of G^{n'} over K(zeta_z) when one was built.
unsigned capital_delta(const RadicalGroupSpec& g, u64 z, std::optional<TwoAdicProfile>* profile = nullptr);

}  // namespace radx
