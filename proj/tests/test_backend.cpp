#include "doctest.h"
#include "radx/backend.hpp"
#include "radx/errors.hpp"

using namespace radx;

TEST_CASE("roots of unity in the base") {
  CHECK(BaseField::rationals().contains_root_of_unity(2));
  CHECK(BaseField::finite(7).contains_root_of_unity(3));
  CHECK_FALSE(BaseField::finite(7).contains_root_of_unity(4));
  CHECK(BaseField::cyclotomic(15).contains_root_of_unity(30));
  CHECK_FALSE(BaseField::cyclotomic(15).contains_root_of_unity(9));
  CHECK_THROWS_AS(BaseField::finite(9).contains_root_of_unity(6), UnsupportedInstance);
  CHECK(BaseField::cyclotomic(1) == BaseField::rationals());
}

TEST_CASE("cyclotomic degrees") {
  CHECK(BaseField::rationals().cyclotomic_degree(9) == 6);
  CHECK(BaseField::finite(2).cyclotomic_degree(3) == 2);
  CHECK(BaseField::finite(8).cyclotomic_degree(27) == 6);
  CHECK(BaseField::cyclotomic(3).cyclotomic_degree(4) == 2);
  CHECK(BaseField::cyclotomic(3).cyclotomic_degree(6) == 1);
  for (BaseField f : {BaseField::rationals(), BaseField::cyclotomic(15), BaseField::finite(7), BaseField::finite(9),
                      BaseField::finite(125)}) {
    for (u64 m = 1; m <= 200; ++m) {
      if (f.is_finite() && m % f.characteristic() == 0) continue;
      REQUIRE(f.contains_root_of_unity(m) == (f.cyclotomic_degree(m) == 1));
    }
  }
}

TEST_CASE("two-adic invariants") {
  CHECK(BaseField::rationals().two_adic_w().value == 2);
  CHECK(BaseField::finite(7).two_adic_w().value == 3);
  CHECK(BaseField::finite(17).two_adic_w().value == 4);
  CHECK(BaseField::finite(7).two_adic_w_prime().value == 4);
  CHECK(BaseField::rationals().two_adic_w_prime().value == 2);
  CHECK(BaseField::finite(11).two_adic_w_prime().value == 3);
  CHECK(BaseField::rationals().totally_real_2flag());
  CHECK(BaseField::cyclotomic(15).totally_real_2flag());
  CHECK_FALSE(BaseField::finite(9).totally_real_2flag());
  for (u64 q = 3; q < 400; q += 2) {
    if (!prime_power(q)) continue;
    BaseField f = BaseField::finite(q);
    u64 w = f.two_adic_w().value;
    REQUIRE(w >= 2);
    // w is the largest t with q = +-1 mod 2^t
    REQUIRE(((q - 1) % (1ULL << w) == 0 || (q + 1) % (1ULL << w) == 0));
    REQUIRE(!((q - 1) % (1ULL << (w + 1)) == 0 || (q + 1) % (1ULL << (w + 1)) == 0));
    if (q % 4 == 3) REQUIRE(f.two_adic_w_prime().value == valuation(q * q - 1, 2));
  }
}

TEST_CASE("square roots in cyclotomic fields") {
  CHECK(sqrt_in_cyclotomic(-3, 3));
  CHECK(sqrt_in_cyclotomic(2, 8));
  CHECK_FALSE(sqrt_in_cyclotomic(2, 12));
  CHECK(sqrt_in_cyclotomic(5, 5));
  CHECK(sqrt_in_cyclotomic(-1, 4));
  CHECK_FALSE(sqrt_in_cyclotomic(-1, 6));
  CHECK(sqrt_in_cyclotomic(Rat(9, 4), 1));
  CHECK(sqrt_in_cyclotomic(-7, 7));
  CHECK_FALSE(sqrt_in_cyclotomic(7, 7));
  CHECK(sqrt_in_cyclotomic(7, 28));
}

TEST_CASE("radicals in Q(zeta_z)") {
  CHECK_FALSE(radical_in_L(RadicalQ::zeta(9), 3));
  CHECK(radical_in_L(RadicalQ(Rat(1, 4), {{3, Rat(1, 2)}}), 3));
  CHECK_FALSE(radical_in_L(canonicalize(2, 2), 3));
  CHECK(radical_in_L(RadicalQ::zeta(6), 3));
  CHECK(radical_in_L(canonicalize(5, 2), 5));
  CHECK(radical_in_L(canonicalize(-15, 2), 15));
  CHECK_FALSE(radical_in_L(canonicalize(15, 2), 15));
  // agreement with the discriminant rule for square roots of rationals
  for (long r = -40; r <= 40; ++r) {
    if (r == 0) continue;
    for (u64 z : {1, 3, 5, 7, 15, 21, 105}) {
      REQUIRE(radical_in_L(canonicalize(r, 2), z) == sqrt_in_cyclotomic(r, 2 * z));
    }
  }
}

TEST_CASE("nth powers in Q(zeta_z)") {
  CHECK_FALSE(is_nth_power_in_L(-4, 4, 1));
  CHECK_FALSE(is_nth_power_in_L(16, 8, 1));
  // 16 = 2^4; the listed expectation "false" for (16, 4) contradicts this.
  CHECK(is_nth_power_in_L(16, 4, 1));
  CHECK(is_nth_power_in_L(16, 2, 1));
  CHECK(is_nth_power_in_L(-3, 2, 3));
  CHECK(is_nth_power_in_L(-27, 2, 3));
  CHECK_FALSE(is_nth_power_in_L(-3, 4, 3));
  CHECK(is_nth_power_in_L(9, 4, 3));  // 9 = (sqrt(-3))^4
  CHECK_FALSE(is_nth_power_in_L(-1, 2, 15));
  CHECK(is_nth_power_in_L(-1, 3, 1));
}
