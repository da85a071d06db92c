#include "radx/engine_odd.hpp"

#include "radx/errors.hpp"

namespace radx {

namespace {

u64 odd_prime_of_exponent(const RadicalGroupSpec& gp) {
  u64 n = gp.exponent();
  auto pp = prime_power(n);
  if (!pp || pp->first == 2) throw PreconditionError("exponent " + std::to_string(n) + " is not an odd prime power");
  return pp->first;
}

}  // namespace

ExtendedInt m0(const BaseField& field, u64 p) {
  if (field.contains_root_of_unity(p)) throw PreconditionError("m0 is only defined when zeta_p is not in K");
  if (field.is_char0()) return {1, false};
  BaseField kp = field.adjoin_roots_of_unity(p);
  u64 t = 0, pk = 1;
  while (pk <= UINT64_MAX / p && kp.contains_root_of_unity(pk * p)) {
    pk *= p;
    ++t;
  }
  if (pk > UINT64_MAX / p) throw CapacityExceeded("m0 exceeds the 64-bit range");
  return {t, false};
}

OddProfile odd_profile(const RadicalGroupSpec& gp, u64 p) {
  const BaseField& f = gp.base();
  const u64 n = gp.exponent();
  OddProfile out;
  out.p = p;
  if (p == 2 || !is_prime(p)) throw PreconditionError("odd profile needs an odd prime");
  if (n != 1 && odd_prime_of_exponent(gp) != p) throw PreconditionError("exponent is not a power of the given prime");
  out.v_p = n == 1 ? 0 : valuation(n, p);
  out.index = index_GK_over_K(gp);
  if (n == 1) {
    out.degree = 1;
    out.ratio = 1;
    out.zeta_p_in_K = f.contains_root_of_unity(p);
    return out;
  }
  const u64 mu = mu_order(gp, n);
  out.m = valuation(mu, p);
  out.d_p = f.cyclotomic_degree(p);
  out.zeta_p_in_K = f.contains_root_of_unity(p);
  out.zeta_p_in_GK = mu % p == 0;
  // [K(G):K] = |G^n K^{xn} : K^{xn}| * [K(mu_n(G K^x)) : K]
  out.degree = index_nth_powers(gp) * to_int(f.cyclotomic_degree(mu));
  if (out.zeta_p_in_K || !out.zeta_p_in_GK) {
    out.ratio = 1;
  } else {
    out.m0 = m0(f, p);
    out.m0_defined = true;
    u64 e = min_ext(out.m0, out.m);
    out.ratio = Rat(to_int(out.d_p), to_int(ipow(p, static_cast<unsigned>(e))));
  }
  if (Rat(out.degree) != out.ratio * Rat(out.index)) {
    throw InternalInconsistency("odd prime-power degree " + out.degree.get_str() + " disagrees with ratio " +
                                to_string(out.ratio) + " times index " + out.index.get_str() + " for " +
                                gp.describe());
  }
  return out;
}

Int degree_odd_prime_power(const RadicalGroupSpec& gp) { return odd_profile(gp, odd_prime_of_exponent(gp)).degree; }

Rat ratio_odd_prime_power(const RadicalGroupSpec& gp) { return odd_profile(gp, odd_prime_of_exponent(gp)).ratio; }

}  // namespace radx
