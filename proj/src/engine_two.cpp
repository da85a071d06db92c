#include "radx/engine_two.hpp"

#include "radx/errors.hpp"

namespace radx {

namespace {

unsigned v2(u64 n) { return valuation(n, 2); }

unsigned finite_w(const BaseField& f) {
  ExtendedInt w = f.two_adic_w();
  if (w.infinite) throw UnsupportedInstance("w = infinity is not supported by the implemented backends");
  return static_cast<unsigned>(w.value);
}

void require_two_adic_base(const BaseField& f) {
  if (f.is_finite() && f.characteristic() == 2) throw PreconditionError("two-adic analysis needs odd characteristic");
  if (f.contains_root_of_unity(4)) throw PreconditionError("two-adic analysis assumes zeta_4 is not in K");
}

unsigned require_two_power_exponent(const RadicalGroupSpec& g2) {
  require_two_adic_base(g2.base());
  const u64 n = g2.exponent();
  if (n < 4 || (n & (n - 1)) != 0) {
    throw PreconditionError("two-adic analysis needs exponent 2^f with f >= 2, got " + std::to_string(n));
  }
  return v2(n);
}

// 1 + zeta_{2^w} = zeta_{2^{w+1}} xi_{2^{w+1}}; only w = 2 occurs in characteristic 0.
RadicalQ one_plus_zeta_char0(unsigned w) {
  if (w != 2) throw UnsupportedInstance("1 + zeta_{2^w} is only modelled for w = 2 in characteristic 0");
  return one_plus_zeta4();
}

bool a_in_nth_powers(const RadicalGroupSpec& g2, const SchinzelA& a, unsigned f) {
  const BaseField& k = g2.base();
  // Over a finite field G^n K^{xn} = (G K^x)^n = K^x, which contains a.
  if (k.is_finite()) return true;
  const u64 n = u64{1} << f;
  // The n-th roots of a form one coset of mu_n; test the listed root.
  switch (a.kind) {
    case SchinzelCase::MinusOne:
      return contains_mod_roots(g2, RadicalQ::zeta(2 * n), n);
    case SchinzelCase::MinusXi:
      return contains_mod_roots(g2, one_plus_zeta4(), n);
    case SchinzelCase::PlusXi:
      return contains_mod_roots(g2, RadicalQ(Rat(0), {{2, Rat(1, 2)}}), n);
  }
  return false;
}

// Order D_H of H = mu_{D_H} over a finite field.
u64 finite_h_order(const RadicalGroupSpec& g2, const TwoAdicProfile& p) {
  const u64 n = u64{1} << p.f;
  const unsigned w = static_cast<unsigned>(p.w.value);
  if (w > p.f) return mu_order(g2, 2 * n);
  if (w == p.f) return p.a_in_powers ? (n * 2) : mu_order(g2, n);
  return mu_order(g2, n);
}

}  // namespace

const char* to_string(SchinzelCase c) {
  switch (c) {
    case SchinzelCase::MinusOne:
      return "MinusOne";
    case SchinzelCase::MinusXi:
      return "MinusXi";
    case SchinzelCase::PlusXi:
      return "PlusXi";
  }
  return "?";
}

SchinzelA schinzel_a(const BaseField& field, unsigned f) {
  require_two_adic_base(field);
  if (f < 1) throw PreconditionError("schinzel_a needs f >= 1");
  const unsigned w = finite_w(field);
  SchinzelA out;
  const std::string half = f >= 2 ? "2^" + std::to_string(f - 1) : "1/2";
  if (w > f) {
    out.kind = SchinzelCase::MinusOne;
    out.value = Rat(-1);
    out.text = "-1";
    return out;
  }
  out.kind = w == f ? SchinzelCase::MinusXi : SchinzelCase::PlusXi;
  const std::string sign = w == f ? "-" : "";
  if (field.is_char0()) {
    // w = 2 and xi_4 = 0, so the value is +-2^{n/2}.
    if (f - 1 <= 12) {
      Rat v = Rat(Int(1) << static_cast<unsigned>(u64{1} << (f - 1)));
      out.value = w == f ? Rat(-v) : v;
    }
    out.text = sign + "2^(" + half + ")";
  } else {
    out.text = sign + "(xi_" + std::to_string(u64{1} << w) + "+2)^(" + half + ")";
  }
  return out;
}

bool a_nontrivial(const BaseField& field, unsigned f) {
  require_two_adic_base(field);
  const unsigned w = finite_w(field);
  return w >= f || (field.is_char0() && field.totally_real_2flag());
}

TwoAdicProfile two_adic_profile(const RadicalGroupSpec& g2) {
  const BaseField& k = g2.base();
  TwoAdicProfile p;
  p.f = require_two_power_exponent(g2);
  const u64 n = u64{1} << p.f;
  const unsigned w = finite_w(k);
  p.w = {w, false};
  p.w_prime = k.two_adic_w_prime();
  p.a = schinzel_a(k, p.f);
  p.a_nontrivial = a_nontrivial(k, p.f);
  p.a_in_powers = a_in_nth_powers(g2, p.a, p.f);

  // Rybowicz's delta.
  bool half = p.a_in_powers;
  if (half && w < p.f) {
    if (k.is_char0() && k.totally_real_2flag()) {
      p.one_plus_zeta_in_GK = contains(g2, one_plus_zeta_char0(w));
      half = p.one_plus_zeta_in_GK;
    } else {
      half = false;
    }
  }
  p.delta = half ? Rat(1, 2) : Rat(1);

  // Substitute group H, and m = v_2 |mu_{2-power}(H K^x)|.
  const u64 big = n * 2;
  if (k.is_finite()) {
    const u64 dh = finite_h_order(g2, p);
    if (mu_order(g2, dh) != dh) throw InternalInconsistency("H is not contained in G K^x for " + g2.describe());
    p.h = RadicalGroupSpec::roots_of_unity(k, dh);
    p.h_text = "mu_" + std::to_string(dh);
  } else {
    std::vector<RadicalQ> gens;
    if (w > p.f) {
      gens.push_back(mu_subgroup(g2, 2 * n).generator);
      p.h_text = "mu_" + std::to_string(2 * n) + "(GK^x)";
    } else if (w == p.f && !p.a_in_powers) {
      gens.push_back(mu_subgroup(g2, n).generator);
      p.h_text = "mu_" + std::to_string(n) + "(GK^x)";
    } else if (w == p.f) {
      gens.push_back(one_plus_zeta_char0(w));
      gens.push_back(RadicalQ::zeta(n));
      p.h_text = "<1+zeta_" + std::to_string(u64{1} << w) + ", zeta_" + std::to_string(n) + ">";
    } else if (!half) {
      gens.push_back(mu_subgroup(g2, n).generator);
      p.h_text = "mu_" + std::to_string(n) + "(GK^x)";
    } else {
      gens.push_back(one_plus_zeta_char0(w));
      gens.push_back(mu_subgroup(g2, n).generator);
      p.h_text = "<1+zeta_" + std::to_string(u64{1} << w) + "> mu_" + std::to_string(n) + "(GK^x)";
    }
    for (const auto& h : gens) {
      if (!contains(g2, h)) throw InternalInconsistency("H generator " + h.to_string() + " not in G K^x");
    }
    p.h = RadicalGroupSpec::radicals(k, gens);
  }
  p.m = v2(mu_order(*p.h, big));
  p.m_bar = v2(mu_order(g2, n));
  p.m_prime = static_cast<unsigned>(min_ext(p.w_prime, p.m));

  // Ratio table.
  auto pow2 = [](int e) { return e >= 0 ? Rat(Int(1) << e) : Rat(Int(1), Int(1) << -e); };
  if (p.m == 1) {
    p.table_row = 0;
    p.ratio = 1;
  } else if (w > p.f || (w == p.f && !p.a_in_powers)) {
    p.table_row = 1;
    p.ratio = pow2(2 - static_cast<int>(p.m));
  } else if (w == p.f) {
    p.table_row = 2;
    p.ratio = pow2(1 - static_cast<int>(p.f));
  } else if (!half) {
    p.table_row = 3;
    p.ratio = pow2(2 - static_cast<int>(p.m_prime));
  } else {
    p.table_row = 4;
    if (p.m != std::max(w, p.m_bar)) {
      throw InternalInconsistency("m = " + std::to_string(p.m) + " differs from max(w, m_bar) for " + g2.describe());
    }
    p.ratio = pow2(1 - static_cast<int>(std::min(w, p.m)));
  }
  if (p.ratio > 1) throw InternalInconsistency("two-adic ratio exceeds 1 for " + g2.describe());

  p.index = index_GK_over_K(g2);
  Rat degree = p.ratio * Rat(p.index);
  if (degree.get_den() != 1) throw InternalInconsistency("two-adic degree is not an integer for " + g2.describe());
  p.degree = degree.get_num();

  // Second route: [K(G):K] = delta |G^n K^{xn} : K^{xn}| [K(mu_n(G K^x)) : K].
  Rat ryb = p.delta * Rat(index_nth_powers(g2)) * Rat(to_int(k.cyclotomic_degree(mu_order(g2, n))));
  if (ryb != degree) {
    throw InternalInconsistency("ratio table degree " + p.degree.get_str() + " disagrees with the delta identity " +
                                to_string(ryb) + " for " + g2.describe());
  }
  return p;
}

Rat rybowicz_delta(const RadicalGroupSpec& g2) { return two_adic_profile(g2).delta; }

RadicalGroupSpec substitute_H(const RadicalGroupSpec& g2) { return *two_adic_profile(g2).h; }

Rat ratio_two(const RadicalGroupSpec& g2) { return two_adic_profile(g2).ratio; }

unsigned capital_delta(const RadicalGroupSpec& g, u64 z, std::optional<TwoAdicProfile>* profile) {
  if (profile) profile->reset();
  const BaseField& k = g.base();
  if (k.contains_root_of_unity(4)) return 0;
  const u64 n = g.exponent();
  if (n % 4 != 0) return 0;
  const BaseField kz = k.adjoin_roots_of_unity(z);
  if (kz.contains_root_of_unity(4)) return 0;
  RadicalGroupSpec shifted = g.power(odd_part(n)).over(kz);
  if (shifted.exponent() % 4 != 0) return 0;
  TwoAdicProfile p = two_adic_profile(shifted);
  const Rat r = p.ratio;
  if (r.get_num() != 1) throw InternalInconsistency("two-adic ratio is not a reciprocal power of two");
  unsigned delta = valuation(Int(r.get_den()), 2);
  if (profile) *profile = std::move(p);
  return delta;
}

}  // namespace radx
