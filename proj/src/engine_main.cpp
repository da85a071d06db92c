#include "radx/engine_main.hpp"

#include "radx/errors.hpp"
#include "radx/relations.hpp"

namespace radx {

namespace {

void check(bool ok, const std::string& what, const RadicalGroupSpec& g) {
  if (!ok) throw InternalInconsistency(what + " fails for " + g.describe());
}

// [K(zeta_z, G_p) : K(zeta_z)] for one component over the shifted base.
Int component_degree(const RadicalGroupSpec& gz, u64 p) {
  const u64 e = gz.exponent();
  if (e == 1) return 1;
  if (p != 2) return odd_profile(gz, p).degree;
  if (e >= 4 && !gz.base().contains_root_of_unity(4)) return two_adic_profile(gz).degree;
  return index_GK_over_K(gz);
}

// v_p(q - 1) for a finite field.
unsigned field_valuation(const BaseField& f, u64 p) {
  unsigned v = 0;
  u64 pk = 1;
  while (pk <= UINT64_MAX / p && f.mu_gcd(pk * p) == pk * p) {
    pk *= p;
    ++v;
  }
  if (pk > UINT64_MAX / p) throw CapacityExceeded("p-adic valuation of q - 1 exceeds the 64-bit range");
  return v;
}

}  // namespace

u64 compute_z(const RadicalGroupSpec& g) {
  const BaseField& k = g.base();
  u64 z = 1;
  for (u64 p : prime_divisors(g.exponent())) {
    if (p == 2) continue;
    if (!k.contains_root_of_unity(p) && mu_order(g, p) == p) z *= p;
  }
  return z;
}

AnalysisContext make_context(const RadicalGroupSpec& g) {
  AnalysisContext c{g, 1, 1, 0, 1, {}};
  c.n = g.exponent();
  if (g.base().is_finite() && c.n % g.base().characteristic() == 0) {
    throw UnsupportedInstance("the characteristic divides n");
  }
  c.f = c.n % 2 == 0 ? valuation(c.n, 2) : 0;
  c.n_prime = odd_part(c.n);
  c.z = compute_z(g);
  for (u64 p : prime_divisors(c.n)) c.split.emplace_back(p, power_part(g, p));
  return c;
}

KneserResult kneser_applies(const RadicalGroupSpec& g) {
  const BaseField& k = g.base();
  const u64 n = g.exponent();
  KneserResult out;
  for (u64 p : prime_divisors(n)) {
    if (p == 2) continue;
    if (!k.contains_root_of_unity(p) && mu_order(g, p) == p) {
      out.applies = false;
      out.prime = p;
      out.witness = "zeta_" + std::to_string(p);
      return out;
    }
  }
  // For odd n a class containing 1 + zeta_4 would have order 4.
  if (n % 2 == 0 && !k.contains_root_of_unity(4) && one_plus_zeta4_in(g)) {
    out.applies = false;
    out.one_plus_zeta4 = true;
    out.witness = "1+zeta_4";
  }
  return out;
}

Int kummer_degree(const RadicalGroupSpec& g) {
  const u64 n = g.exponent();
  if (!g.base().contains_root_of_unity(n)) throw PreconditionError("Kummer degree needs zeta_n in K");
  Int index = index_GK_over_K(g);
  Int nth = index_nth_powers(g);
  check(index == nth, "Kummer identity |GK^x:K^x| = |G^nK^xn:K^xn|", g);
  return index;
}

AnalysisReport analyze(const RadicalGroupSpec& g, bool with_relations) {
  AnalysisReport r{make_context(g), 1, 1, 1, 1, 1, 1, false, {}, {}, std::nullopt, 0, {}, {}, {}};
  const BaseField& k = g.base();
  const u64 n = r.ctx.n;
  const u64 z = r.ctx.z;
  r.index = index_GK_over_K(g);
  r.kneser = kneser_applies(g);
  r.zeta_n_in_K = k.contains_root_of_unity(n);
  if (n == 1) {
    check(r.index == 1, "n = 1 implies G in K^x", g);
    return r;
  }

  // (exactall)
  r.index_nth = index_nth_powers(g);
  r.mu_n = mu_order(g, n);
  const u64 mu_k = k.mu_gcd(n);
  check(r.mu_n % mu_k == 0, "mu_n(K^x) inside mu_n(GK^x)", g);
  check(r.index == r.index_nth * to_int(r.mu_n / mu_k), "index factorization", g);

  const BaseField kz = k.adjoin_roots_of_unity(z);
  r.cyclotomic_degree_z = to_int(k.cyclotomic_degree(z));

  for (const auto& [p, gp] : r.ctx.split) {
    if (p != 2) r.odd_profiles.push_back(odd_profile(gp, p));
  }

  // |mu_{n'}(G K^x) cap K(zeta_z)^x : mu_{n'}(K^x)|, as in the closed formula.
  const u64 n1 = r.ctx.n_prime;
  const u64 mu_odd = mu_order(g, n1);
  const u64 top = kz.mu_gcd(mu_odd);
  const u64 bottom = k.mu_gcd(n1);
  check(top % bottom == 0, "mu_{n'}(K^x) inside the odd intersection", g);
  r.intersections.formula_odd_order = to_int(top / bottom);
  Int odd_order = 1;
  for (u64 p : prime_divisors(n1)) {
    OddIntersectionPart part;
    part.p = p;
    part.in_z = z % p == 0;
    if (k.is_finite()) {
      // G_p K^x is cyclic; its p-part has order p^{max(v_p D, v_p(q-1))}.
      part.base_v = field_valuation(k, p);
      const unsigned full = std::max(valuation(g.group_order(), p), part.base_v);
      part.excess = std::min(full, field_valuation(kz, p)) - part.base_v;
    } else {
      part.base_v = valuation(bottom, p);
      part.excess = valuation(top, p) - part.base_v;
    }
    check(!part.in_z || part.excess >= 1, "zeta_p in the odd intersection for p | z", g);
    odd_order *= to_int(ipow(p, part.excess));
    r.intersections.odd_parts.push_back(part);
  }
  r.intersections.odd_order = odd_order;

  Rat ratio = Rat(r.cyclotomic_degree_z) / Rat(r.intersections.odd_order);
  if (r.ctx.f >= 1) {
    SubgroupDescription formula_even = even_intersection(g, r.ctx.f, z);
    r.intersections.formula_even_order = formula_even.index;
    if (k.is_finite()) {
      const unsigned vq = field_valuation(k, 2);
      const unsigned full = std::max(valuation(g.group_order(), 2), vq);
      const unsigned t = std::min(full, field_valuation(kz, 2));
      SubgroupDescription& e = r.intersections.even;
      e.index = Int(1) << (t - vq);
      if (t > vq) e.generators.push_back({RadicalQ(), u64{1} << t, e.index});
      e.text = "2-power part of order 2^" + std::to_string(t);
    } else {
      r.intersections.even = formula_even;
    }
    r.intersections.even_order = r.intersections.even.index;
    r.Delta = capital_delta(g, z, &r.two_adic);
    ratio /= Rat(r.intersections.even_order);
    ratio /= Rat(Int(1) << r.Delta);
  }
  r.ratio = ratio;
  Rat degree = ratio * Rat(r.index);
  check(degree.get_den() == 1, "integrality of ratio * index", g);
  r.degree = degree.get_num();

  // Split check: index and degree both factor over the prime components.
  Int index_product = 1, degree_product = r.cyclotomic_degree_z;
  for (const auto& [p, gp] : r.ctx.split) {
    SplitComponent c;
    c.p = p;
    c.index = index_GK_over_K(gp);
    RadicalGroupSpec gz = gp.over(kz);
    c.index_over_kz = index_GK_over_K(gz);
    c.degree_over_kz = component_degree(gz, p);
    index_product *= c.index;
    degree_product *= c.degree_over_kz;
    r.split.push_back(c);
  }
  check(index_product == r.index, "index multiplicativity over the components", g);
  if (degree_product != r.degree) {
    throw InternalInconsistency("formula degree " + r.degree.get_str() + " disagrees with the component degree " +
                                degree_product.get_str() + " for " + g.describe());
  }

  if (r.kneser.applies) {
    check(r.ratio == 1, "Kneser's theorem (degree = index)", g);
  } else {
    check(r.ratio < 1, "necessity of the Kneser conditions", g);
  }
  if (r.zeta_n_in_K) check(kummer_degree(g) == r.degree, "Kummer degree", g);
  check(divisibility_check(r), "divisibility of z * degree", g);
  if (k.kind() == FieldKind::Rationals && n % 2 == 1) {
    Rat expected(to_int(euler_phi(z)), to_int(z));
    expected.canonicalize();
    check(r.ratio == expected, "ratio = phi(z)/z over Q for odd n", g);
  }

  if (with_relations) r.relations = generate_relations(r);
  return r;
}

Rat ratio_main(const RadicalGroupSpec& g) { return analyze(g, false).ratio; }

Int degree_main(const RadicalGroupSpec& g) { return analyze(g, false).degree; }

bool divisibility_check(const AnalysisReport& r) {
  Int lhs = to_int(r.ctx.z) * r.degree;
  Int rhs = r.cyclotomic_degree_z * r.index;
  return rhs % lhs == 0;
}

bool necessity_scan(const std::vector<RadicalGroupSpec>& corpus) {
  for (const auto& g : corpus) {
    if (kneser_applies(g).applies) continue;
    try {
      if (ratio_main(g) == 1) return false;
    } catch (const InternalInconsistency&) {
      return false;
    }
  }
  return true;
}

}  // namespace radx
