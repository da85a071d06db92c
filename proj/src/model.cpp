#include "radx/model.hpp"

#include <sstream>

#include "radx/errors.hpp"

namespace radx {

namespace {

// Lattices of K^x and G K^x in a class space wide enough for G, the extra
// elements, roots of unity of order dividing 2 * (denominators), and the
// field Q(zeta_{z0 * extra_z}).
struct Char0Data {
  ClassSpace space;
  IntMatrix base;
  IntMatrix group;
};

Char0Data char0_data(const RadicalGroupSpec& g, const std::vector<RadicalQ>& extra = {}, u64 scale_multiple = 1,
                     u64 extra_z = 1) {
  const BaseField& f = g.base();
  const u64 z0 = f.z();
  std::vector<RadicalQ> elements = g.generators();
  elements.insert(elements.end(), extra.begin(), extra.end());
  u64 dens = 1;
  for (const auto& a : elements) dens = lcm(dens, a.denominator_lcm());
  u64 scale = lcm(lcm(4 * lcm(z0, extra_z), 2 * dens), scale_multiple);
  ClassSpace space = ClassSpace::covering(elements, scale, z0 * extra_z);
  IntMatrix base = field_lattice(space, f);
  IntMatrix group = hnf(base.concat(space.column_matrix(g.generators())));
  return {std::move(space), std::move(base), std::move(group)};
}

u64 mu_total_char0(const Char0Data& d) {
  const std::size_t t = d.space.twist_index();
  const Int& h = d.group(t, t);
  return to_u64(to_int(d.space.scale()) / h);
}

// ((q - 1) / g) mod a for g | q - 1.
u64 q_minus_1_over_mod(const BaseField& f, u64 g, u64 a) {
  u64 ag = checked_mul(a, g);
  u64 r = (f.q_mod(ag) + ag - 1) % ag;
  return (r / g) % a;
}

void require_char0(const RadicalGroupSpec& g, const char* what) {
  if (!g.base().is_char0()) throw PreconditionError(std::string(what) + " needs a characteristic-0 base");
}

unsigned v2(u64 x) { return x == 0 ? 64 : static_cast<unsigned>(__builtin_ctzll(x)); }

// Multiplicative order of 1 + i in F_{p^2}, p = 3 mod 4.
u64 order_one_plus_i(u64 p) {
  if (p >= (1ULL << 31)) throw CapacityExceeded("characteristic too large for F_{p^2} arithmetic");
  auto mul = [p](std::pair<u64, u64> x, std::pair<u64, u64> y) {
    u64 re = (x.first * y.first % p + p * p - x.second * y.second % p) % p;
    u64 im = (x.first * y.second + x.second * y.first) % p;
    return std::make_pair(re, im);
  };
  auto power = [&](std::pair<u64, u64> b, u64 e) {
    std::pair<u64, u64> r{1, 0};
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  };
  u64 order = p * p - 1;
  for (const auto& [l, k] : factor(order)) {
    for (unsigned i = 0; i < k; ++i) {
      if (power({1, 1}, order / l) == std::make_pair(u64{1}, u64{0})) {
        order /= l;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace

RadicalGroupSpec::RadicalGroupSpec(const BaseField& base, std::vector<RadicalQ> generators, u64 group_order)
    : base_(base), generators_(std::move(generators)), group_order_(group_order) {
  exponent_ = minimal_exponent(*this);
}

RadicalGroupSpec RadicalGroupSpec::radicals(const BaseField& base, std::vector<RadicalQ> generators) {
  if (!base.is_char0()) throw PreconditionError("radical generators need a characteristic-0 base");
  return RadicalGroupSpec(base, std::move(generators), 0);
}

RadicalGroupSpec RadicalGroupSpec::roots_of_unity(const BaseField& base, u64 order) {
  if (order == 0) throw PreconditionError("group order must be positive");
  if (base.is_finite()) {
    if (order % base.characteristic() == 0) {
      throw UnsupportedInstance("characteristic divides the group order " + std::to_string(order));
    }
    return RadicalGroupSpec(base, {}, order);
  }
  return radicals(base, {RadicalQ::zeta(order)});
}

RadicalGroupSpec RadicalGroupSpec::power(u64 k) const {
  if (k == 0) throw PreconditionError("power map needs k >= 1");
  if (base_.is_finite()) return RadicalGroupSpec(base_, {}, group_order_ / gcd(group_order_, k));
  std::vector<RadicalQ> gens;
  for (const auto& a : generators_) gens.push_back(a.pow(static_cast<long long>(k)));
  return RadicalGroupSpec(base_, std::move(gens), 0);
}

RadicalGroupSpec RadicalGroupSpec::over(const BaseField& larger) const {
  if (larger.is_finite() != base_.is_finite()) throw PreconditionError("base change must keep the characteristic");
  return RadicalGroupSpec(larger, generators_, group_order_);
}

std::string RadicalGroupSpec::describe() const {
  std::ostringstream os;
  if (base_.is_finite()) {
    os << "mu_" << group_order_ << " over " << base_.name();
    return os.str();
  }
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i].to_string();
  os << "> over " << base_.name();
  return os.str();
}

u64 minimal_exponent(const RadicalGroupSpec& g) {
  const BaseField& f = g.base();
  if (f.is_finite()) {
    u64 d = g.group_order();
    return d / f.mu_gcd(d);
  }
  if (g.generators().empty()) return 1;
  Char0Data d = char0_data(g);
  FinAbQuotient base(d.space.rank(), d.base);
  u64 n = 1;
  for (const auto& a : g.generators()) n = lcm(n, to_u64(base.element_order(d.space.require_coords(a))));
  return n;
}

Int index_GK_over_K(const RadicalGroupSpec& g) {
  if (g.base().is_finite()) return to_int(g.exponent());
  if (g.generators().empty()) return 1;
  Char0Data d = char0_data(g);
  return lattice_index(d.group, d.base);
}

Int index_nth_powers(const RadicalGroupSpec& g) {
  const BaseField& f = g.base();
  const u64 n = g.exponent();
  if (f.is_finite()) {
    // G^n = mu_a, K^{x n} = mu_b, G^n K^{x n} / K^{x n} has order a / gcd(a, b).
    u64 a = g.group_order() / gcd(g.group_order(), n);
    u64 gn = f.mu_gcd(n);
    u64 b_mod_a = q_minus_1_over_mod(f, gn, a);
    return to_int(a / gcd(a, b_mod_a));
  }
  if (g.generators().empty()) return 1;
  Char0Data d = char0_data(g, {}, 2 * n);
  std::vector<Int> axis = d.space.twist_axis(n);
  IntMatrix big = d.group, small = d.base;
  big.append_column(axis);
  small.append_column(axis);
  return lattice_index(hnf(big), hnf(small));
}

MuSubgroup mu_subgroup(const RadicalGroupSpec& g, u64 m) {
  if (m == 0) throw PreconditionError("mu_m needs m >= 1");
  const BaseField& f = g.base();
  MuSubgroup out;
  if (f.is_finite()) {
    out.order = lcm(gcd(m, g.group_order()), f.mu_gcd(m));
  } else {
    Char0Data d = char0_data(g);
    out.order = gcd(m, mu_total_char0(d));
  }
  out.generator = RadicalQ::zeta(out.order);
  return out;
}

u64 mu_order(const RadicalGroupSpec& g, u64 m) { return mu_subgroup(g, m).order; }

SubgroupDescription sqrt_K_intersection(const RadicalGroupSpec& g) {
  const BaseField& f = g.base();
  SubgroupDescription out;
  if (f.is_finite()) {
    const u64 d = g.group_order();
    const bool doubled = d % 2 == 0 && v2(d) > f.v2_q_minus_1();
    out.index = doubled ? 2 : 1;
    Int cyclic = f.q_minus_1() * out.index;
    if (doubled) out.generators.push_back({RadicalQ(), u64{1} << (f.v2_q_minus_1() + 1), 2});
    out.text = "mu_" + cyclic.get_str();
    return out;
  }
  Char0Data d = char0_data(g);
  IntMatrix twice = d.group;
  for (std::size_t i = 0; i < twice.rows(); ++i)
    for (std::size_t j = 0; j < twice.cols(); ++j) twice(i, j) *= 2;
  IntMatrix lat = lattice_intersection(twice, d.base);
  for (std::size_t i = 0; i < lat.rows(); ++i)
    for (std::size_t j = 0; j < lat.cols(); ++j) lat(i, j) /= 2;
  lat = hnf(lat);
  out.index = lattice_index(lat, d.base);
  std::ostringstream os;
  os << "K^x";
  for (const auto& qg : quotient_generators(lat, d.base)) {
    RadicalQ e = d.space.lift(qg.vector);
    out.generators.push_back({e, 0, qg.order});
    os << " + <" << e.to_string() << ">";
  }
  out.text = os.str();
  return out;
}

SubgroupDescription even_intersection(const RadicalGroupSpec& g, unsigned f2, u64 z) {
  const BaseField& f = g.base();
  const u64 two_power = u64{1} << (f2 + 1);
  SubgroupDescription out;
  if (f.is_finite()) {
    const unsigned vq = f.v2_q_minus_1();
    const unsigned vd = g.group_order() % 2 == 0 ? v2(g.group_order()) : 0;
    const unsigned a2 = std::min<unsigned>(f2 + 1, std::max(vd, vq));
    const unsigned b2 = vq + (vd > vq ? 1 : 0);
    const unsigned vz = f.adjoin_roots_of_unity(z).v2_q_minus_1();
    const unsigned top = std::min(std::max(a2, b2), vz);
    out.index = Int(1) << (top - vq);
    if (top > vq) out.generators.push_back({RadicalQ(), u64{1} << top, out.index});
    out.text = "2-power part of order 2^" + std::to_string(top);
    return out;
  }
  Char0Data d = char0_data(g, {}, two_power, z);
  // G K^x cap sqrt(K^x)
  IntMatrix twice = d.group;
  for (std::size_t i = 0; i < twice.rows(); ++i)
    for (std::size_t j = 0; j < twice.cols(); ++j) twice(i, j) *= 2;
  IntMatrix sq = lattice_intersection(twice, d.base);
  for (std::size_t i = 0; i < sq.rows(); ++i)
    for (std::size_t j = 0; j < sq.cols(); ++j) sq(i, j) /= 2;
  u64 mu2 = gcd(two_power, mu_total_char0(d));
  sq.append_column(d.space.twist_axis(mu2));
  IntMatrix lz = field_lattice(d.space, f.adjoin_roots_of_unity(z));
  IntMatrix x = lattice_intersection(hnf(sq), lz);
  out.index = lattice_index(x, d.base);
  std::ostringstream os;
  os << "K^x";
  for (const auto& qg : quotient_generators(x, d.base)) {
    RadicalQ e = d.space.lift(qg.vector);
    out.generators.push_back({e, 0, qg.order});
    os << " + <" << e.to_string() << ">";
  }
  out.text = os.str();
  return out;
}

RadicalGroupSpec power_part(const RadicalGroupSpec& g, u64 p) {
  const u64 n = g.exponent();
  if (!is_prime(p) || n % p != 0) throw PreconditionError(std::to_string(p) + " does not divide the exponent");
  u64 np = ipow(p, valuation(n, p));
  return g.power(n / np);
}

bool contains(const RadicalGroupSpec& g, const RadicalQ& alpha) { return contains_mod_roots(g, alpha, 1); }

bool contains_mod_roots(const RadicalGroupSpec& g, const RadicalQ& alpha, u64 m) {
  require_char0(g, "class membership");
  Char0Data d = char0_data(g, {alpha}, m);
  IntMatrix lat = d.group;
  if (m > 1) lat = hnf(lat.concat(IntMatrix::from_columns(d.space.rank(), {d.space.twist_axis(m)})));
  return FinAbQuotient(d.space.rank(), lat).member(d.space.require_coords(alpha));
}

RadicalQ one_plus_zeta4() { return RadicalQ(Rat(1, 8), {{2, Rat(1, 2)}}); }

bool one_plus_zeta4_in(const RadicalGroupSpec& g) {
  const BaseField& f = g.base();
  if (f.contains_root_of_unity(4)) throw PreconditionError("1 + zeta_4 test assumes zeta_4 is not in K");
  if (f.is_char0()) return contains(g, one_plus_zeta4());
  u64 ord = order_one_plus_i(f.characteristic());
  return mu_order(g, ord) == ord;
}

}  // namespace radx
