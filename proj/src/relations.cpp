#include "radx/relations.hpp"

#include <cmath>
#include <sstream>

#include "radx/cyclotomic.hpp"
#include "radx/errors.hpp"
#include "radx/numeric.hpp"

namespace radx {

const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::CyclotomicMinPoly:
      return "CyclotomicMinPoly";
    case RelationKind::PrimePowerDescent:
      return "PrimePowerDescent";
    case RelationKind::OddIntersection:
      return "OddIntersection";
    case RelationKind::TwoIntersection:
      return "TwoIntersection";
    case RelationKind::TwoPowerInQi:
      return "TwoPowerInQi";
    case RelationKind::SpecialOnePlusZeta:
      return "SpecialOnePlusZeta";
  }
  return "?";
}

namespace {

std::string zeta(u64 m) { return "zeta_" + std::to_string(m); }

// "zeta^a, ..., zeta^b" with short ranges written out.
std::string powers_text(u64 m, u64 from, u64 to) {
  auto term = [m](u64 e) { return e == 0 ? std::string("1") : e == 1 ? zeta(m) : zeta(m) + "^" + std::to_string(e); };
  if (from == to) return term(from);
  if (to == from + 1) return term(from) + ", " + term(to);
  return term(from) + ", ..., " + term(to);
}

std::string span_text(u64 basis, u64 dim, u64 layer) {
  std::ostringstream os;
  std::string k = layer == 1 ? "K" : "K(" + zeta(layer) + ")";
  os << "1" << k;
  if (dim >= 2) os << " + " << zeta(basis) << k;
  if (dim >= 4) os << " + ...";
  if (dim >= 3) os << " + " << zeta(basis) << "^" << dim - 1 << k;
  return os.str();
}

RelationRecord membership(RelationKind kind, const RadicalQ& element, u64 root_order, const std::string& name,
                          u64 basis, u64 dim, u64 layer, const Rat& loss) {
  RelationRecord r;
  r.kind = kind;
  r.element = element;
  r.root_order = root_order;
  r.basis_order = basis;
  r.span_dim = dim;
  r.layer = layer;
  r.loss = loss;
  r.statement = name + " in " + span_text(basis, dim, layer);
  return r;
}

}  // namespace

std::vector<RelationRecord> generate_relations(const AnalysisReport& rep) {
  std::vector<RelationRecord> out;
  const BaseField& k = rep.ctx.g.base();
  const u64 z = rep.ctx.z;
  if (rep.ctx.n == 1) return out;
  const u64 dz = to_u64(rep.cyclotomic_degree_z);

  // zeta_p for p | z, adjoined one prime at a time.
  u64 layer = 1;
  for (u64 p : prime_divisors(z)) {
    const u64 d = k.adjoin_roots_of_unity(layer).cyclotomic_degree(p);
    RelationRecord r;
    r.kind = RelationKind::CyclotomicMinPoly;
    r.p = p;
    r.element = RadicalQ::zeta(p);
    r.root_order = p;
    r.basis_order = p;
    r.span_dim = d;
    r.layer = layer;
    r.loss = Rat(to_int(d), to_int(p));
    if (d == p - 1 && layer == 1 && k.is_char0() && k.z() == 1) {
      r.statement = "1 + " + zeta(p) + (p > 3 ? " + ... + " : " + ") + zeta(p) + "^" + std::to_string(p - 1) + " = 0";
    } else {
      r.statement = powers_text(p, d, p - 1) + " in " + span_text(p, d, layer);
    }
    out.push_back(r);
    layer *= p;
  }

  // Odd roots of unity of G K^x that lie in K(zeta_z).
  for (const auto& part : rep.intersections.odd_parts) {
    const u64 p = part.p;
    if (part.in_z) {
      for (unsigned j = 2; j <= part.excess; ++j) {
        u64 order = ipow(p, j);
        RelationRecord r = membership(RelationKind::PrimePowerDescent, RadicalQ::zeta(order), order, zeta(order), z, dz,
                                      1, Rat(1, to_int(p)));
        r.p = p;
        r.step = j;
        out.push_back(r);
      }
    } else if (part.excess > 0) {
      u64 order = ipow(p, part.base_v + part.excess);
      Int loss_den = to_int(ipow(p, part.excess));
      RelationRecord r =
          membership(RelationKind::OddIntersection, RadicalQ::zeta(order), order, zeta(order), z, dz, 1, Rat(1, loss_den));
      r.p = p;
      r.step = ipow(p, part.excess);
      out.push_back(r);
    }
  }

  // Generators of mu_{2^{f+1}}(G K^x)(G K^x cap sqrt(K^x)) cap K(zeta_z)^x modulo K^x.
  for (const auto& g : rep.intersections.even.generators) {
    std::string name = k.is_finite() ? zeta(g.root_order) : g.element.to_string();
    RelationRecord r = membership(RelationKind::TwoIntersection, g.element, k.is_finite() ? g.root_order : 0, name, z,
                                  dz, 1, Rat(Int(1), g.order));
    r.step = to_u64(g.order);
    out.push_back(r);
  }

  // 2^{-Delta}: relations among 2-power roots of unity over K(zeta_z).
  if (rep.two_adic) {
    const TwoAdicProfile& t = *rep.two_adic;
    const unsigned w = static_cast<unsigned>(t.w.value);
    unsigned top = 2;
    bool special = false;
    switch (t.table_row) {
      case 1:
        top = t.m;
        break;
      case 2:
        top = t.f;
        special = true;
        break;
      case 3:
        top = t.m_prime;
        break;
      case 4:
        top = w;
        special = true;
        break;
      default:
        break;
    }
    for (unsigned s = 3; s <= top; ++s) {
      u64 order = u64{1} << s;
      RelationRecord r = membership(RelationKind::TwoPowerInQi, RadicalQ::zeta(order), order, zeta(order), 4, 2, z,
                                    Rat(1, 2));
      r.p = s;
      out.push_back(r);
    }
    if (special) {
      RadicalQ e = k.is_char0() ? one_plus_zeta4() : RadicalQ();
      RelationRecord r = membership(RelationKind::SpecialOnePlusZeta, e, 0, "1+" + zeta(u64{1} << w), 4, 2, z,
                                    Rat(1, 2));
      r.p = w;
      out.push_back(r);
    }
  }
  return out;
}

Rat explained_ratio(const std::vector<RelationRecord>& rels) {
  Rat r = 1;
  for (const auto& rel : rels) r *= rel.loss;
  return r;
}

namespace {

RelationVerdict verify_finite(const RelationRecord& rel, const BaseField& base) {
  RelationVerdict v;
  v.exact = true;
  const BaseField kl = base.adjoin_roots_of_unity(rel.layer);
  const BaseField span_field = kl.adjoin_roots_of_unity(rel.basis_order);
  std::ostringstream os;
  switch (rel.kind) {
    case RelationKind::CyclotomicMinPoly:
      // The span of 1, ..., zeta_p^{d-1} over K' contains all powers iff [K'(zeta_p):K'] <= d;
      // equality shows that no shorter span works.
      v.ok = kl.cyclotomic_degree(rel.p) == rel.span_dim;
      os << "[" << kl.name() << "(zeta_" << rel.p << "):" << kl.name() << "] = " << kl.cyclotomic_degree(rel.p);
      break;
    case RelationKind::SpecialOnePlusZeta:
      v.ok = span_field.contains_root_of_unity(u64{1} << rel.p) && kl.cyclotomic_degree(4) == rel.span_dim;
      os << "zeta_" << (u64{1} << rel.p) << " in " << span_field.name();
      break;
    default:
      v.ok = span_field.contains_root_of_unity(rel.root_order) &&
             kl.cyclotomic_degree(rel.basis_order) == rel.span_dim;
      os << "zeta_" << rel.root_order << " in " << span_field.name();
      break;
  }
  v.detail = os.str();
  return v;
}

// Check target in span over Q of basis^j * zeta_{layer'}^k, exactly in Q(zeta_M)
// and then numerically at the requested precision.
void verify_member_char0(const RadicalQ& target, const RelationRecord& rel, u64 layer_order, unsigned bits,
                         RelationVerdict& v) {
  auto host = cyclotomic_host(target);
  if (!host) {
    v.ok = false;
    v.detail = target.to_string() + " is not in a cyclotomic field";
    return;
  }
  const u64 m = lcm(lcm(*host, rel.basis_order), layer_order);
  CyclotomicField field(m);
  const u64 layer_dim = euler_phi(layer_order);
  std::vector<std::vector<Rat>> columns;
  std::vector<RadicalQ> members;
  for (u64 j = 0; j < rel.span_dim; ++j) {
    for (u64 i = 0; i < layer_dim; ++i) {
      RadicalQ b = RadicalQ::zeta(rel.basis_order, static_cast<long long>(j)) *
                   RadicalQ::zeta(layer_order, static_cast<long long>(i));
      members.push_back(b);
      columns.push_back(*field.embed(b));
    }
  }
  auto x = solve_rational(columns, *field.embed(target));
  if (!x) {
    v.ok = false;
    v.detail = target.to_string() + " is not in the span";
    return;
  }
  // Independent numerical evaluation from the principal values.
  const mpfr_prec_t prec = bits;
  Complex sum(prec);
  for (std::size_t c = 0; c < members.size(); ++c) {
    if ((*x)[c] == 0) continue;
    sum = sum + scale(radical_value(members[c], prec), (*x)[c]);
  }
  Complex diff = sum - radical_value(target, prec);
  double res = std::pow(2.0, diff.abs().log2_abs());
  v.residual = std::max(v.residual, res);
  v.coefficients = *x;
}

RelationVerdict verify_char0(const RelationRecord& rel, const BaseField& base, unsigned bits) {
  RelationVerdict v;
  v.ok = true;
  const u64 layer_order = lcm(base.z(), rel.layer);
  std::vector<RadicalQ> targets;
  if (rel.kind == RelationKind::CyclotomicMinPoly) {
    for (u64 j = rel.span_dim; j < rel.p; ++j) targets.push_back(RadicalQ::zeta(rel.p, static_cast<long long>(j)));
  } else {
    targets.push_back(rel.element);
  }
  for (const auto& t : targets) {
    verify_member_char0(t, rel, layer_order, bits, v);
    if (!v.ok) return v;
  }
  v.ok = v.residual < 1e-30;
  std::ostringstream os;
  os << "residual " << v.residual << " at " << bits << " bits";
  v.detail = os.str();
  return v;
}

}  // namespace

RelationVerdict verify_relation(const RelationRecord& rel, const BaseField& base, unsigned precision_bits) {
  if (base.is_finite()) return verify_finite(rel, base);
  return verify_char0(rel, base, precision_bits);
}

}  // namespace radx
