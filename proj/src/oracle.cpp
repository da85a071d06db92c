#include "radx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "radx/cyclotomic.hpp"
#include "radx/errors.hpp"
#include "radx/numeric.hpp"
#include "radx/upoly.hpp"

namespace radx {

namespace {

// Krylov primes lie just below 2^31 so products fit in 64 bits.
constexpr u64 kKrylovPrimeStart = (u64{1} << 31) - 1;

u64 inv_mod(u64 a, u64 ell) { return pow_mod(a % ell, ell - 2, ell); }

u64 residue(const Int& v, u64 ell) {
  Int r = v % to_int(ell);
  if (r < 0) r += to_int(ell);
  return to_u64(r);
}

// A monomial zeta_L^a prod y_j^{b_j}.
struct Monomial {
  u64 a = 0;
  std::vector<u64> b;
};

// Q(zeta_L) (x) Q[y_j]/(y_j^{d_j} - p_j), stored redundantly on the basis
// x^k y^e with 0 <= k < L (the ring Z[x]/(x^L - 1) in the first factor);
// the canonical form reduces each x-block modulo Phi_L.
class Algebra {
 public:
  Algebra(u64 level, std::vector<u64> primes, std::vector<u64> degs)
      : L_(level), primes_(std::move(primes)), degs_(std::move(degs)) {
    blocks_ = 1;
    for (u64 d : degs_) blocks_ *= d;
    phi_ = euler_phi(L_);
    auto cyc = cyclotomic_polynomial(L_);
    // x^k mod Phi_L for 0 <= k < L.
    red_.assign(L_, std::vector<Int>(phi_, Int(0)));
    std::vector<Int> cur(phi_, Int(0));
    cur[0] = 1;
    for (u64 k = 0; k < L_; ++k) {
      red_[k] = cur;
      // Multiply by x and reduce with the monic Phi_L.
      Int top = cur[phi_ - 1];
      for (u64 i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (u64 i = 0; i < phi_; ++i) cur[i] -= top * cyc[i];
    }
  }

  u64 level() const { return L_; }
  std::size_t redundant_size() const { return L_ * blocks_; }
  std::size_t dim() const { return phi_ * blocks_; }

  // Destination index and prime-power multiplier for v -> m * v.
  void monomial_action(const Monomial& m, std::vector<std::size_t>& dest, std::vector<Int>& mult) const {
    const std::size_t n = redundant_size();
    dest.assign(n, 0);
    mult.assign(n, Int(1));
    for (std::size_t idx = 0; idx < n; ++idx) {
      u64 k = idx % L_;
      std::size_t rest = idx / L_;
      std::size_t out_block = 0, stride = 1;
      Int factor = 1;
      for (std::size_t j = 0; j < degs_.size(); ++j) {
        u64 e = rest % degs_[j];
        rest /= degs_[j];
        u64 s = e + m.b[j];
        if (s >= degs_[j]) {
          s -= degs_[j];
          factor *= to_int(primes_[j]);
        }
        out_block += s * stride;
        stride *= degs_[j];
      }
      dest[idx] = (k + m.a) % L_ + L_ * out_block;
      mult[idx] = factor;
    }
  }

  std::vector<u64> canon_mod(const std::vector<u64>& v, const std::vector<std::vector<u64>>& red_mod, u64 ell) const {
    std::vector<u64> out(dim(), 0);
    for (std::size_t blk = 0; blk < blocks_; ++blk) {
      for (u64 k = 0; k < L_; ++k) {
        u64 c = v[blk * L_ + k];
        if (c == 0) continue;
        const auto& r = red_mod[k];
        for (u64 i = 0; i < phi_; ++i)
          if (r[i]) out[blk * phi_ + i] = (out[blk * phi_ + i] + c * r[i]) % ell;
      }
    }
    return out;
  }

  std::vector<Int> canon(const std::vector<Int>& v) const {
    std::vector<Int> out(dim(), Int(0));
    for (std::size_t blk = 0; blk < blocks_; ++blk)
      for (u64 k = 0; k < L_; ++k) {
        const Int& c = v[blk * L_ + k];
        if (c == 0) continue;
        for (u64 i = 0; i < phi_; ++i)
          if (red_[k][i] != 0) out[blk * phi_ + i] += c * red_[k][i];
      }
    return out;
  }

  std::vector<std::vector<u64>> red_mod(u64 ell) const {
    std::vector<std::vector<u64>> out(L_, std::vector<u64>(phi_));
    for (u64 k = 0; k < L_; ++k)
      for (u64 i = 0; i < phi_; ++i) out[k][i] = residue(red_[k][i], ell);
    return out;
  }

  // Redundant index of the canonical basis element x^i y^blk.
  std::size_t canonical_to_redundant(std::size_t c) const { return (c / phi_) * L_ + c % phi_; }

 private:
  u64 L_;
  std::vector<u64> primes_, degs_;
  std::size_t blocks_ = 1;
  u64 phi_ = 1;
  std::vector<std::vector<Int>> red_;
};

// The generators of K(G) over Q, normalised to monomials with exponents in [0,1).
struct Embedding {
  u64 L = 1;
  std::vector<u64> primes, degs;
  std::vector<RadicalQ> normalized;
  std::vector<Monomial> monomials;
  u64 base_degree = 1;  // [K:Q]
};

Embedding embed(const RadicalGroupSpec& g) {
  if (!g.base().is_char0()) throw PreconditionError("the algebra oracle needs characteristic 0");
  std::vector<RadicalQ> gens = g.generators();
  Embedding e;
  if (g.base().kind() == FieldKind::Cyclotomic && g.base().z() > 1) {
    gens.push_back(RadicalQ::zeta(g.base().z()));
    e.base_degree = euler_phi(g.base().z());
  }
  std::map<u64, u64> deg_of;
  for (const auto& a : gens) {
    Rat t = floor_frac(a.twist());
    e.L = lcm(e.L, to_u64(Int(t.get_den())));
    std::map<u64, Rat> exps;
    for (const auto& [p, x] : a.exps()) {
      Rat f = floor_frac(x);
      if (f == 0) continue;
      exps[p] = f;
      u64 d = to_u64(Int(f.get_den()));
      deg_of[p] = lcm(deg_of.count(p) ? deg_of[p] : 1, d);
    }
    e.normalized.emplace_back(t, exps);
  }
  for (const auto& [p, d] : deg_of) {
    e.primes.push_back(p);
    e.degs.push_back(d);
  }
  for (const auto& a : e.normalized) {
    Monomial m;
    Rat ta = a.twist() * to_int(e.L);
    m.a = to_u64(Int(ta.get_num()));
    for (std::size_t j = 0; j < e.primes.size(); ++j) {
      Rat bj = a.exp(e.primes[j]) * to_int(e.degs[j]);
      m.b.push_back(to_u64(Int(bj.get_num())));
    }
    e.monomials.push_back(m);
  }
  return e;
}

u64 dimension_of(const Embedding& e) {
  u64 dim = euler_phi(e.L);
  for (u64 d : e.degs) dim = checked_mul(dim, d);
  return dim;
}

// theta = sum c_i m_i acting on redundant vectors.
struct Theta {
  std::vector<u64> coeffs;
  std::vector<std::vector<std::size_t>> dest;
  std::vector<std::vector<Int>> mult;
};

std::vector<u64> theta_mul_mod(const Theta& th, const std::vector<std::vector<u64>>& mult_mod,
                               const std::vector<u64>& v, u64 ell) {
  std::vector<u64> out(v.size(), 0);
  for (std::size_t i = 0; i < th.coeffs.size(); ++i) {
    const auto& dst = th.dest[i];
    const auto& mm = mult_mod[i];
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
      if (v[idx] == 0) continue;
      out[dst[idx]] = (out[dst[idx]] + v[idx] * mm[idx]) % ell;
    }
  }
  return out;
}

std::vector<Int> theta_mul(const Theta& th, const std::vector<Int>& v) {
  std::vector<Int> out(v.size(), Int(0));
  for (std::size_t i = 0; i < th.coeffs.size(); ++i)
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
      if (v[idx] == 0) continue;
      out[th.dest[i][idx]] += v[idx] * th.mult[i][idx] * static_cast<unsigned long>(th.coeffs[i]);
    }
  return out;
}

std::vector<std::vector<u64>> multipliers_mod(const Theta& th, u64 ell) {
  std::vector<std::vector<u64>> out(th.coeffs.size());
  for (std::size_t i = 0; i < th.coeffs.size(); ++i) {
    out[i].resize(th.mult[i].size());
    for (std::size_t idx = 0; idx < th.mult[i].size(); ++idx)
      out[i][idx] = residue(th.mult[i][idx] * static_cast<unsigned long>(th.coeffs[i]), ell);
  }
  return out;
}

// Monic minimal polynomial of theta modulo ell via incremental elimination of
// the Krylov sequence 1, theta, theta^2, ...
ModPoly min_poly_mod(const Algebra& alg, const Theta& th, u64 ell) {
  const auto red = alg.red_mod(ell);
  const auto mm = multipliers_mod(th, ell);
  const std::size_t n = alg.dim();
  std::vector<std::vector<u64>> rows, combos;
  std::vector<std::size_t> pivots;
  std::vector<u64> power(alg.redundant_size(), 0);
  power[0] = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<u64> v = alg.canon_mod(power, red, ell);
    std::vector<u64> combo(n + 1, 0);
    combo[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      u64 c = v[pivots[r]];
      if (c == 0) continue;
      u64 neg = ell - c;
      for (std::size_t i = 0; i < n; ++i)
        if (rows[r][i]) v[i] = (v[i] + neg * rows[r][i]) % ell;
      for (std::size_t i = 0; i <= k; ++i)
        if (combos[r][i]) combo[i] = (combo[i] + neg * combos[r][i]) % ell;
    }
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i]) {
        piv = i;
        break;
      }
    if (piv == n) {
      combo.resize(k + 1);
      return combo;
    }
    u64 inv = inv_mod(v[piv], ell);
    for (auto& x : v) x = x * inv % ell;
    for (auto& x : combo) x = x * inv % ell;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(piv);
    power = theta_mul_mod(th, mm, power, ell);
  }
  throw InternalInconsistency("Krylov sequence did not become dependent within the algebra dimension");
}

// Characteristic polynomial of a square matrix modulo ell (Hessenberg method).
ModPoly charpoly_mod(std::vector<std::vector<u64>> h, u64 ell) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    u64 inv = inv_mod(h[j + 1][j], ell);
    for (std::size_t k = j + 2; k < n; ++k) {
      u64 u = h[k][j] * inv % ell;
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = (h[k][c] + (ell - u) * h[j + 1][c]) % ell;
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + u * h[r][k]) % ell;
    }
  }
  std::vector<ModPoly> p(n + 1);
  p[0] = ModPoly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    ModPoly lin{(ell - h[m - 1][m - 1]) % ell, 1};
    upoly::trim(lin);
    ModPoly cur = upoly::mul(lin, p[m - 1], ell);
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % ell;
      u64 c = t * h[m - i - 1][m - 1] % ell;
      if (c == 0) continue;
      ModPoly term = p[m - i - 1];
      for (auto& x : term) x = x * c % ell;
      cur = upoly::sub(cur, term, ell);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

// Multiplication-by-theta matrix on the canonical basis, modulo ell.
std::vector<std::vector<u64>> theta_matrix_mod(const Algebra& alg, const Theta& th, u64 ell) {
  const auto red = alg.red_mod(ell);
  const auto mm = multipliers_mod(th, ell);
  const std::size_t n = alg.dim();
  std::vector<std::vector<u64>> m(n, std::vector<u64>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<u64> e(alg.redundant_size(), 0);
    e[alg.canonical_to_redundant(c)] = 1;
    auto col = alg.canon_mod(theta_mul_mod(th, mm, e, ell), red, ell);
    for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
  }
  return m;
}

u64 prev_prime(u64 n) {
  do {
    --n;
  } while (!is_prime(n));
  return n;
}

ZPoly symmetric_lift(const std::vector<Int>& residues, const Int& modulus) {
  ZPoly out(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    Int r = residues[i];
    if (2 * r > modulus) r -= modulus;
    out[i] = r;
  }
  return out;
}

bool annihilates(const Algebra& alg, const Theta& th, const ZPoly& mu) {
  std::vector<Int> r(alg.redundant_size(), Int(0));
  for (std::size_t j = mu.size(); j-- > 0;) {
    r = theta_mul(th, r);
    r[0] += mu[j];
  }
  for (const auto& c : alg.canon(r))
    if (c != 0) return false;
  return true;
}

// Exact minimal polynomial over Z by Chinese remaindering.
ZPoly min_poly(const Algebra& alg, const Theta& th, double log2_bound_per_degree) {
  u64 ell = kKrylovPrimeStart;
  std::size_t deg = 0;
  std::vector<Int> res;
  Int modulus = 1;
  ZPoly previous;
  for (int attempts = 0; attempts < 100000; ++attempts) {
    ell = prev_prime(ell);
    ModPoly m = min_poly_mod(alg, th, ell);
    std::size_t d = m.size() - 1;
    if (d < deg) continue;  // unlucky prime
    if (d > deg) {
      deg = d;
      res.assign(d + 1, Int(0));
      modulus = 1;
      previous.clear();
    }
    // CRT update.
    const Int lm = to_int(ell);
    const u64 minv = inv_mod(residue(modulus, ell), ell);
    for (std::size_t i = 0; i <= d; ++i) {
      u64 r = residue(res[i], ell);
      u64 t = (m[i] + ell - r) % ell * minv % ell;
      res[i] += modulus * to_int(t);
    }
    modulus *= lm;
    ZPoly cand = symmetric_lift(res, modulus);
    const double bound_bits = static_cast<double>(deg) * log2_bound_per_degree + 2.0;
    const bool past_bound = static_cast<double>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) > bound_bits + 1.0;
    if (cand == previous || past_bound) {
      if (annihilates(alg, th, cand)) return cand;
      if (past_bound) throw InternalInconsistency("reconstructed minimal polynomial does not annihilate theta");
    }
    previous = std::move(cand);
  }
  throw InternalInconsistency("minimal polynomial reconstruction did not converge");
}

double log2_abs(const Int& v) {
  if (v == 0) return -1e300;
  long ex = 0;
  double d = mpz_get_d_2exp(&ex, v.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(ex);
}

Complex horner(const ZPoly& h, const Complex& x) {
  const mpfr_prec_t prec = x.prec();
  Complex r(prec);
  for (std::size_t j = h.size(); j-- > 0;) {
    r = r * x;
    r.re = r.re + Real::from_int(h[j], prec);
  }
  return r;
}

// The unique factor with h(alpha) = 0 under adaptive precision.
const ZPoly& select_factor(const std::vector<ZPoly>& factors, const Embedding& e, const std::vector<u64>& coeffs,
                           const OracleOptions& opt) {
  for (mpfr_prec_t prec = opt.precision_start; prec <= opt.precision_max; prec *= 2) {
    const mpfr_prec_t work = prec + 64;
    Complex alpha(work);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      alpha = alpha + scale(radical_value(e.normalized[i], work), to_int(coeffs[i]));
    const double log_a = std::max(0.0, alpha.abs().log2_abs());
    std::vector<std::size_t> hits;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const ZPoly& h = factors[f];
      // log2 of sum |h_j| |alpha|^j, an a-priori scale for the rounding error.
      double s = -1e300;
      for (std::size_t j = 0; j < h.size(); ++j) {
        double t = log2_abs(h[j]) + log_a * static_cast<double>(j);
        s = std::max(s, t) + std::log2(1.0 + std::exp2(std::min(s, t) - std::max(s, t)));
      }
      const double slack = 2.0 * std::log2(static_cast<double>(h.size()) + 2.0) + 24.0;
      const double threshold = s + slack - static_cast<double>(prec);
      if (horner(h, alpha).abs().log2_abs() <= threshold) hits.push_back(f);
    }
    if (hits.size() == 1) return factors[hits[0]];
  }
  throw CapacityExceeded("precision ceiling reached without separating the factors");
}

}  // namespace

Int oracle_degree_fq(u64 q, u64 D) {
  auto pp = prime_power(q);
  if (!pp) throw PreconditionError("q must be a prime power");
  if (D == 0) throw PreconditionError("D must be positive");
  if (D % pp->first == 0) throw UnsupportedInstance("the characteristic divides D");
  u64 m = lcm(D, q - 1);
  if (m == 1) return 1;
  return to_int(multiplicative_order(q % m, m));
}

u64 oracle_dimension(const RadicalGroupSpec& g) { return dimension_of(embed(g)); }

OracleResult oracle_degree_q(const RadicalGroupSpec& g, const OracleOptions& opt) {
  Embedding e = embed(g);
  OracleResult out;
  out.dimension = dimension_of(e);
  if (out.dimension > opt.max_dim)
    throw CapacityExceeded("algebra dimension " + std::to_string(out.dimension) + " exceeds the cap " +
                           std::to_string(opt.max_dim));
  Algebra alg(e.L, e.primes, e.degs);

  std::vector<std::vector<std::size_t>> dest(e.monomials.size());
  std::vector<std::vector<Int>> mult(e.monomials.size());
  for (std::size_t i = 0; i < e.monomials.size(); ++i) alg.monomial_action(e.monomials[i], dest[i], mult[i]);
  // |m_i| under the distinguished embedding, for the coefficient bound.
  std::vector<double> absval(e.monomials.size(), 1.0);
  for (std::size_t i = 0; i < e.monomials.size(); ++i)
    for (std::size_t j = 0; j < e.primes.size(); ++j)
      absval[i] *= std::pow(static_cast<double>(e.primes[j]),
                            static_cast<double>(e.monomials[i].b[j]) / static_cast<double>(e.degs[j]));

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<u64> coef(1, 7);
  u64 best = 0;
  unsigned best_count = 0;
  for (unsigned draw = 0; draw < opt.max_draws && best_count < opt.stable_draws; ++draw) {
    Theta th{{}, dest, mult};
    double b = 0;
    for (std::size_t i = 0; i < e.monomials.size(); ++i) {
      th.coeffs.push_back(coef(rng));
      b += static_cast<double>(th.coeffs.back()) * absval[i];
    }
    u64 degree = 1;
    if (!th.coeffs.empty()) {
      // Roots of mu are conjugates of theta, so |coefficient| <= (1 + B)^deg.
      ZPoly mu = min_poly(alg, th, std::log2(1.0 + b * 1.0001) + 1e-9);
      if (mu.size() - 1 > alg.dim()) throw InternalInconsistency("minimal polynomial exceeds the algebra dimension");
      // mu(theta) = 0 exactly, so mu divides the characteristic polynomial;
      // recheck modulo one prime, together with squarefreeness.
      bool squarefree = false;
      u64 ell = kKrylovPrimeStart;
      for (int tries = 0; tries < 8 && !squarefree; ++tries) {
        ell = prev_prime(ell);
        squarefree = upoly::is_squarefree(upoly::reduce(mu, ell), ell);
      }
      if (!squarefree) throw InternalInconsistency("minimal polynomial is not squarefree");
      {
        ModPoly chi = charpoly_mod(theta_matrix_mod(alg, th, ell), ell);
        if (!upoly::divrem(chi, upoly::reduce(mu, ell), ell).second.empty())
          throw InternalInconsistency("minimal polynomial does not divide the characteristic polynomial");
      }
      upoly::FactorOptions fo;
      fo.recombination_budget = opt.recombination_budget;
      fo.seed = opt.seed + draw;
      auto factors = upoly::factor_monic_squarefree(mu, fo);
      if (!factors) throw CapacityExceeded("factor recombination budget exceeded");
      degree = select_factor(*factors, e, th.coeffs, opt).size() - 1;
    }
    out.draw_degrees.push_back(degree);
    if (degree > best) {
      best = degree;
      best_count = 1;
    } else if (degree == best) {
      ++best_count;
    }
    if (th.coeffs.empty()) best_count = opt.stable_draws;
  }
  if (best_count < opt.stable_draws) throw CapacityExceeded("degree did not stabilise within the draw limit");
  if (best % e.base_degree != 0) throw InternalInconsistency("field degree not divisible by the base degree");
  out.degree = to_int(best / e.base_degree);
  return out;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Match:
      return "match";
    case VerdictKind::Mismatch:
      return "mismatch";
    case VerdictKind::Skipped:
      return "skipped";
  }
  return "?";
}

Verdict compare(const RadicalGroupSpec& g, const OracleOptions& opt) {
  Verdict v;
  try {
    if (g.base().is_finite()) {
      v.oracle = oracle_degree_fq(ipow(g.base().prime(), static_cast<unsigned>(g.base().degree())), g.group_order());
    } else {
      v.oracle = oracle_degree_q(g, opt).degree;
    }
  } catch (const CapacityExceeded& ex) {
    v.kind = VerdictKind::Skipped;
    v.reason = ex.what();
    return v;
  } catch (const UnsupportedInstance& ex) {
    v.kind = VerdictKind::Skipped;
    v.reason = ex.what();
    return v;
  }
  try {
    AnalysisReport r = analyze(g, false);
    v.engine = r.degree;
    v.kind = v.engine == v.oracle ? VerdictKind::Match : VerdictKind::Mismatch;
    if (v.kind == VerdictKind::Mismatch) {
      v.reason = "engine degree " + to_string(v.engine) + " differs from oracle degree " + to_string(v.oracle);
      v.report = std::move(r);
    }
  } catch (const InternalInconsistency& ex) {
    v.kind = VerdictKind::Mismatch;
    v.reason = std::string("engine cross-check failed: ") + ex.what();
  } catch (const CapacityExceeded& ex) {
    v.kind = VerdictKind::Skipped;
    v.reason = ex.what();
  }
  return v;
}

}  // namespace radx
