#include "radx/cyclotomic.hpp"

#include "radx/errors.hpp"

namespace radx {

namespace {

int moebius(u64 n) {
  int s = 1;
  for (const auto& [p, k] : factor(n)) {
    if (k > 1) return 0;
    s = -s;
  }
  return s;
}

std::vector<Int> times_xd_minus_1(const std::vector<Int>& p, u64 d) {
  std::vector<Int> out(p.size() + d, Int(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] += p[i];
    out[i] -= p[i];
  }
  return out;
}

std::vector<Int> div_xd_minus_1(const std::vector<Int>& p, u64 d) {
  const std::size_t deg = p.size() - 1;
  std::vector<Int> q(deg - d + 1, Int(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = p[i + d] + (i + d < q.size() ? q[i + d] : Int(0));
  }
  return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(u64 m) {
  if (m == 0) throw PreconditionError("cyclotomic polynomial needs m >= 1");
  std::vector<Int> p{Int(1)};
  std::vector<u64> divide;
  for (u64 d : divisors(m)) {
    int mu = moebius(m / d);
    if (mu == 1) p = times_xd_minus_1(p, d);
    if (mu == -1) divide.push_back(d);
  }
  for (u64 d : divide) p = div_xd_minus_1(p, d);
  return p;
}

CyclotomicField::CyclotomicField(u64 m, u64 max_dim) : m_(m) {
  if (euler_phi(m) > max_dim) throw CapacityExceeded("Q(zeta_" + std::to_string(m) + ") exceeds the dimension cap");
  phi_ = cyclotomic_polynomial(m);
}

CyclotomicField::Elem CyclotomicField::one() const {
  Elem e = zero();
  e[0] = 1;
  return e;
}

CyclotomicField::Elem CyclotomicField::reduce(std::vector<Rat> poly) const {
  const std::size_t d = dim();
  for (std::size_t k = poly.size(); k-- > d;) {
    if (poly[k] == 0) continue;
    Rat c = poly[k];
    for (std::size_t j = 0; j <= d; ++j) poly[k - d + j] -= c * Rat(phi_[j]);
  }
  poly.resize(d, Rat(0));
  return poly;
}

CyclotomicField::Elem CyclotomicField::zeta_power(long long k) const {
  long long mm = static_cast<long long>(m_);
  long long r = ((k % mm) + mm) % mm;
  std::vector<Rat> poly(static_cast<std::size_t>(r) + 1, Rat(0));
  poly[r] = 1;
  return reduce(std::move(poly));
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  std::vector<Rat> poly(a.size() + b.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) poly[i + j] += a[i] * b[j];
  }
  return reduce(std::move(poly));
}

CyclotomicField::Elem CyclotomicField::scale(const Elem& a, const Rat& r) const {
  Elem out(a);
  for (auto& c : out) c *= r;
  return out;
}

CyclotomicField::Elem CyclotomicField::sqrt_prime(u64 p) const {
  if (p == 2) return add(zeta_power(static_cast<long long>(m_ / 8)), zeta_power(-static_cast<long long>(m_ / 8)));
  // Gauss sum g_p with g_p^2 = p* = (-1)^{(p-1)/2} p.
  Elem g = zero();
  const long long step = static_cast<long long>(m_ / p);
  for (u64 a = 1; a < p; ++a) {
    bool residue = pow_mod(a, (p - 1) / 2, p) == 1;
    Elem t = zeta_power(step * static_cast<long long>(a));
    g = residue ? add(g, t) : sub(g, t);
  }
  if (p % 4 == 1) return g;
  // p = 3 mod 4: g_p = i sqrt(p), so sqrt(p) = -i g_p.
  return scale(mul(zeta_power(static_cast<long long>(m_ / 4)), g), Rat(-1));
}

std::optional<CyclotomicField::Elem> CyclotomicField::embed(const RadicalQ& a) const {
  auto host = cyclotomic_host(a);
  if (!host || m_ % *host != 0) return std::nullopt;
  const Rat t = a.twist();
  Rat k = t * Rat(to_int(m_));
  Elem out = zeta_power(k.get_num().get_si());
  Rat scalar = 1;
  for (const auto& [p, e] : a.exps()) {
    Int fl = floor_of(e);
    scalar *= rat_pow(Rat(to_int(p)), fl.get_si());
    if (e - Rat(fl) != 0) out = mul(out, sqrt_prime(p));
  }
  return scale(out, scalar);
}

std::optional<u64> cyclotomic_host(const RadicalQ& a) {
  u64 m = to_u64(Int(a.twist().get_den()));
  for (const auto& [p, e] : a.exps()) {
    Int den = e.get_den();
    if (den == 1) continue;
    if (den != 2) return std::nullopt;
    if (p == 2) {
      m = lcm(m, 8);
    } else {
      m = lcm(m, p);
      if (p % 4 == 3) m = lcm(m, 4);
    }
  }
  return m;
}

std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<Rat>>& columns,
                                               const std::vector<Rat>& target) {
  const std::size_t rows = target.size(), cols = columns.size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = columns[j][i];
    a[i][cols] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols] / a[i][pivot_col[i]];
  return x;
}

}  // namespace radx
