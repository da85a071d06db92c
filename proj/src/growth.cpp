#include "radx/growth.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "radx/engine_main.hpp"
#include "radx/errors.hpp"

namespace radx {

namespace {

u64 fnv1a(const std::string& text) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool parse_u64(const std::string& s, u64& out) {
  if (s.empty() || s.size() > 20) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  try {
    out = std::stoull(s);
  } catch (...) {
    return false;
  }
  return true;
}

bool parse_positive_int(const std::string& s, Int& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  out = Int(s);
  return out > 0;
}

// Ratios for N = 1..Nmax, indexed by N.
std::vector<Rat> ratios(const GrowthFamily& fam, u64 Nmax, GrowthCache* cache) {
  std::vector<Rat> out(Nmax + 1, Rat(0));
  for (const auto& row : ratio_table(fam, Nmax, cache)) out[row.N] = row.ratio;
  return out;
}

}  // namespace

GrowthFamily::GrowthFamily(FamilyKind kind, std::vector<Rat> values, BaseField base)
    : kind_(kind), values_(std::move(values)), base_(std::move(base)) {
  if (!base_.is_char0()) throw UnsupportedInstance("growth families need a base field of characteristic 0");
  for (auto& v : values_) {
    v.canonicalize();
    if (v == 0) throw PreconditionError("growth family values must be nonzero");
  }
}

GrowthFamily GrowthFamily::kummer(std::vector<Rat> gamma, BaseField base) {
  return GrowthFamily(FamilyKind::Kummer, std::move(gamma), std::move(base));
}

GrowthFamily GrowthFamily::compatible(std::vector<Rat> templates, BaseField base) {
  return GrowthFamily(FamilyKind::Compatible, std::move(templates), std::move(base));
}

std::string GrowthFamily::key() const {
  std::string s = kind_ == FamilyKind::Kummer ? "kummer" : "compatible";
  s += ";" + base_.name();
  for (const auto& v : values_) s += ";" + to_string(v);
  return s;
}

u64 GrowthFamily::hash() const { return fnv1a(key()); }

RadicalGroupSpec family_group(const GrowthFamily& fam, u64 N) {
  if (N == 0) throw PreconditionError("N must be positive");
  std::vector<RadicalQ> gens;
  if (fam.kind() == FamilyKind::Kummer && N > 1) gens.push_back(RadicalQ::zeta(N));
  for (const auto& v : fam.values()) gens.push_back(canonicalize(v, N));
  return RadicalGroupSpec::radicals(fam.base(), gens);
}

void check_family_hypotheses(const GrowthFamily& fam, u64 Nmax) {
  if (fam.kind() != FamilyKind::Compatible) return;
  for (const auto& v : fam.values())
    if (!canonicalize(v, 1).as_rational()) throw PreconditionError("R_1 is not inside K^x");
  for (u64 N = 1; N <= Nmax; ++N) {
    for (u64 M : divisors(N)) {
      for (const auto& v : fam.values())
        if (canonicalize(v, N).pow(static_cast<long long>(M)) != canonicalize(v, N / M))
          throw PreconditionError("R_N^M differs from R_{N/M} at N = " + std::to_string(N));
    }
    Int bound = 1;
    for (std::size_t i = 0; i < fam.values().size(); ++i) bound *= to_int(N);
    if (bound % index_GK_over_K(family_group(fam, N)) != 0)
      throw PreconditionError("|R_N K^x : K^x| does not divide N^c at N = " + std::to_string(N));
  }
}

GrowthCache::GrowthCache(std::string path, std::ostream* warnings) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string h, n, idx, deg, extra;
    u64 hv = 0, nv = 0;
    Int iv, dv;
    if (!(fields >> h >> n >> idx >> deg) || (fields >> extra) || !parse_u64(h, hv) || !parse_u64(n, nv) ||
        !parse_positive_int(idx, iv) || !parse_positive_int(deg, dv)) {
      ++corrupt_;
      if (warnings) *warnings << "warning: skipping corrupt cache line " << lineno << " in " << path_ << "\n";
      continue;
    }
    rows_[{hv, nv}] = {iv, dv};
  }
}

std::optional<std::pair<Int, Int>> GrowthCache::lookup(u64 hash, u64 N) const {
  std::lock_guard<std::mutex> guard(lock_);
  auto it = rows_.find({hash, N});
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

void GrowthCache::store(u64 hash, u64 N, const Int& index, const Int& degree) {
  std::lock_guard<std::mutex> guard(lock_);
  rows_[{hash, N}] = {index, degree};
  const std::string line = std::to_string(hash) + " " + std::to_string(N) + " " + to_string(index) + " " +
                           to_string(degree) + "\n";
  std::ofstream out(path_, std::ios::app);
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
}

std::vector<GrowthRow> ratio_table(const GrowthFamily& fam, u64 Nmax, GrowthCache* cache) {
  if (Nmax == 0) throw PreconditionError("Nmax must be positive");
  std::vector<GrowthRow> rows;
  const u64 h = fam.hash();
  for (u64 N = 1; N <= Nmax; ++N) {
    GrowthRow row;
    row.N = N;
    std::optional<std::pair<Int, Int>> hit;
    if (cache) hit = cache->lookup(h, N);
    if (hit) {
      row.index = hit->first;
      row.degree = hit->second;
    } else {
      AnalysisReport r = analyze(family_group(fam, N), false);
      row.index = r.index;
      row.degree = r.degree;
      if (cache) cache->store(h, N, row.index, row.degree);
    }
    row.ratio = Rat(row.degree, row.index);
    row.ratio.canonicalize();
    if (row.ratio <= 0 || row.ratio > 1) throw InternalInconsistency("growth ratio outside (0, 1]");
    rows.push_back(std::move(row));
  }
  return rows;
}

N0Result find_N0_mama(const GrowthFamily& fam, u64 Nmax, GrowthCache* cache) {
  if (fam.kind() != FamilyKind::Kummer) throw PreconditionError("find_N0_mama needs a Kummer family");
  if (fam.base().kind() != FieldKind::Rationals) throw UnsupportedInstance("find_N0_mama is implemented over Q only");
  const auto r = ratios(fam, Nmax, cache);
  for (u64 n0 = 1; n0 <= Nmax; ++n0) {
    bool ok = true;
    for (u64 N = 1; N <= Nmax && ok; ++N) {
      Rat rhs = r[gcd(N, n0)];
      for (u64 p : prime_divisors(N))
        if (n0 % p != 0 && !fam.base().contains_root_of_unity(p)) rhs *= Rat(static_cast<long>(p - 1), static_cast<long>(p));
      ok = rhs == r[N];
    }
    if (ok) return {n0, Nmax};
  }
  throw CapacityExceeded("no N0 up to " + std::to_string(Nmax) + " satisfies the stabilisation identity");
}

N0Result check_eventual(const GrowthFamily& fam, u64 Nmax, GrowthCache* cache) {
  check_family_hypotheses(fam, Nmax);
  const auto r = ratios(fam, Nmax, cache);
  for (u64 n0 = 1; n0 <= Nmax; ++n0) {
    bool ok = true;
    for (u64 N = 1; N <= Nmax && ok; ++N) ok = r[gcd(N, n0)] == r[N];
    if (ok) return {n0, Nmax};
  }
  throw CapacityExceeded("no N0 up to " + std::to_string(Nmax) + " satisfies ratio(N) = ratio(gcd(N, N0))");
}

}  // namespace radx
