#include "radx/abgroup.hpp"

#include <sstream>
#include <utility>

#include "radx/errors.hpp"

namespace radx {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw PreconditionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::append_column(const std::vector<Int>& col) {
  if (cols_ == 0 && rows_ == 0) rows_ = col.size();
  if (col.size() != rows_) throw PreconditionError("column length mismatch");
  IntMatrix out(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    out(r, cols_) = col[r];
  }
  *this = std::move(out);
}

IntMatrix IntMatrix::concat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw PreconditionError("row count mismatch in concat");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

IntMatrix IntMatrix::columns(std::size_t begin, std::size_t end) const {
  IntMatrix out(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = begin; c < end; ++c) out(r, c - begin) = (*this)(r, c);
  }
  return out;
}

IntMatrix IntMatrix::row_range(std::size_t begin, std::size_t end) const {
  IntMatrix out(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r - begin, c) = (*this)(r, c);
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("shape mismatch in matrix product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (cols_ != v.size()) throw PreconditionError("shape mismatch in matrix-vector product");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
void mix_columns(IntMatrix& m, std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c, const Int& d) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int x = m(r, i), y = m(r, j);
    m(r, i) = a * x + b * y;
    m(r, j) = c * x + d * y;
  }
}

void mix_rows(IntMatrix& m, std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c, const Int& d) {
  for (std::size_t col = 0; col < m.cols(); ++col) {
    Int x = m(i, col), y = m(j, col);
    m(i, col) = a * x + b * y;
    m(j, col) = c * x + d * y;
  }
}

void add_column_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Int& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) += k * m(r, source);
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

void swap_columns(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

struct Bezout {
  Int g, x, y, a_over_g, b_over_g;
};

Bezout bezout(const Int& a, const Int& b) {
  Bezout r;
  if (a != 0 && b % a == 0) {
    // Pure elimination keeps the pivot in place; gcdext may swap when |a| = |b|.
    r.g = a;
    r.x = 1;
    r.y = 0;
    r.a_over_g = 1;
    r.b_over_g = b / a;
    return r;
  }
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  r.a_over_g = a / r.g;
  r.b_over_g = b / r.g;
  return r;
}

}  // namespace

HnfResult hnf_with_transform(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::size_t pc = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t row = 0; row < h.rows() && pc < h.cols(); ++row) {
    for (std::size_t j = pc + 1; j < h.cols(); ++j) {
      if (h(row, j) == 0) continue;
      Bezout b = bezout(h(row, pc), h(row, j));
      Int nb = -b.b_over_g;
      mix_columns(h, pc, j, b.x, b.y, nb, b.a_over_g);
      mix_columns(u, pc, j, b.x, b.y, nb, b.a_over_g);
    }
    if (h(row, pc) == 0) continue;
    if (h(row, pc) < 0) {
      negate_column(h, pc);
      negate_column(u, pc);
    }
    for (std::size_t j = 0; j < pc; ++j) {
      Int q = floor_div(h(row, j), h(row, pc));
      if (q != 0) {
        add_column_multiple(h, j, pc, -q);
        add_column_multiple(u, j, pc, -q);
      }
    }
    pivots.push_back(row);
    ++pc;
  }
  HnfResult out;
  out.h = h.columns(0, pc);
  out.transform = std::move(u);
  out.rank = pc;
  out.pivot_rows = std::move(pivots);
  return out;
}

IntMatrix hnf(const IntMatrix& m) { return hnf_with_transform(m).h; }

SnfResult snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pcol = t;
    for (std::size_t i = t; i < d.rows(); ++i) {
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pr, pcol)))) {
          found = true;
          pr = i;
          pcol = j;
        }
      }
    }
    if (!found) break;
    swap_rows(d, t, pr);
    swap_rows(u, t, pr);
    swap_columns(d, t, pcol);
    swap_columns(v, t, pcol);
    for (;;) {
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Bezout b = bezout(d(t, t), d(i, t));
        Int nb = -b.b_over_g;
        mix_rows(d, t, i, b.x, b.y, nb, b.a_over_g);
        mix_rows(u, t, i, b.x, b.y, nb, b.a_over_g);
      }
      bool row_clean = true;
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Bezout b = bezout(d(t, t), d(t, j));
        Int nb = -b.b_over_g;
        mix_columns(d, t, j, b.x, b.y, nb, b.a_over_g);
        mix_columns(v, t, j, b.x, b.y, nb, b.a_over_g);
      }
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) != 0) row_clean = false;
      }
      if (!row_clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < d.rows() && fixed; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            Int one = 1, zero = 0;
            mix_rows(d, t, i, one, one, zero, one);
            mix_rows(u, t, i, one, one, zero, one);
            fixed = false;
            break;
          }
        }
      }
      if (fixed) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < d.cols(); ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < u.cols(); ++c) u(t, c) = -u(t, c);
    }
  }
  SnfResult out;
  for (std::size_t t = 0; t < n; ++t) out.diag.push_back(d(t, t));
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw PreconditionError("inverse of a non-square matrix");
  HnfResult r = hnf_with_transform(u);
  if (!(r.h == IntMatrix::identity(u.rows()))) throw PreconditionError("matrix is not unimodular");
  return r.transform;
}

FinAbQuotient::FinAbQuotient(std::size_t rank, const IntMatrix& relations)
    : rank_(rank), relations_(relations.cols() == 0 ? IntMatrix(rank, 0) : relations) {
  if (relations_.rows() != rank_) throw PreconditionError("relation matrix has wrong row count");
  HnfResult r = hnf_with_transform(relations_);
  hnf_ = std::move(r.h);
  transform_ = std::move(r.transform);
  pivot_rows_ = std::move(r.pivot_rows);
  if (hnf_.cols() > 0) {
    for (const Int& x : snf(hnf_).diag) invariants_.push_back(x);
  }
  while (invariants_.size() < rank_) invariants_.push_back(0);
}

Int FinAbQuotient::order() const {
  if (!finite()) throw PreconditionError("quotient lattice has infinite index");
  Int out = 1;
  for (std::size_t i = 0; i < rank_; ++i) out *= hnf_(i, i);
  return out;
}

std::optional<std::vector<Int>> FinAbQuotient::solve(const std::vector<Int>& v) const {
  if (v.size() != rank_) throw PreconditionError("vector length does not match lattice rank");
  std::vector<Int> rest = v;
  std::vector<Int> y(hnf_.cols());
  std::size_t next_row = 0;
  for (std::size_t j = 0; j < hnf_.cols(); ++j) {
    std::size_t p = pivot_rows_[j];
    for (; next_row < p; ++next_row) {
      if (rest[next_row] != 0) return std::nullopt;
    }
    if (rest[p] % hnf_(p, j) != 0) return std::nullopt;
    y[j] = rest[p] / hnf_(p, j);
    if (y[j] != 0) {
      for (std::size_t r = p; r < rank_; ++r) rest[r] -= y[j] * hnf_(r, j);
    }
    next_row = p + 1;
  }
  for (; next_row < rank_; ++next_row) {
    if (rest[next_row] != 0) return std::nullopt;
  }
  std::vector<Int> x(relations_.cols());
  for (std::size_t i = 0; i < relations_.cols(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) x[i] += transform_(i, j) * y[j];
  }
  return x;
}

bool FinAbQuotient::member(const std::vector<Int>& v) const { return solve(v).has_value(); }

Int FinAbQuotient::element_order(const std::vector<Int>& v) const {
  if (v.size() != rank_) throw PreconditionError("vector length does not match lattice rank");
  if (!finite()) throw PreconditionError("element order in an infinite quotient");
  std::vector<Rat> x(rank_);
  Int order = 1;
  for (std::size_t i = 0; i < rank_; ++i) {
    Rat acc(v[i]);
    for (std::size_t j = 0; j < i; ++j) acc -= Rat(hnf_(i, j)) * x[j];
    x[i] = acc / Rat(hnf_(i, i));
    x[i].canonicalize();
    order = lcm(order, x[i].get_den());
  }
  return order;
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) { return hnf(a.concat(b)); }

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("ambient dimension mismatch");
  HnfResult r = hnf_with_transform(a.concat(b));
  const std::size_t ka = a.cols();
  IntMatrix kernel_top(ka, r.transform.cols() - r.rank);
  for (std::size_t c = r.rank; c < r.transform.cols(); ++c) {
    for (std::size_t i = 0; i < ka; ++i) kernel_top(i, c - r.rank) = r.transform(i, c);
  }
  if (kernel_top.cols() == 0) return IntMatrix(a.rows(), 0);
  return hnf(a * kernel_top);
}

Int lattice_index(const IntMatrix& big, const IntMatrix& small) {
  FinAbQuotient qb(big.rows(), big), qs(small.rows(), small);
  Int ob = qb.order(), os = qs.order();
  if (os % ob != 0) throw InternalInconsistency("lattice index is not integral");
  return os / ob;
}

std::vector<QuotientGenerator> quotient_generators(const IntMatrix& big, const IntMatrix& small) {
  const std::size_t r = big.rows();
  FinAbQuotient qb(r, big);
  if (!qb.finite()) throw PreconditionError("quotient generators need a full-rank lattice");
  const IntMatrix& h = qb.basis();
  // Express the small lattice in the basis of the big one.
  IntMatrix rel(r, small.cols());
  for (std::size_t c = 0; c < small.cols(); ++c) {
    std::vector<Rat> x(r);
    for (std::size_t i = 0; i < r; ++i) {
      Rat acc(small(i, c));
      for (std::size_t j = 0; j < i; ++j) acc -= Rat(h(i, j)) * x[j];
      x[i] = acc / Rat(h(i, i));
      x[i].canonicalize();
      if (x[i].get_den() != 1) throw PreconditionError("sublattice is not contained in the lattice");
      rel(i, c) = x[i].get_num();
    }
  }
  SnfResult s = snf(rel);
  IntMatrix uinv = unimodular_inverse(s.u);
  std::vector<QuotientGenerator> out;
  for (std::size_t i = 0; i < r; ++i) {
    Int d = i < s.diag.size() ? s.diag[i] : Int(0);
    if (d == 0) throw PreconditionError("quotient generators need a full-rank sublattice");
    if (d == 1) continue;
    std::vector<Int> coords = uinv.column(i);
    out.push_back({h * coords, d});
  }
  return out;
}

}  // namespace radx
