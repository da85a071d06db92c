#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "radx/arith.hpp"

namespace radx {

// Dense integer matrix, row-major.  Lattices are always spanned by columns.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Int> column(std::size_t c) const;
  void append_column(const std::vector<Int>& col);
  IntMatrix concat(const IntMatrix& other) const;  // [this | other]
  IntMatrix columns(std::size_t begin, std::size_t end) const;
  IntMatrix row_range(std::size_t begin, std::size_t end) const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  bool operator==(const IntMatrix& rhs) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Column Hermite normal form: lower-triangular echelon, positive pivots,
// entries left of a pivot reduced into [0, pivot).  Zero columns dropped.
IntMatrix hnf(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;          // rows x rank
  IntMatrix transform;  // cols x cols unimodular, m * transform = [h | 0]
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};
HnfResult hnf_with_transform(const IntMatrix& m);

struct SnfResult {
  std::vector<Int> diag;  // min(rows, cols) entries, d1 | d2 | ... (zeros last)
  IntMatrix u;            // rows x rows unimodular
  IntMatrix v;            // cols x cols unimodular, u * m * v = diag
};
SnfResult snf(const IntMatrix& m);

// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

// Z^r / Lambda with Lambda spanned by the columns of `relations`.
class FinAbQuotient {
 public:
  FinAbQuotient(std::size_t rank, const IntMatrix& relations);

  std::size_t rank() const { return rank_; }
  const IntMatrix& basis() const { return hnf_; }  // HNF of Lambda
  const std::vector<Int>& invariants() const { return invariants_; }
  bool finite() const { return hnf_.cols() == rank_; }

  // |Z^r / Lambda|; throws PreconditionError if the quotient is infinite.
  Int order() const;
  bool member(const std::vector<Int>& v) const;
  // Coefficients x with relations * x = v, if v lies in Lambda.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& v) const;
  // Order of the class of v in Z^r / Lambda (finite quotient only).
  Int element_order(const std::vector<Int>& v) const;

 private:
  std::size_t rank_;
  IntMatrix relations_;
  IntMatrix hnf_;
  IntMatrix transform_;  // relations * transform = [hnf | 0]
  std::vector<std::size_t> pivot_rows_;
  std::vector<Int> invariants_;
};

// Lattice spanned by the columns of a and b together (HNF).
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);
// Intersection of two column lattices in the same ambient space (HNF).
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);
// |L_big / L_small| for full-rank lattices with L_small inside L_big.
Int lattice_index(const IntMatrix& big, const IntMatrix& small);

// Generators of L_big / L_small (both full rank, L_small inside L_big) as
// ambient vectors, with their orders; trivial generators omitted.
struct QuotientGenerator {
  std::vector<Int> vector;
  Int order;
};
std::vector<QuotientGenerator> quotient_generators(const IntMatrix& big, const IntMatrix& small);

}  // namespace radx
