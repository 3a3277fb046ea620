#pragma once

// Exact integer and rational linear algebra.
//
// Everything here works over GMP integers/rationals; there is no floating
// point anywhere. Matrices are small (desk-scale semigroups), so the
// algorithms favour clarity over asymptotics: dense row reduction for the
// Hermite form, a dense tableau for the simplex method, and incremental
// sparse elimination for ranks of boundary matrices.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sgalg {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
// Entries are kept canonical (lowest terms, positive denominator).
using RationalVector = std::vector<Rational>;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows,
                                 std::size_t cols);
  static IntegerMatrix from_columns(const std::vector<IntegerVector>& columns,
                                    std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntegerVector row(std::size_t r) const;
  IntegerVector column(std::size_t c) const;
  IntegerMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerVector operator*(const IntegerMatrix& m, const IntegerVector& v);

struct HermiteForm {
  IntegerMatrix H;  // row-style Hermite normal form of the input
  IntegerMatrix U;  // unimodular, U * M == H
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Row-style Hermite normal form: nonzero rows on top, pivots positive and
// strictly increasing in column, entries above a pivot reduced into
// [0, pivot).
HermiteForm hermite_normal_form(const IntegerMatrix& m);

// Z-basis of {u in Z^n : A u = 0}; n - rank(A) vectors of length n.
std::vector<IntegerVector> integer_kernel_basis(const IntegerMatrix& a);

// Determinant of a square integer matrix (Bareiss).
Integer determinant(const IntegerMatrix& m);

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  RationalVector coefficients;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

struct LPResult {
  bool feasible = false;
  RationalVector witness;  // populated when feasible
};

// Feasibility of linear constraints over free rational variables: phase one
// of a dense simplex with Bland's rule. Unbounded feasible regions are
// reported feasible; a feasible answer carries an exact witness.
LPResult lp_feasible(std::size_t num_variables,
                     std::span<const LinearConstraint> constraints);

// Is `point` a nonnegative rational combination of `generators`?
LPResult in_cone(const IntegerVector& point,
                 const std::vector<IntegerVector>& generators);

// A rational functional taking value >= 1 on every column of `a`. Throws
// Error(NotPointed) when no such functional exists.
RationalVector positive_functional(const IntegerMatrix& a);

// Index [Z l1 : Z l2]. Returns nullopt when the index is infinite (rank of
// l2 smaller than rank of l1). Throws Error(NotSublattice) when Z l2 is not
// contained in Z l1.
std::optional<Integer> lattice_index(const std::vector<IntegerVector>& l1,
                                     const std::vector<IntegerVector>& l2);

std::size_t integer_rank(const IntegerMatrix& m);

// A field: characteristic 0 means the rationals, otherwise a prime p.
struct Field {
  std::uint64_t characteristic = 0;
  static Field rationals() { return {0}; }
  static Field prime(std::uint64_t p) { return {p}; }
};

// Sparse matrix given by rows of (column, value) pairs; columns need not be
// sorted and duplicate columns are summed.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

std::size_t rank_over_field(const std::vector<SparseRow>& rows, Field field);
std::size_t rank_over_field(const IntegerMatrix& m, Field field);

bool is_prime(std::uint64_t p);

}  // namespace sgalg
