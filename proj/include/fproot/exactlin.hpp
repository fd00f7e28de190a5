#pragma once

// Exact linear algebra over the rationals. Everything here is backed by GMP
// rationals; no floating point is produced or consumed.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fproot {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "p/q", "p", or a finite decimal such as "-0.25". Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix transpose() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Zero multipliers are skipped, so sparse inputs
/// stay cheap.
RowEchelon rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}. Vector k has a 1 in the k-th free column and 0 in
/// every other free column, so the coordinates of any kernel element in this
/// basis are its entries at the free columns.
std::vector<RatVector> nullspace_basis(const RatMatrix& m);

/// Free (non-pivot) columns of m, in increasing order; the coordinate
/// positions matching nullspace_basis.
std::vector<std::size_t> free_columns(const RowEchelon& e, std::size_t cols);

/// A particular solution of m x = b, or nullopt when the system is
/// inconsistent. Throws std::invalid_argument if b.size() != m.rows().
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Stacks vectors as the rows of a matrix with the given column count.
RatMatrix rows_to_matrix(const std::vector<RatVector>& rows, std::size_t cols);

/// Block diagonal assembly; blocks may be empty in either dimension.
RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks);

}  // namespace fproot
