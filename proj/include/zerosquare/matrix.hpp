#pragma once

#include <optional>
#include <vector>

#include "zerosquare/ring.hpp"

namespace zsq {

/// 1-based 2x2 minor position: rows (a, b) with a < b, columns (c, d)
/// with c < d.
struct MinorIndex {
  int row_a = 1;
  int row_b = 2;
  int col_c = 1;
  int col_d = 2;
  bool operator==(const MinorIndex&) const = default;
};

/// Dense matrix over a Ring with exact arithmetic. Value type: copies are
/// independent, operations never mutate their arguments.
class Matrix {
 public:
  Matrix(Ring ring, int rows, int cols);  // zero-filled

  static Matrix zeros(const Ring& ring, int n) { return Matrix(ring, n, n); }
  static Matrix identity(const Ring& ring, int n);
  /// E_ij: single 1 in position (i, j), 1-based.
  static Matrix e_matrix(const Ring& ring, int n, int i, int j);
  static Matrix from_rows(const Ring& ring,
                          std::vector<std::vector<RingElem>> rows);
  static Matrix from_ints(const Ring& ring,
                          const std::vector<std::vector<long long>>& rows);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const RingElem& at(int i, int j) const;  // 0-based
  void set(int i, int j, RingElem v);

  bool operator==(const Matrix& other) const;

  Matrix add(const Matrix& other) const;
  Matrix sub(const Matrix& other) const;
  Matrix mul(const Matrix& other) const;
  Matrix scalar_mul(const RingElem& s) const;
  Matrix transpose() const;

  bool is_zero() const;
  RingElem trace() const;

  /// Laplace cofactor expansion; valid over any commutative ring. n <= 8.
  RingElem det() const;

  RingElem minor2(const MinorIndex& m) const;

  /// Lexicographically first nonzero 2x2 minor in (a,b,c,d) order, or
  /// nullopt when every 2x2 minor vanishes (rank <= 1 over a domain).
  std::optional<MinorIndex> first_nonzero_minor() const;

  /// T^2 recomputed entrywise from Tr(T) and 2x2 minors; equals mul(T,T)
  /// over every commutative ring.
  Matrix square_entry_formula() const;

  RingElem gcd_of_entries() const;

 private:
  RingElem& cell(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const RingElem& cell(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Ring ring_;
  int rows_;
  int cols_;
  std::vector<RingElem> a_;  // row-major
};

/// column * row as a rows(col) x rows(row) matrix.
Matrix outer_product(const Ring& ring, std::span<const RingElem> col,
                     std::span<const RingElem> row);

}  // namespace zsq
