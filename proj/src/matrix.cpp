#include "zerosquare/matrix.hpp"

#include <string>
#include <utility>

namespace zsq {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::ContractViolation, msg);
}

}  // namespace

Matrix::Matrix(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
         ring_.zero()) {
  require(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
}

Matrix Matrix::identity(const Ring& ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.cell(i, i) = ring.one();
  return m;
}

Matrix Matrix::e_matrix(const Ring& ring, int n, int i, int j) {
  require(1 <= i && i <= n && 1 <= j && j <= n, "E_ij position out of range");
  Matrix m(ring, n, n);
  m.cell(i - 1, j - 1) = ring.one();
  return m;
}

Matrix Matrix::from_rows(const Ring& ring,
                         std::vector<std::vector<RingElem>> rows) {
  require(!rows.empty() && !rows[0].empty(), "matrix dimensions must be >= 1");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  Matrix m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, "ragged rows");
    for (int j = 0; j < c; ++j) {
      require(ring.contains(rows[i][j]), "entry outside the ring");
      m.cell(i, j) = std::move(rows[i][j]);
    }
  }
  return m;
}

Matrix Matrix::from_ints(const Ring& ring,
                         const std::vector<std::vector<long long>>& rows) {
  require(!rows.empty() && !rows[0].empty(), "matrix dimensions must be >= 1");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  Matrix m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, "ragged rows");
    for (int j = 0; j < c; ++j) m.cell(i, j) = ring.from_int(rows[i][j]);
  }
  return m;
}

const RingElem& Matrix::at(int i, int j) const {
  require(0 <= i && i < rows_ && 0 <= j && j < cols_, "index out of range");
  return cell(i, j);
}

void Matrix::set(int i, int j, RingElem v) {
  require(0 <= i && i < rows_ && 0 <= j && j < cols_, "index out of range");
  require(ring_.contains(v), "entry outside the ring");
  cell(i, j) = std::move(v);
}

bool Matrix::operator==(const Matrix& other) const {
  return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         a_ == other.a_;
}

Matrix Matrix::add(const Matrix& other) const {
  require(ring_ == other.ring_, "mixed-ring matrix operands");
  require(rows_ == other.rows_ && cols_ == other.cols_,
          "shape mismatch in add");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k)
    out.a_[k] = ring_.add(a_[k], other.a_[k]);
  return out;
}

Matrix Matrix::sub(const Matrix& other) const {
  require(ring_ == other.ring_, "mixed-ring matrix operands");
  require(rows_ == other.rows_ && cols_ == other.cols_,
          "shape mismatch in sub");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k)
    out.a_[k] = ring_.sub(a_[k], other.a_[k]);
  return out;
}

Matrix Matrix::mul(const Matrix& other) const {
  require(ring_ == other.ring_, "mixed-ring matrix operands");
  require(cols_ == other.rows_, "shape mismatch in mul");
  Matrix out(ring_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      RingElem acc = ring_.zero();
      for (int k = 0; k < cols_; ++k)
        acc = ring_.add(acc, ring_.mul(cell(i, k), other.cell(k, j)));
      out.cell(i, j) = std::move(acc);
    }
  }
  return out;
}

Matrix Matrix::scalar_mul(const RingElem& s) const {
  require(ring_.contains(s), "scalar outside the ring");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = ring_.mul(s, a_[k]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.cell(j, i) = cell(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const RingElem& e : a_)
    if (!ring_.is_zero(e)) return false;
  return true;
}

RingElem Matrix::trace() const {
  require(is_square(), "trace of a non-square matrix");
  RingElem acc = ring_.zero();
  for (int i = 0; i < rows_; ++i) acc = ring_.add(acc, cell(i, i));
  return acc;
}

RingElem Matrix::det() const {
  require(is_square(), "det of a non-square matrix");
  require(rows_ <= 8, "det supported up to n = 8");
  if (rows_ == 1) return cell(0, 0);
  // Laplace expansion along the first row; division-free, so it is valid
  // over nil16 as well.
  RingElem acc = ring_.zero();
  for (int j = 0; j < cols_; ++j) {
    if (ring_.is_zero(cell(0, j))) continue;
    Matrix sub(ring_, rows_ - 1, cols_ - 1);
    for (int i = 1; i < rows_; ++i) {
      int jj = 0;
      for (int k = 0; k < cols_; ++k) {
        if (k == j) continue;
        sub.cell(i - 1, jj++) = cell(i, k);
      }
    }
    RingElem term = ring_.mul(cell(0, j), sub.det());
    acc = (j % 2 == 0) ? ring_.add(acc, term) : ring_.sub(acc, term);
  }
  return acc;
}

RingElem Matrix::minor2(const MinorIndex& m) const {
  require(1 <= m.row_a && m.row_a < m.row_b && m.row_b <= rows_ &&
              1 <= m.col_c && m.col_c < m.col_d && m.col_d <= cols_,
          "minor index out of range or unordered");
  const int a = m.row_a - 1, b = m.row_b - 1, c = m.col_c - 1, d = m.col_d - 1;
  return ring_.sub(ring_.mul(cell(a, c), cell(b, d)),
                   ring_.mul(cell(a, d), cell(b, c)));
}

std::optional<MinorIndex> Matrix::first_nonzero_minor() const {
  for (int a = 1; a < rows_; ++a)
    for (int b = a + 1; b <= rows_; ++b)
      for (int c = 1; c < cols_; ++c)
        for (int d = c + 1; d <= cols_; ++d) {
          MinorIndex idx{a, b, c, d};
          if (!ring_.is_zero(minor2(idx))) return idx;
        }
  return std::nullopt;
}

Matrix Matrix::square_entry_formula() const {
  require(is_square(), "square_entry_formula of a non-square matrix");
  const RingElem tr = trace();
  Matrix out(ring_, rows_, cols_);
  // entry (i,j) of T^2 as t_ij*Tr(T) plus generalized 2x2 minors
  // T[i,k;k,j] summed over k outside {i, j}.
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      RingElem acc = ring_.mul(cell(i, j), tr);
      for (int k = 0; k < rows_; ++k) {
        if (k == i || k == j) continue;
        RingElem minor = ring_.sub(ring_.mul(cell(i, k), cell(k, j)),
                                   ring_.mul(cell(i, j), cell(k, k)));
        acc = ring_.add(acc, minor);
      }
      out.cell(i, j) = std::move(acc);
    }
  }
  return out;
}

RingElem Matrix::gcd_of_entries() const {
  return ring_.gcd_list(a_).g;
}

Matrix outer_product(const Ring& ring, std::span<const RingElem> col,
                     std::span<const RingElem> row) {
  Matrix out(ring, static_cast<int>(col.size()), static_cast<int>(row.size()));
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j)
      out.set(static_cast<int>(i), static_cast<int>(j), ring.mul(col[i], row[j]));
  return out;
}

}  // namespace zsq
