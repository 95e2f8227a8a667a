#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "specoh/rational.hpp"

namespace specoh {

using Vector = std::vector<Rational>;

/// Sparse vector as (index, value) pairs sorted by index, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector from_dense(const Vector& v);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t leading_index() const { return entries_.front().first; }
  const Rational& leading_value() const { return entries_.front().second; }
  Rational get(std::size_t index) const;

  /// Adds `value` at `index`; entries may be pushed in any order.
  void add(std::size_t index, const Rational& value);
  /// this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);
  Vector to_dense(std::size_t size) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Row-major sparse rational matrix. Columns index the source of a linear
/// map and rows its target, so M * x applies the map to x.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational get(std::size_t row, std::size_t col) const;
  const SparseVector& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;
  bool is_zero() const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  Vector apply(const Vector& x) const;
  std::vector<Vector> to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

/// Incrementally built echelon basis of a subspace of Q^dim. Pivot choice is
/// the first nonzero coordinate of each inserted vector after reduction, so
/// results depend only on insertion order.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Reduces v against the basis; returns the remainder.
  SparseVector reduce(SparseVector v) const;
  /// Inserts v; returns true iff v was independent of the current span.
  bool insert(SparseVector v);
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

 private:
  void insert_reduced(SparseVector v);

  std::size_t dim_;
  std::vector<SparseVector> rows_;               // normalized: leading value 1
  std::vector<std::ptrdiff_t> row_for_pivot_;    // pivot column -> row or -1
};

std::size_t rank(const SparseMatrix& m);
std::vector<Vector> kernel_basis(const SparseMatrix& m);
std::vector<Vector> image_basis(const SparseMatrix& m);
bool in_image(const SparseMatrix& m, const Vector& v);

struct CohomologyResult {
  std::size_t dimension = 0;
  std::vector<Vector> representatives;
};

/// Cohomology of C' --d_in--> C --d_out--> C'' at C, i.e. ker(d_out)/im(d_in).
/// Throws NotAComplex when d_out * d_in is nonzero.
CohomologyResult cohomology_at(const SparseMatrix& d_in, const SparseMatrix& d_out);

/// Dimension only; skips building representatives.
std::size_t cohomology_dimension(const SparseMatrix& d_in, const SparseMatrix& d_out);

}  // namespace specoh
