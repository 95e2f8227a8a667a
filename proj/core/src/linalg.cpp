#include "specoh/linalg.hpp"

#include <algorithm>
#include <map>

#include "specoh/errors.hpp"

namespace specoh {

SparseVector SparseVector::from_dense(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.entries_.emplace_back(i, v[i]);
  return s;
}

Rational SparseVector::get(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

void SparseVector::add(std::size_t index, const Rational& value) {
  if (value.is_zero()) return;
  if (entries_.empty() || entries_.back().first < index) {
    entries_.emplace_back(index, value);
    return;
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry(index, value));
  }
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (factor.is_zero() || other.is_zero()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational v = a->second + factor * b->second;
      if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

Vector SparseVector::to_dense(std::size_t size) const {
  Vector v(size, Rational(0));
  for (const auto& [i, x] : entries_) v.at(i) = x;
  return v;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.add(i, i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows) {
  SparseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidArgument("ragged dense matrix");
    m.data_[r] = SparseVector::from_dense(rows[r]);
  }
  return m;
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw InvalidArgument("matrix index out of range");
  data_[row].add(col, value);
}

Rational SparseMatrix::get(std::size_t row, std::size_t col) const { return data_.at(row).get(col); }

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.entries().size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.is_zero(); });
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r].entries()) t.data_[c].add(r, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("matrix product dimension mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, v] : data_[r].entries())
      for (const auto& [c, w] : rhs.data_[k].entries()) acc[c] += v * w;
    for (const auto& [c, x] : acc)
      if (!x.is_zero()) out.data_[r].add(c, x);
  }
  return out;
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InvalidArgument("vector length does not match matrix columns");
  Vector y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r].entries()) y[r] += v * x[c];
  return y;
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (const auto& r : data_) out.push_back(r.to_dense(cols_));
  return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::size_t cursor = 0;
  while (true) {
    const SparseVector::Entry* hit = nullptr;
    for (const auto& e : v.entries()) {
      if (e.first < cursor) continue;
      if (e.first < row_for_pivot_.size() && row_for_pivot_[e.first] >= 0) {
        hit = &e;
        break;
      }
    }
    if (hit == nullptr) return v;
    const std::size_t pivot = hit->first;
    const Rational factor = -hit->second;
    v.axpy(factor, rows_[static_cast<std::size_t>(row_for_pivot_[pivot])]);
    cursor = pivot + 1;
  }
}

bool EchelonBasis::insert(SparseVector v) {
  SparseVector r = reduce(std::move(v));
  if (r.is_zero()) return false;
  insert_reduced(std::move(r));
  return true;
}

void EchelonBasis::insert_reduced(SparseVector v) {
  const Rational inv = Rational(1) / v.leading_value();
  v.scale(inv);
  const std::size_t pivot = v.leading_index();
  if (row_for_pivot_.size() <= pivot) row_for_pivot_.resize(std::max(pivot + 1, dim_), -1);
  row_for_pivot_[pivot] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
}

std::size_t rank(const SparseMatrix& m) {
  // Eliminate along the shorter side.
  if (m.rows() <= m.cols()) {
    EchelonBasis b(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
    return b.rank();
  }
  const SparseMatrix t = m.transpose();
  EchelonBasis b(t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r) b.insert(t.row(r));
  return b.rank();
}

namespace {

// Reduced row echelon form of the row space, rows sorted by pivot.
std::vector<SparseVector> rref_rows(const SparseMatrix& m) {
  EchelonBasis b(m.cols());
  std::vector<SparseVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector red = b.reduce(m.row(r));
    if (red.is_zero()) continue;
    red.scale(Rational(1) / red.leading_value());
    b.insert(red);
    rows.push_back(std::move(red));
  }
  std::sort(rows.begin(), rows.end(),
            [](const SparseVector& a, const SparseVector& c) { return a.leading_index() < c.leading_index(); });
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t p = rows[i].leading_index();
    for (std::size_t j = 0; j < i; ++j) {
      Rational x = rows[j].get(p);
      if (!x.is_zero()) rows[j].axpy(-x, rows[i]);
    }
  }
  return rows;
}

}  // namespace

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  const auto rows = rref_rows(m);
  std::vector<std::ptrdiff_t> pivot_row(m.cols(), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) pivot_row[rows[r].leading_index()] = static_cast<std::ptrdiff_t>(r);
  // Column f of the RREF, as (row, value) pairs.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> column(m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r].entries())
      if (pivot_row[c] < 0) column[c].emplace_back(r, v);
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_row[f] >= 0) continue;
    Vector v(m.cols(), Rational(0));
    v[f] = 1;
    for (const auto& [r, x] : column[f]) v[rows[r].leading_index()] = -x;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> image_basis(const SparseMatrix& m) {
  const SparseMatrix t = m.transpose();
  EchelonBasis b(m.rows());
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < t.rows(); ++c)
    if (b.insert(t.row(c))) basis.push_back(t.row(c).to_dense(m.rows()));
  return basis;
}

bool in_image(const SparseMatrix& m, const Vector& v) {
  if (v.size() != m.rows()) throw InvalidArgument("vector length does not match matrix rows");
  const SparseMatrix t = m.transpose();
  EchelonBasis b(m.rows());
  for (std::size_t c = 0; c < t.rows(); ++c) b.insert(t.row(c));
  return b.contains(SparseVector::from_dense(v));
}

namespace {

void check_complex(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw InvalidArgument("cohomology_at: d_in has " + std::to_string(d_in.rows()) + " rows but d_out has " +
                          std::to_string(d_out.cols()) + " columns");
  if (!(d_out * d_in).is_zero()) throw NotAComplex("d_out * d_in is nonzero");
}

}  // namespace

CohomologyResult cohomology_at(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  check_complex(d_in, d_out);
  const SparseMatrix t = d_in.transpose();
  EchelonBasis span(d_in.rows());
  for (std::size_t c = 0; c < t.rows(); ++c) span.insert(t.row(c));
  CohomologyResult result;
  for (auto& z : kernel_basis(d_out))
    if (span.insert(SparseVector::from_dense(z))) result.representatives.push_back(std::move(z));
  result.dimension = result.representatives.size();
  return result;
}

std::size_t cohomology_dimension(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  check_complex(d_in, d_out);
  return d_out.cols() - rank(d_out) - rank(d_in);
}

}  // namespace specoh
