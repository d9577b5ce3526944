#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rankvc/errors.hpp"
#include "rankvc/scalar_field.hpp"

namespace rankvc {

/// Row-major dense matrix over one of the field types in scalar_field.hpp.
/// Zero rows or zero columns are valid shapes.
template <class Field>
class DenseMatrix {
 public:
  using value_type = typename Field::value_type;

  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<value_type> column(std::size_t c) const {
    std::vector<value_type> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void set_column(std::size_t c, std::span<const value_type> v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero_column(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!field_.is_zero((*this)(r, c))) return false;
    }
    return true;
  }

  DenseMatrix select_columns(std::span<const std::size_t> cols) const {
    DenseMatrix out(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
    }
    return out;
  }

  DenseMatrix select_rows(std::span<const std::size_t> rows) const {
    DenseMatrix out(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(rows[i], c);
    }
    return out;
  }

  DenseMatrix without_column(std::size_t c) const {
    DenseMatrix out(field_, rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0, k = 0; j < cols_; ++j) {
        if (j != c) out(r, k++) = (*this)(r, j);
      }
    }
    return out;
  }

  DenseMatrix without_row(std::size_t row) const {
    DenseMatrix out(field_, rows_ - 1, cols_);
    for (std::size_t r = 0, k = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(r, c);
      ++k;
    }
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  // row[target] -= factor * row[source], for columns >= from_col.
  void subtract_row_multiple(std::size_t target, std::size_t source, const value_type& factor,
                             std::size_t from_col = 0) {
    for (std::size_t c = from_col; c < cols_; ++c) {
      const value_type& s = (*this)(source, c);
      if (field_.is_zero(s)) continue;
      value_type& t = (*this)(target, c);
      t = field_.sub(t, field_.mul(factor, s));
    }
  }

  bool operator==(const DenseMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// Forward elimination to row echelon form, in place. Pivots are the first
/// nonzero entry at or below the current row. Returns the rank; optionally
/// records pivot columns and the number of row swaps.
template <class Field>
std::size_t row_echelon(DenseMatrix<Field>& m, std::vector<std::size_t>* pivot_cols = nullptr,
                        std::size_t* swaps = nullptr) {
  const Field& f = m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      m.swap_rows(pivot, row);
      if (swaps) ++*swaps;
    }
    const auto inv = f.inv(m(row, col));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (f.is_zero(m(r, col))) continue;
      const auto factor = f.mul(m(r, col), inv);
      m.subtract_row_multiple(r, row, factor, col);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return row;
}

template <class Field>
std::size_t rank_of_columns(const DenseMatrix<Field>& m, std::span<const std::size_t> cols) {
  if (cols.empty() || m.rows() == 0) return 0;
  auto sub = m.select_columns(cols);
  return row_echelon(sub);
}

template <class Field>
std::size_t full_rank(const DenseMatrix<Field>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto copy = m;
  return row_echelon(copy);
}

/// Indices of the columns chosen greedily in column order: column j is kept
/// iff it is independent of the kept columns before it.
template <class Field>
std::vector<std::size_t> greedy_column_basis(const DenseMatrix<Field>& m) {
  std::vector<std::size_t> pivots;
  if (m.rows() == 0) return pivots;
  auto copy = m;
  row_echelon(copy, &pivots);
  return pivots;
}

/// Indices of original rows forming a basis of the row space, chosen
/// greedily top to bottom.
template <class Field>
std::vector<std::size_t> row_basis_indices(const DenseMatrix<Field>& m) {
  const Field& f = m.field();
  using value_type = typename Field::value_type;
  // Echelon rows kept so far, each normalised to a leading one.
  std::vector<std::vector<value_type>> echelon;
  std::vector<std::size_t> leads;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<value_type> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      if (f.is_zero(row[leads[e]])) continue;
      const auto factor = row[leads[e]];
      for (std::size_t c = leads[e]; c < m.cols(); ++c) {
        if (!f.is_zero(echelon[e][c])) row[c] = f.sub(row[c], f.mul(factor, echelon[e][c]));
      }
    }
    std::size_t lead = 0;
    while (lead < m.cols() && f.is_zero(row[lead])) ++lead;
    if (lead == m.cols()) continue;
    const auto inv = f.inv(row[lead]);
    for (std::size_t c = lead; c < m.cols(); ++c) row[c] = f.mul(row[c], inv);
    // Echelon rows stay sorted by lead; reduction above relies on it.
    std::size_t pos = 0;
    while (pos < leads.size() && leads[pos] < lead) ++pos;
    echelon.insert(echelon.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    leads.insert(leads.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    chosen.push_back(r);
  }
  return chosen;
}

template <class Field>
typename Field::value_type determinant(const DenseMatrix<Field>& m, std::span<const std::size_t> rows,
                                       std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw InputError("determinant: selection is not square");
  const Field& f = m.field();
  if (rows.empty()) return f.one();
  auto sub = m.select_rows(rows).select_columns(cols);
  std::size_t swaps = 0;
  const std::size_t rank = row_echelon(sub, nullptr, &swaps);
  if (rank < sub.rows()) return f.zero();
  auto det = f.one();
  for (std::size_t i = 0; i < sub.rows(); ++i) det = f.mul(det, sub(i, i));
  return swaps % 2 ? f.neg(det) : det;
}

/// Pivots on the first nonzero entry of column c, clears column c from every
/// other row, then drops that row and column. The result represents the
/// contraction of the matroid by element c.
template <class Field>
DenseMatrix<Field> contract_column(const DenseMatrix<Field>& m, std::size_t c) {
  const Field& f = m.field();
  std::size_t pivot = 0;
  while (pivot < m.rows() && f.is_zero(m(pivot, c))) ++pivot;
  if (pivot == m.rows()) throw ContractLoopError("cannot contract a zero column");
  auto work = m;
  const auto inv = f.inv(work(pivot, c));
  for (std::size_t r = 0; r < work.rows(); ++r) {
    if (r == pivot || f.is_zero(work(r, c))) continue;
    const auto factor = f.mul(work(r, c), inv);
    work.subtract_row_multiple(r, pivot, factor);
  }
  return work.without_row(pivot).without_column(c);
}

}  // namespace rankvc
