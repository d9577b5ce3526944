#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "rankvc/dense_matrix.hpp"
#include "rankvc/scalar_field.hpp"

namespace rankvc {

/// Scalars at the public boundary. Over a prime field the entries are the
/// canonical residues in [0, q).
using ScalarVector = std::vector<mpq_class>;

/// Either the rationals or GF(q) for an odd prime q.
class ScalarDomain {
 public:
  enum class Kind { Rational, PrimeField };

  static ScalarDomain rational() { return ScalarDomain(Kind::Rational, 0); }
  /// Throws InputError unless q is an odd prime.
  static ScalarDomain prime_field(const mpz_class& q);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  /// Zero for the rationals.
  const mpz_class& modulus() const { return modulus_; }

  /// Maps a rational into the domain's canonical representative. Throws
  /// RetryableError when the denominator is divisible by q.
  mpq_class reduce(const mpq_class& x) const;
  /// True if x already is a canonical element of the domain.
  bool contains(const mpq_class& x) const;

  /// "rational" or "gfp <q>".
  std::string to_string() const;

  bool operator==(const ScalarDomain& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }

 private:
  ScalarDomain(Kind kind, mpz_class q) : kind_(kind), modulus_(std::move(q)) {}
  Kind kind_;
  mpz_class modulus_;
};

/// Dense matrix over a runtime-selected ScalarDomain. GF(q) with q < 2^63 is
/// stored in machine words; larger moduli and the rationals use GMP values.
/// Value type: every operation returns a new matrix.
class ExactMatrix {
 public:
  using Storage = std::variant<DenseMatrix<RationalField>, DenseMatrix<PrimeField64>,
                               DenseMatrix<PrimeFieldBig>>;

  ExactMatrix(const ScalarDomain& domain, std::size_t rows, std::size_t cols);
  static ExactMatrix identity(const ScalarDomain& domain, std::size_t n);
  /// Row-major construction; every entry is mapped with domain.reduce().
  static ExactMatrix from_rows(const ScalarDomain& domain, std::size_t cols,
                               const std::vector<ScalarVector>& rows);
  static ExactMatrix from_columns(const ScalarDomain& domain, std::size_t rows,
                                  const std::vector<ScalarVector>& columns);

  const ScalarDomain& domain() const { return domain_; }
  std::size_t rows() const;
  std::size_t cols() const;

  mpq_class at(std::size_t r, std::size_t c) const;
  ScalarVector column(std::size_t c) const;
  bool is_zero_column(std::size_t c) const;

  std::size_t rank() const;
  /// Rank of the selected columns. Throws InputError on an out-of-range index.
  std::size_t rank(std::span<const std::size_t> cols) const;
  bool in_span(std::size_t target, std::span<const std::size_t> generators) const;
  /// target must have rows() entries; it is mapped into the domain first.
  bool in_span(const ScalarVector& target, std::span<const std::size_t> generators) const;

  /// Original rows forming a row basis; represents the same matroid.
  ExactMatrix row_basis() const;
  /// Greedy column basis in column order.
  std::vector<std::size_t> column_basis() const;
  /// Determinant of the square submatrix; returns the canonical element.
  mpq_class determinant(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  ExactMatrix with_column(std::size_t c, const ScalarVector& v) const;
  ExactMatrix without_column(std::size_t c) const;
  ExactMatrix select_columns(std::span<const std::size_t> cols) const;
  /// Pivot on the first nonzero entry of column c, eliminate, drop that row
  /// and column. Throws ContractLoopError for a zero column.
  ExactMatrix contract_column(std::size_t c) const;

  /// Sum of coeffs[i] * column(cols[i]), evaluated in the domain.
  ScalarVector linear_combination(std::span<const std::size_t> cols,
                                  const ScalarVector& coeffs) const;

  /// For every pair (a, b) a column holding the upper triangle, row by row,
  /// of col_a * col_b^T + col_b * col_a^T. rows() * (rows() + 1) / 2 rows.
  ExactMatrix symmetric_square(std::span<const std::pair<std::size_t, std::size_t>> pairs) const;

  /// Entrywise reduction of a rational matrix into GF(q). Throws InputError
  /// if this matrix is not rational, RetryableError if q divides a
  /// denominator.
  ExactMatrix mod_reduce(const mpz_class& q) const;

  /// Largest |numerator| or denominator over all entries (residues for GF(q)).
  mpz_class max_entry_magnitude() const;
  std::size_t max_entry_bits() const;

  bool operator==(const ExactMatrix& other) const {
    return domain_ == other.domain_ && storage_ == other.storage_;
  }

  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), storage_);
  }

 private:
  ExactMatrix(ScalarDomain domain, Storage storage)
      : domain_(std::move(domain)), storage_(std::move(storage)) {}
  void check_column(std::size_t c) const;

  ScalarDomain domain_;
  Storage storage_;
};

}  // namespace rankvc
