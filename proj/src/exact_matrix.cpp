#include "rankvc/exact_matrix.hpp"

#include <algorithm>

#include "rankvc/errors.hpp"
#include "rankvc/primes.hpp"

namespace rankvc {

namespace {

const mpz_class kWordModulusLimit = mpz_class(1) << 63;

ExactMatrix::Storage make_storage(const ScalarDomain& domain, std::size_t rows, std::size_t cols) {
  if (domain.is_rational()) return DenseMatrix<RationalField>(RationalField{}, rows, cols);
  const mpz_class& q = domain.modulus();
  if (q < kWordModulusLimit) {
    return DenseMatrix<PrimeField64>(PrimeField64{q.get_ui()}, rows, cols);
  }
  return DenseMatrix<PrimeFieldBig>(PrimeFieldBig{q}, rows, cols);
}

template <class Field>
std::vector<typename Field::value_type> to_field(const Field& f, const ScalarVector& v) {
  std::vector<typename Field::value_type> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(f.from_rational(x));
  return out;
}

template <class Field>
ScalarVector from_field(const Field& f, const std::vector<typename Field::value_type>& v) {
  ScalarVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(f.to_rational(x));
  return out;
}

std::size_t bit_length(const mpz_class& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace

ScalarDomain ScalarDomain::prime_field(const mpz_class& q) {
  if (q < 3 || mpz_even_p(q.get_mpz_t()) || !is_probable_prime(q)) {
    throw InputError("field modulus must be an odd prime, got " + q.get_str());
  }
  return ScalarDomain(Kind::PrimeField, q);
}

mpq_class ScalarDomain::reduce(const mpq_class& x) const {
  if (is_rational()) {
    mpq_class y = x;
    y.canonicalize();
    return y;
  }
  mpz_class den;
  mpz_mod(den.get_mpz_t(), x.get_den_mpz_t(), modulus_.get_mpz_t());
  if (sgn(den) == 0) {
    throw RetryableError("denominator " + x.get_den().get_str() + " divisible by modulus " +
                         modulus_.get_str());
  }
  mpz_class num;
  mpz_mod(num.get_mpz_t(), x.get_num_mpz_t(), modulus_.get_mpz_t());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  mpz_class r = num * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
  return mpq_class(r);
}

bool ScalarDomain::contains(const mpq_class& x) const {
  if (is_rational()) return true;
  return x.get_den() == 1 && sgn(x.get_num()) >= 0 && x.get_num() < modulus_;
}

std::string ScalarDomain::to_string() const {
  return is_rational() ? std::string("rational") : "gfp " + modulus_.get_str();
}

ExactMatrix::ExactMatrix(const ScalarDomain& domain, std::size_t rows, std::size_t cols)
    : domain_(domain), storage_(make_storage(domain, rows, cols)) {}

ExactMatrix ExactMatrix::identity(const ScalarDomain& domain, std::size_t n) {
  ExactMatrix m(domain, n, n);
  std::visit(
      [n](auto& typed) {
        for (std::size_t i = 0; i < n; ++i) typed(i, i) = typed.field().one();
      },
      m.storage_);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const ScalarDomain& domain, std::size_t cols,
                                   const std::vector<ScalarVector>& rows) {
  ExactMatrix m(domain, rows.size(), cols);
  std::visit(
      [&](auto& typed) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r].size() != cols) throw InputError("from_rows: ragged row");
          for (std::size_t c = 0; c < cols; ++c) typed(r, c) = typed.field().from_rational(rows[r][c]);
        }
      },
      m.storage_);
  return m;
}

ExactMatrix ExactMatrix::from_columns(const ScalarDomain& domain, std::size_t rows,
                                      const std::vector<ScalarVector>& columns) {
  ExactMatrix m(domain, rows, columns.size());
  std::visit(
      [&](auto& typed) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
          if (columns[c].size() != rows) throw InputError("from_columns: column length mismatch");
          for (std::size_t r = 0; r < rows; ++r) typed(r, c) = typed.field().from_rational(columns[c][r]);
        }
      },
      m.storage_);
  return m;
}

std::size_t ExactMatrix::rows() const {
  return visit([](const auto& t) { return t.rows(); });
}

std::size_t ExactMatrix::cols() const {
  return visit([](const auto& t) { return t.cols(); });
}

void ExactMatrix::check_column(std::size_t c) const {
  if (c >= cols()) {
    throw InputError("column index " + std::to_string(c) + " out of range (" +
                     std::to_string(cols()) + " columns)");
  }
}

mpq_class ExactMatrix::at(std::size_t r, std::size_t c) const {
  check_column(c);
  if (r >= rows()) throw InputError("row index out of range");
  return visit([&](const auto& t) { return t.field().to_rational(t(r, c)); });
}

ScalarVector ExactMatrix::column(std::size_t c) const {
  check_column(c);
  return visit([&](const auto& t) { return from_field(t.field(), t.column(c)); });
}

bool ExactMatrix::is_zero_column(std::size_t c) const {
  check_column(c);
  return visit([&](const auto& t) { return t.is_zero_column(c); });
}

std::size_t ExactMatrix::rank() const {
  return visit([](const auto& t) { return full_rank(t); });
}

std::size_t ExactMatrix::rank(std::span<const std::size_t> cols) const {
  for (std::size_t c : cols) check_column(c);
  return visit([&](const auto& t) { return rank_of_columns(t, cols); });
}

bool ExactMatrix::in_span(std::size_t target, std::span<const std::size_t> generators) const {
  check_column(target);
  std::vector<std::size_t> with(generators.begin(), generators.end());
  with.push_back(target);
  return rank(with) == rank(generators);
}

bool ExactMatrix::in_span(const ScalarVector& target,
                          std::span<const std::size_t> generators) const {
  if (target.size() != rows()) {
    throw InputError("in_span: vector has " + std::to_string(target.size()) + " entries, expected " +
                     std::to_string(rows()));
  }
  for (std::size_t c : generators) check_column(c);
  return visit([&](const auto& t) {
    auto extended = t.select_columns(generators);
    using Matrix = std::decay_t<decltype(t)>;
    Matrix with(t.field(), t.rows(), generators.size() + 1);
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (std::size_t j = 0; j < generators.size(); ++j) with(r, j) = extended(r, j);
      with(r, generators.size()) = t.field().from_rational(target[r]);
    }
    return full_rank(with) == full_rank(extended);
  });
}

ExactMatrix ExactMatrix::row_basis() const {
  return visit([&](const auto& t) {
    const auto chosen = row_basis_indices(t);
    return ExactMatrix(domain_, Storage(t.select_rows(chosen)));
  });
}

std::vector<std::size_t> ExactMatrix::column_basis() const {
  return visit([](const auto& t) { return greedy_column_basis(t); });
}

mpq_class ExactMatrix::determinant(std::span<const std::size_t> rows_sel,
                                   std::span<const std::size_t> cols_sel) const {
  for (std::size_t c : cols_sel) check_column(c);
  for (std::size_t r : rows_sel) {
    if (r >= rows()) throw InputError("determinant: row index out of range");
  }
  return visit([&](const auto& t) {
    return t.field().to_rational(rankvc::determinant(t, rows_sel, cols_sel));
  });
}

ExactMatrix ExactMatrix::with_column(std::size_t c, const ScalarVector& v) const {
  check_column(c);
  if (v.size() != rows()) {
    throw InputError("with_column: vector has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(rows()));
  }
  return visit([&](const auto& t) {
    auto copy = t;
    const auto converted = to_field(t.field(), v);
    copy.set_column(c, converted);
    return ExactMatrix(domain_, Storage(std::move(copy)));
  });
}

ExactMatrix ExactMatrix::without_column(std::size_t c) const {
  check_column(c);
  return visit([&](const auto& t) { return ExactMatrix(domain_, Storage(t.without_column(c))); });
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> cols_sel) const {
  for (std::size_t c : cols_sel) check_column(c);
  return visit([&](const auto& t) { return ExactMatrix(domain_, Storage(t.select_columns(cols_sel))); });
}

ExactMatrix ExactMatrix::contract_column(std::size_t c) const {
  check_column(c);
  return visit([&](const auto& t) { return ExactMatrix(domain_, Storage(rankvc::contract_column(t, c))); });
}

ScalarVector ExactMatrix::linear_combination(std::span<const std::size_t> cols_sel,
                                             const ScalarVector& coeffs) const {
  if (cols_sel.size() != coeffs.size()) throw InputError("linear_combination: size mismatch");
  for (std::size_t c : cols_sel) check_column(c);
  return visit([&](const auto& t) {
    const auto& f = t.field();
    std::vector<std::decay_t<decltype(f.zero())>> acc(t.rows(), f.zero());
    for (std::size_t i = 0; i < cols_sel.size(); ++i) {
      const auto k = f.from_rational(coeffs[i]);
      if (f.is_zero(k)) continue;
      for (std::size_t r = 0; r < t.rows(); ++r) {
        acc[r] = f.add(acc[r], f.mul(k, t(r, cols_sel[i])));
      }
    }
    return from_field(f, acc);
  });
}

ExactMatrix ExactMatrix::symmetric_square(
    std::span<const std::pair<std::size_t, std::size_t>> pairs) const {
  for (const auto& [a, b] : pairs) {
    check_column(a);
    check_column(b);
  }
  return visit([&](const auto& t) {
    const auto& f = t.field();
    const std::size_t r = t.rows();
    using Matrix = std::decay_t<decltype(t)>;
    Matrix out(f, r * (r + 1) / 2, pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[j];
      std::size_t slot = 0;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = i; k < r; ++k, ++slot) {
          out(slot, j) = f.add(f.mul(t(i, a), t(k, b)), f.mul(t(k, a), t(i, b)));
        }
      }
    }
    return ExactMatrix(domain_, Storage(std::move(out)));
  });
}

ExactMatrix ExactMatrix::mod_reduce(const mpz_class& q) const {
  if (!domain_.is_rational()) throw InputError("mod_reduce: matrix is not over the rationals");
  const auto target = ScalarDomain::prime_field(q);
  const auto& src = std::get<DenseMatrix<RationalField>>(storage_);
  ExactMatrix out(target, src.rows(), src.cols());
  std::visit(
      [&](auto& dst) {
        for (std::size_t r = 0; r < src.rows(); ++r) {
          for (std::size_t c = 0; c < src.cols(); ++c) dst(r, c) = dst.field().from_rational(src(r, c));
        }
      },
      out.storage_);
  return out;
}

mpz_class ExactMatrix::max_entry_magnitude() const {
  mpz_class best = 0;
  const std::size_t nr = rows(), nc = cols();
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      const mpq_class x = at(r, c);
      mpz_class num = abs(x.get_num());
      if (num > best) best = num;
      if (x.get_den() > best) best = x.get_den();
    }
  }
  return best;
}

std::size_t ExactMatrix::max_entry_bits() const { return bit_length(max_entry_magnitude()); }

}  // namespace rankvc
