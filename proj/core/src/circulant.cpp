#include "fourcirc/circulant.hpp"

#include <string>

#include "fourcirc/error.hpp"

namespace fourcirc {

namespace {

void require_unit(RingElement lambda) {
  if (!lambda.is_unit()) throw Error(ErrorKind::NonUnitLambda, "lambda must be a unit");
}

}  // namespace

RingMatrix::RingMatrix(Alphabet alphabet, std::size_t rows, std::size_t cols)
    : alphabet_(alphabet), cols_(cols), data_(rows, RingVector(alphabet, cols)) {}

RingMatrix::RingMatrix(Alphabet alphabet, std::vector<RingVector> rows) : alphabet_(alphabet) {
  if (!rows.empty()) cols_ = rows.front().size();
  for (const auto& r : rows) {
    if (r.alphabet() != alphabet) throw Error(ErrorKind::AlphabetMismatch, "matrix row alphabet");
    if (r.size() != cols_) throw Error(ErrorKind::LengthMismatch, "matrix rows of unequal length");
  }
  data_ = std::move(rows);
}

RingMatrix RingMatrix::identity(Alphabet alphabet, std::size_t n) {
  RingMatrix m(alphabet, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, RingElement::one(alphabet));
  return m;
}

RingMatrix RingMatrix::all_ones(Alphabet alphabet, std::size_t n) {
  std::vector<RingVector> rows(n, RingVector::constant(alphabet, n, RingElement::one(alphabet)));
  return {alphabet, std::move(rows)};
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(alphabet_, cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

RingMatrix RingMatrix::operator*(const RingMatrix& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw Error(ErrorKind::AlphabetMismatch, "matrix product");
  if (cols_ != rhs.rows()) throw Error(ErrorKind::LengthMismatch, "matrix product shape mismatch");
  RingMatrix out(alphabet_, rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      RingElement s = RingElement::zero(alphabet_);
      for (std::size_t k = 0; k < cols_; ++k) s += at(r, k) * rhs.at(k, c);
      out.set(r, c, s);
    }
  }
  return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw Error(ErrorKind::AlphabetMismatch, "matrix sum");
  if (rows() != rhs.rows() || cols_ != rhs.cols_) throw Error(ErrorKind::LengthMismatch, "matrix sum");
  RingMatrix out = *this;
  for (std::size_t r = 0; r < rows(); ++r) out.data_[r] += rhs.data_[r];
  return out;
}

RingMatrix RingMatrix::hconcat(const RingMatrix& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw Error(ErrorKind::AlphabetMismatch, "hconcat");
  if (rows() != rhs.rows()) throw Error(ErrorKind::LengthMismatch, "hconcat row counts");
  RingMatrix out(alphabet_, rows(), cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    for (std::size_t c = 0; c < rhs.cols_; ++c) out.set(r, cols_ + c, rhs.at(r, c));
  }
  return out;
}

RingMatrix RingMatrix::vconcat(const RingMatrix& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw Error(ErrorKind::AlphabetMismatch, "vconcat");
  if (rows() > 0 && rhs.rows() > 0 && cols_ != rhs.cols_) throw Error(ErrorKind::LengthMismatch, "vconcat");
  std::vector<RingVector> all = data_;
  all.insert(all.end(), rhs.data_.begin(), rhs.data_.end());
  return {alphabet_, std::move(all)};
}

BitMatrix RingMatrix::to_bits() const {
  if (alphabet_ != Alphabet::F2) throw Error(ErrorKind::AlphabetMismatch, "to_bits needs an F2 matrix");
  BitMatrix out(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c).constant());
  }
  return out;
}

RingVector sigma_lambda(const RingVector& row, RingElement lambda) {
  require_unit(lambda);
  const std::size_t n = row.size();
  RingVector out(row.alphabet(), n);
  if (n == 0) return out;
  out.set(0, lambda * row[n - 1]);
  for (std::size_t i = 1; i < n; ++i) out.set(i, row[i - 1]);
  return out;
}

RingVector rho_lambda(const RingVector& row, RingElement lambda) {
  require_unit(lambda);
  const std::size_t n = row.size();
  RingVector out(row.alphabet(), n);
  if (n == 0) return out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.set(i, row[i + 1]);
  out.set(n - 1, lambda * row[0]);
  return out;
}

RingMatrix build(const CirculantSpec& spec) {
  require_unit(spec.lambda);
  if (spec.first_row.empty()) throw Error(ErrorKind::InvalidArgument, "circulant of order 0");
  if (spec.lambda.alphabet() != spec.first_row.alphabet()) {
    throw Error(ErrorKind::AlphabetMismatch, "lambda and first row");
  }
  const std::size_t n = spec.first_row.size();
  std::vector<RingVector> rows;
  rows.reserve(n);
  rows.push_back(spec.first_row);
  for (std::size_t i = 1; i < n; ++i) {
    rows.push_back(spec.kind == CirculantKind::Circulant ? sigma_lambda(rows.back(), spec.lambda)
                                                         : rho_lambda(rows.back(), spec.lambda));
  }
  return {spec.first_row.alphabet(), std::move(rows)};
}

RingMatrix lambda_circulant(const RingVector& first_row, RingElement lambda) {
  return build({lambda, first_row, CirculantKind::Circulant});
}

RingMatrix lambda_reverse_circulant(const RingVector& first_row, RingElement lambda) {
  return build({lambda, first_row, CirculantKind::ReverseCirculant});
}

RingMatrix backdiagonal(std::size_t n, Alphabet alphabet) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "backdiagonal of order 0");
  RingMatrix d(alphabet, n, n);
  for (std::size_t i = 0; i < n; ++i) d.set(i, n - 1 - i, RingElement::one(alphabet));
  return d;
}

bool is_lambda_circulant(const RingMatrix& m, RingElement lambda) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i + 1 < m.rows(); ++i) {
    if (sigma_lambda(m.row(i), lambda) != m.row(i + 1)) return false;
  }
  return true;
}

bool is_lambda_reverse_circulant(const RingMatrix& m, RingElement lambda) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i + 1 < m.rows(); ++i) {
    if (rho_lambda(m.row(i), lambda) != m.row(i + 1)) return false;
  }
  return true;
}

}  // namespace fourcirc
