#include "kirby4/matrix.hpp"

#include <utility>

#include "kirby4/error.hpp"

namespace kirby4 {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InvalidPD: return "InvalidPD";
    case ErrorCode::FramingCountMismatch: return "FramingCountMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotIndefinite: return "NotIndefinite";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

std::int64_t to_int64(const Integer& v) {
  if (!fits_int64(v)) {
    throw Error(ErrorCode::ResourceLimit, "integer " + v.get_str() + " exceeds 62 bits");
  }
  return v.get_si();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(*this);
  for (auto& v : r.data_) v = -v;
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols_ != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  IntVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * x[j];
  return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a(m);
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const Integer det = determinant(m);
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotUnimodular, "determinant " + det.get_str() + " is not +-1");
  }
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = Rational(m(i, j));
    at(i, n + i) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (at(p, k) == 0) ++p;
    if (p != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(k, j));
    const Rational pivot = at(k, k);
    for (std::size_t j = 0; j < 2 * n; ++j) at(k, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || at(i, k) == 0) continue;
      const Rational f = at(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = at(i, n + j);
      if (v.get_den() != 1) throw Error(ErrorCode::InternalInvariantViolation, "non-integral inverse");
      inv(i, j) = v.get_num();
    }
  return inv;
}

SymIntMatrix::SymIntMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw Error(ErrorCode::DimensionMismatch, "symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
}

SymIntMatrix SymIntMatrix::diagonal(const std::vector<long>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SymIntMatrix(std::move(m));
}

Integer SymIntMatrix::bilinear(const IntVector& x, const IntVector& y) const {
  const std::size_t n = size();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += m_(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

SymIntMatrix SymIntMatrix::congruent_by(const IntMatrix& a) const {
  return SymIntMatrix(a.transposed() * m_ * a);
}

SymIntMatrix direct_sum(const SymIntMatrix& a, const SymIntMatrix& b) {
  const std::size_t n = a.size(), k = b.size();
  IntMatrix m(n + k, n + k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(n + i, n + j) = b(i, j);
  return SymIntMatrix(std::move(m));
}

SymIntMatrix e8_form() {
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  auto edge = [&](std::size_t u, std::size_t v) { m(u, v) = m(v, u) = -1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return SymIntMatrix(std::move(m));
}

}  // namespace kirby4
