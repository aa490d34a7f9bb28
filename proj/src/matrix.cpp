#include "lts/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lts {

Vector zero_vector(Field field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(Field field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = field.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const Scalar& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator*(const Scalar& a, Vector v) {
  for (Scalar& s : v) s *= a;
  return v;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const Vector& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

void Matrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
  for (const Scalar& s : v) {
    if (!(s.field() == field_)) throw std::invalid_argument("append_row: field mismatch");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Vector Matrix::left_multiply(std::span<const Scalar> v) const {
  if (v.size() != rows_) throw std::invalid_argument("left_multiply: dimension mismatch");
  Vector out = zero_vector(field_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) axpy(out, v[r], row(r));
  return out;
}

Vector Matrix::right_multiply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("right_multiply: dimension mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row = b.left_multiply(a.row(r));
    std::copy(row.begin(), row.end(), out.row(r).begin());
  }
  return out;
}

Echelon rref(const Matrix& m) {
  Matrix work = m;
  const Field field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < work.cols() && lead < work.rows(); ++c) {
    std::size_t p = lead;
    while (p < work.rows() && work.at(p, c).is_zero()) ++p;
    if (p == work.rows()) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < work.cols(); ++k) std::swap(work.at(p, k), work.at(lead, k));
    }
    const Scalar inv = work.at(lead, c).inverse();
    for (std::size_t k = c; k < work.cols(); ++k) work.at(lead, k) *= inv;
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r == lead || work.at(r, c).is_zero()) continue;
      const Scalar factor = work.at(r, c);
      for (std::size_t k = c; k < work.cols(); ++k) {
        if (!work.at(lead, k).is_zero()) work.at(r, k) -= factor * work.at(lead, k);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(field, 0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) reduced.append_row(work.row(r));
  return {std::move(reduced), std::move(pivots)};
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::domain_error("inverse of a non-square matrix");
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field().one();
  }
  const Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.reduced.at(r, n + c);
  }
  return inv;
}

}  // namespace lts
