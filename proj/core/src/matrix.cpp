#include "nichols/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace nichols {

OperatorMatrix::OperatorMatrix(FieldContextPtr ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, ExactScalar::zero(ctx_));
}

OperatorMatrix OperatorMatrix::identity(const FieldContextPtr& ctx, int n) {
  OperatorMatrix m(ctx, n, n);
  const ExactScalar one = ExactScalar::one(ctx);
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

OperatorMatrix OperatorMatrix::operator-() const {
  OperatorMatrix m = *this;
  for (ExactScalar& x : m.a_) x = -x;
  return m;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  OperatorMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  OperatorMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  OperatorMatrix m(a.ctx_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const ExactScalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const ExactScalar& y = b.at(k, j);
        if (y.is_zero()) continue;
        m.at(i, j) += x * y;
      }
    }
  }
  return m;
}

OperatorMatrix OperatorMatrix::scaled(const ExactScalar& c) const {
  OperatorMatrix m = *this;
  for (ExactScalar& x : m.a_) x = x * c;
  return m;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (!(a.a_[i] == b.a_[i])) return false;
  return true;
}

bool OperatorMatrix::is_zero() const {
  for (const ExactScalar& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// One-step fraction-free elimination.  Returns the rank; if det_out is given
// the matrix must be square and the signed last pivot (or zero) is stored.
int bareiss(OperatorMatrix m, ExactScalar* det_out) {
  const int rows = m.rows(), cols = m.cols();
  const FieldContextPtr& ctx = m.context();
  ExactScalar prev = ExactScalar::one(ctx);
  int sign = 1;
  int r = 0;
  bool deficient = false;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      deficient = true;
      continue;
    }
    if (pivot != r) {
      for (int j = col; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m.at(i, j) = (m.at(r, col) * m.at(i, j) - m.at(i, col) * m.at(r, j)) / prev;
      m.at(i, col) = ExactScalar::zero(ctx);
    }
    prev = m.at(r, col);
    ++r;
  }
  if (det_out) {
    if (r < rows || deficient)
      *det_out = ExactScalar::zero(ctx);
    else
      *det_out = sign > 0 ? prev : -prev;
  }
  return r;
}

}  // namespace

ExactScalar OperatorMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return ExactScalar::one(ctx_);
  ExactScalar d = ExactScalar::zero(ctx_);
  bareiss(*this, &d);
  return d;
}

int OperatorMatrix::rank() const { return bareiss(*this, nullptr); }

}  // namespace nichols
