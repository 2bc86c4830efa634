#pragma once

#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

// Dense matrix of exact scalars.  Rank, determinant and kernel dimension use
// fraction-free (Bareiss) elimination with first-nonzero pivoting, so results
// and intermediate values are deterministic and exact.
class OperatorMatrix {
 public:
  OperatorMatrix(FieldContextPtr ctx, int rows, int cols);
  static OperatorMatrix identity(const FieldContextPtr& ctx, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldContextPtr& context() const { return ctx_; }

  ExactScalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const ExactScalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  OperatorMatrix operator-() const;
  friend OperatorMatrix operator+(const OperatorMatrix&, const OperatorMatrix&);
  friend OperatorMatrix operator-(const OperatorMatrix&, const OperatorMatrix&);
  friend OperatorMatrix operator*(const OperatorMatrix&, const OperatorMatrix&);
  OperatorMatrix scaled(const ExactScalar& c) const;
  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&);

  bool is_zero() const;

  ExactScalar det() const;  // requires square
  int rank() const;
  int kernel_dim() const { return cols() - rank(); }

 private:
  FieldContextPtr ctx_;
  int rows_, cols_;
  std::vector<ExactScalar> a_;
};

}  // namespace nichols
