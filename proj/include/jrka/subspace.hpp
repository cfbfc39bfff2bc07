#pragma once

#include "jrka/matrix.hpp"

namespace jrka {

// A k-dimensional subspace of R^n, held as an n x k matrix with orthonormal
// columns (checked on construction, max |B^T B - I| < 1e-8).
class Subspace {
 public:
  explicit Subspace(Matrix basis);

  const Matrix& basis() const { return basis_; }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }

 private:
  Matrix basis_;
};

// parallel = B B^T x; perp = x - parallel.
Vec project_parallel(const Vec& x, const Subspace& s);
Vec project_perp(const Vec& x, const Subspace& s);

// Column-wise projection of a matrix's columns onto the subspace: B B^T X.
Matrix project_columns_parallel(const Matrix& x, const Subspace& s);

}  // namespace jrka
