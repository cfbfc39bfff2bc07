#include "jrka/subspace.hpp"

#include <cblas.h>

#include <cmath>
#include <utility>

#include "jrka/error.hpp"

namespace jrka {

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.cols() > basis_.rows()) {
    throw InvalidArgument("subspace basis has more columns than ambient dimensions: " +
                          std::to_string(basis_.rows()) + "x" + std::to_string(basis_.cols()));
  }
  const Matrix g = gram(basis_);
  double max_dev = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      max_dev = std::max(max_dev, std::abs(g(i, j) - target));
    }
  }
  if (max_dev >= 1e-8) {
    throw InvalidArgument("subspace basis is not orthonormal: max |B^T B - I| = " +
                          std::to_string(max_dev));
  }
}

Vec project_parallel(const Vec& x, const Subspace& s) {
  if (x.size() != s.ambient_dim()) {
    throw InvalidArgument("projection dimension mismatch: vector of length " +
                          std::to_string(x.size()) + " vs ambient dimension " +
                          std::to_string(s.ambient_dim()));
  }
  const Matrix& b = s.basis();
  Vec coeffs(s.dim(), 0.0);  // B^T x
  cblas_dgemv(CblasRowMajor, CblasTrans, static_cast<int>(b.rows()), static_cast<int>(b.cols()),
              1.0, b.data(), static_cast<int>(b.cols()), x.data(), 1, 0.0, coeffs.data(), 1);
  Vec parallel(s.ambient_dim(), 0.0);  // B (B^T x)
  cblas_dgemv(CblasRowMajor, CblasNoTrans, static_cast<int>(b.rows()),
              static_cast<int>(b.cols()), 1.0, b.data(), static_cast<int>(b.cols()),
              coeffs.data(), 1, 0.0, parallel.data(), 1);
  return parallel;
}

Vec project_perp(const Vec& x, const Subspace& s) {
  Vec parallel = project_parallel(x, s);
  Vec perp(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) perp[i] = x[i] - parallel[i];
  return perp;
}

Matrix project_columns_parallel(const Matrix& x, const Subspace& s) {
  if (x.rows() != s.ambient_dim()) {
    throw InvalidArgument("projection dimension mismatch: matrix with " +
                          std::to_string(x.rows()) + " rows vs ambient dimension " +
                          std::to_string(s.ambient_dim()));
  }
  const Matrix& b = s.basis();
  return multiply(b, multiply(transpose(b), x));
}

}  // namespace jrka
