#pragma once

#include <cstddef>
#include <vector>

#include "jrka/matrix.hpp"

namespace jrka {

// Thin SVD triple A = U diag(sigma) V^T with U (n x r), sigma (r),
// V^T (r x m), sigma non-negative and non-increasing, U and V^T with
// orthonormal columns/rows. Singular vectors carry a fixed sign convention:
// the largest-magnitude entry of each column of U is non-negative.
struct SvdFactors {
  Matrix u;
  std::vector<double> sigma;
  Matrix vt;

  std::size_t rank() const { return sigma.size(); }
  std::size_t output_dim() const { return u.rows(); }
  std::size_t input_dim() const { return vt.cols(); }
};

// Full thin SVD, r = min(n, m). Rejects empty or non-finite input.
SvdFactors svd(const Matrix& a);

// Keep the top-k singular triplets, 1 <= k <= rank(f).
SvdFactors truncate(const SvdFactors& f, std::size_t k);

// U diag(sigma) V^T with the original n x m shape.
Matrix reconstruct(const SvdFactors& f);

// svd followed by truncate: the Eckart-Young-optimal rank-k approximation.
SvdFactors rank_k_approx(const Matrix& a, std::size_t k);

// Singular values only (no vectors); cheaper than svd().
std::vector<double> singular_values(const Matrix& a);

// Count of sigma_i > sigma_1 * max(n, m) * 2^-52, the conventional cutoff.
std::size_t numerical_rank(const SvdFactors& f);

double spectral_norm(const Matrix& a);

enum class Norm { frobenius, spectral };

double matrix_distance(const Matrix& a, const Matrix& b, Norm norm);

// Frobenius / spectral error of discarding all components beyond rank k,
// read directly off the spectrum: sqrt(sum_{i>k} sigma_i^2) and sigma_{k+1}.
double tail_frobenius(const std::vector<double>& sigma, std::size_t k);
double tail_spectral(const std::vector<double>& sigma, std::size_t k);

}  // namespace jrka
