#include "jrka/svd.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "jrka/error.hpp"

namespace jrka {

namespace {

// A row-major n x m buffer is the column-major m x n transpose, so we hand
// LAPACK the transposed problem A^T = Ub S Vb^T in its native layout and read
// the results back without any copies: Ub lands in our vt buffer and Vb^T in
// our u buffer (A = Vb S Ub^T).
int gesdd_thin(std::vector<double>& work_a, lapack_int n, lapack_int m, std::vector<double>& s,
               Matrix& u, Matrix& vt) {
  const lapack_int r = std::min(n, m);
  return LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', m, n, work_a.data(), m, s.data(), vt.data(), m,
                        u.data(), r);
}

int gesvd_thin(std::vector<double>& work_a, lapack_int n, lapack_int m, std::vector<double>& s,
               Matrix& u, Matrix& vt) {
  const lapack_int r = std::min(n, m);
  std::vector<double> superb(std::max<lapack_int>(1, r - 1));
  return LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'S', 'S', m, n, work_a.data(), m, s.data(), vt.data(),
                        m, u.data(), r, superb.data());
}

// Reproducible serialization needs a fixed sign: make the largest-magnitude
// entry of each left singular vector non-negative.
void apply_sign_convention(Matrix& u, Matrix& vt) {
  const std::size_t n = u.rows();
  const std::size_t r = u.cols();
  const std::size_t m = vt.cols();
  for (std::size_t j = 0; j < r; ++j) {
    double best = 0.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::abs(u(i, j));
      if (mag > best) {
        best = mag;
        best_i = i;
      }
    }
    if (u(best_i, j) < 0.0) {
      for (std::size_t i = 0; i < n; ++i) u(i, j) = -u(i, j);
      double* vrow = vt.row(j);
      for (std::size_t c = 0; c < m; ++c) vrow[c] = -vrow[c];
    }
  }
}

}  // namespace

SvdFactors svd(const Matrix& a) {
  if (a.empty()) throw InvalidArgument("svd: empty matrix");
  require_finite(a, "svd input");

  const auto n = static_cast<lapack_int>(a.rows());
  const auto m = static_cast<lapack_int>(a.cols());
  const lapack_int r = std::min(n, m);

  SvdFactors f;
  f.u = Matrix(a.rows(), static_cast<std::size_t>(r));
  f.vt = Matrix(static_cast<std::size_t>(r), a.cols());
  f.sigma.assign(static_cast<std::size_t>(r), 0.0);

  std::vector<double> work_a(a.data(), a.data() + a.size());
  int info = gesdd_thin(work_a, n, m, f.sigma, f.u, f.vt);
  if (info > 0) {
    // gesdd occasionally fails to converge; retry with the QR-iteration driver.
    work_a.assign(a.data(), a.data() + a.size());
    info = gesvd_thin(work_a, n, m, f.sigma, f.u, f.vt);
  }
  if (info != 0) {
    throw NumericError("svd: LAPACK driver failed with info=" + std::to_string(info) + " on " +
                       std::to_string(n) + "x" + std::to_string(m) + " matrix");
  }

  apply_sign_convention(f.u, f.vt);
  return f;
}

std::vector<double> singular_values(const Matrix& a) {
  if (a.empty()) throw InvalidArgument("singular_values: empty matrix");
  const auto n = static_cast<lapack_int>(a.rows());
  const auto m = static_cast<lapack_int>(a.cols());
  std::vector<double> s(static_cast<std::size_t>(std::min(n, m)), 0.0);
  std::vector<double> work_a(a.data(), a.data() + a.size());
  std::vector<double> superb(std::max<lapack_int>(1, std::min(n, m)));
  int info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n, work_a.data(), m, s.data(), nullptr,
                            1, nullptr, 1, superb.data());
  if (info != 0) {
    work_a.assign(a.data(), a.data() + a.size());
    info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, work_a.data(), m, s.data(), nullptr, 1,
                          nullptr, 1);
  }
  if (info != 0) {
    throw NumericError("singular_values: LAPACK driver failed with info=" + std::to_string(info));
  }
  return s;
}

SvdFactors truncate(const SvdFactors& f, std::size_t k) {
  const std::size_t r = f.rank();
  if (k < 1 || k > r) {
    throw InvalidArgument("truncate: k=" + std::to_string(k) + " outside valid range [1, " +
                          std::to_string(r) + "]");
  }
  if (k == r) return f;

  SvdFactors t;
  t.sigma.assign(f.sigma.begin(), f.sigma.begin() + static_cast<std::ptrdiff_t>(k));
  t.u = Matrix(f.u.rows(), k);
  for (std::size_t i = 0; i < f.u.rows(); ++i) {
    const double* src = f.u.row(i);
    std::copy(src, src + k, t.u.row(i));
  }
  t.vt = take_rows(f.vt, 0, k);
  return t;
}

Matrix reconstruct(const SvdFactors& f) {
  Matrix scaled_vt = f.vt;
  for (std::size_t i = 0; i < scaled_vt.rows(); ++i) {
    double* row = scaled_vt.row(i);
    const double s = f.sigma[i];
    for (std::size_t j = 0; j < scaled_vt.cols(); ++j) row[j] *= s;
  }
  return multiply(f.u, scaled_vt);
}

SvdFactors rank_k_approx(const Matrix& a, std::size_t k) {
  const std::size_t max_k = std::min(a.rows(), a.cols());
  if (k < 1 || k > max_k) {
    throw InvalidArgument("rank_k_approx: k=" + std::to_string(k) +
                          " outside valid range [1, " + std::to_string(max_k) + "]");
  }
  return truncate(svd(a), k);
}

std::size_t numerical_rank(const SvdFactors& f) {
  if (f.sigma.empty()) return 0;
  const double dim = static_cast<double>(std::max(f.output_dim(), f.input_dim()));
  const double cutoff = f.sigma.front() * dim * std::ldexp(1.0, -52);
  std::size_t rank = 0;
  for (double s : f.sigma) {
    if (s > cutoff) ++rank;
  }
  return rank;
}

double spectral_norm(const Matrix& a) { return singular_values(a).front(); }

double matrix_distance(const Matrix& a, const Matrix& b, Norm norm) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("matrix_distance: shape mismatch " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  if (norm == Norm::frobenius) {
    double sum = 0.0;
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
      const double d = a.data()[idx] - b.data()[idx];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  return spectral_norm(subtract(a, b));
}

double tail_frobenius(const std::vector<double>& sigma, std::size_t k) {
  double sum = 0.0;
  for (std::size_t i = sigma.size(); i > k; --i) sum += sigma[i - 1] * sigma[i - 1];
  return std::sqrt(sum);
}

double tail_spectral(const std::vector<double>& sigma, std::size_t k) {
  return k < sigma.size() ? sigma[k] : 0.0;
}

}  // namespace jrka
