#include "jrka/matrix.hpp"

#include <cblas.h>

#include <cmath>
#include <utility>

#include "jrka/error.hpp"

namespace jrka {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) {
    throw InvalidArgument("matrix dimensions must be positive, got " + std::to_string(rows) +
                          "x" + std::to_string(cols));
  }
}

Matrix Matrix::from_data(std::size_t rows, std::size_t cols, Vec data) {
  if (data.size() != rows * cols) {
    throw InvalidArgument("matrix data length " + std::to_string(data.size()) +
                          " does not match shape " + std::to_string(rows) + "x" +
                          std::to_string(cols));
  }
  Matrix m(rows, cols);
  m.data_ = std::move(data);
  require_finite(m, "matrix data");
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

void require_finite(const Matrix& a, const std::string& what) {
  const double* p = a.data();
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    if (!std::isfinite(p[idx])) {
      const std::size_t i = idx / a.cols();
      const std::size_t j = idx % a.cols();
      throw InvalidArgument(what + ": non-finite entry at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
    }
  }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.cols());
  cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(a.rows()),
              static_cast<int>(b.cols()), static_cast<int>(a.cols()), 1.0, a.data(),
              static_cast<int>(a.cols()), b.data(), static_cast<int>(b.cols()), 0.0, c.data(),
              static_cast<int>(c.cols()));
  return c;
}

Vec multiply(const Matrix& a, const Vec& x) {
  if (a.cols() != x.size()) {
    throw InvalidArgument("matrix-vector shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * vector of length " +
                          std::to_string(x.size()));
  }
  Vec y(a.rows(), 0.0);
  cblas_dgemv(CblasRowMajor, CblasNoTrans, static_cast<int>(a.rows()),
              static_cast<int>(a.cols()), 1.0, a.data(), static_cast<int>(a.cols()), x.data(), 1,
              0.0, y.data(), 1);
  return y;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* src = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = src[j];
  }
  return t;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("matrix difference shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  Matrix c(a.rows(), a.cols());
  for (std::size_t idx = 0; idx < a.size(); ++idx) c.data()[idx] = a.data()[idx] - b.data()[idx];
  return c;
}

Matrix gram(const Matrix& a) {
  Matrix g(a.cols(), a.cols());
  cblas_dsyrk(CblasRowMajor, CblasUpper, CblasTrans, static_cast<int>(a.cols()),
              static_cast<int>(a.rows()), 1.0, a.data(), static_cast<int>(a.cols()), 0.0,
              g.data(), static_cast<int>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
  }
  return g;
}

double frobenius_norm(const Matrix& a) {
  return cblas_dnrm2(static_cast<int>(a.size()), a.data(), 1);
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("dot product length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  return cblas_ddot(static_cast<int>(a.size()), a.data(), 1, b.data(), 1);
}

double norm2(const Vec& x) { return cblas_dnrm2(static_cast<int>(x.size()), x.data(), 1); }

Matrix take_rows(const Matrix& a, std::size_t begin, std::size_t end) {
  if (begin >= end || end > a.rows()) {
    throw InvalidArgument("row range [" + std::to_string(begin) + ", " + std::to_string(end) +
                          ") out of bounds for " + std::to_string(a.rows()) + " rows");
  }
  Matrix block(end - begin, a.cols());
  std::copy(a.row(begin), a.row(begin) + (end - begin) * a.cols(), block.data());
  return block;
}

}  // namespace jrka
