#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace jrka {

using Vec = std::vector<double>;

// Dense real matrix, row-major, IEEE-754 binary64. Immutable-by-convention:
// operations return new values instead of mutating shared state, so instances
// are safe to share across threads once built.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // zero-initialized

  // Validating constructor: checks data length and rejects NaN/Inf entries,
  // naming the first offending (row, col) in the diagnostic.
  static Matrix from_data(std::size_t rows, std::size_t cols, Vec data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }
  std::span<const double> values() const { return data_; }

  bool operator==(const Matrix& other) const = default;

  static Matrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Vec multiply(const Matrix& a, const Vec& x);
Matrix transpose(const Matrix& a);
Matrix subtract(const Matrix& a, const Matrix& b);

// A^T A (m x m Gram matrix), used by oracles and by projection helpers.
Matrix gram(const Matrix& a);

double frobenius_norm(const Matrix& a);
double dot(const Vec& a, const Vec& b);
double norm2(const Vec& x);

// Throws InvalidArgument naming the first non-finite entry, if any.
void require_finite(const Matrix& a, const std::string& what);

// Row-block extraction [begin, end).
Matrix take_rows(const Matrix& a, std::size_t begin, std::size_t end);

}  // namespace jrka
