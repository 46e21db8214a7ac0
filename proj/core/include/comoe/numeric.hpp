#pragma once

#include <cstddef>
#include <vector>

namespace comoe {

using Vec = std::vector<double>;

/// Dense row-major matrix of doubles. All model math in this project is
/// 64-bit; summation orders are fixed so results are bit-reproducible.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major, rows*cols entries

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  static Matrix zeros(std::size_t r, std::size_t c) { return Matrix(r, c); }
  static Matrix identity(std::size_t n);

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// W*x + b. Throws DimensionError on shape mismatch.
Vec affine(const Matrix& w, const Vec& x, const Vec& b);

/// Elementwise max(0, x).
Vec relu(const Vec& x);

/// 1 / (1 + e^-x), sign-split so neither branch overflows.
double sigmoid(double x);

/// Max-subtracted softmax; entries positive, sum 1 (within 1e-12).
Vec softmax(const Vec& logits);

/// True iff every entry is finite.
bool all_finite(const Vec& v);
bool all_finite(const Matrix& m);

}  // namespace comoe
