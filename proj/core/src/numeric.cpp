#include "comoe/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "comoe/error.hpp"

namespace comoe {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Vec affine(const Matrix& w, const Vec& x, const Vec& b) {
  if (w.cols != x.size() || w.rows != b.size()) {
    throw DimensionError("affine: W is " + std::to_string(w.rows) + "x" +
                         std::to_string(w.cols) + ", x has " + std::to_string(x.size()) +
                         ", b has " + std::to_string(b.size()));
  }
  Vec y(w.rows);
  for (std::size_t r = 0; r < w.rows; ++r) {
    double acc = 0.0;
    const double* row = &w.data[r * w.cols];
    for (std::size_t c = 0; c < w.cols; ++c) acc += row[c] * x[c];
    y[r] = acc + b[r];
  }
  return y;
}

Vec relu(const Vec& x) {
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
  return y;
}

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Vec softmax(const Vec& logits) {
  if (logits.empty()) throw DimensionError("softmax: empty input");
  const double m = *std::max_element(logits.begin(), logits.end());
  Vec p(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - m);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

bool all_finite(const Matrix& m) { return all_finite(m.data); }

}  // namespace comoe
