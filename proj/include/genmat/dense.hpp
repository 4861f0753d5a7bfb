#pragma once

#include <vector>

namespace genmat {

/// Row-major dense square matrix; plain value type for conversion outputs
/// and small analytic matrices.
struct DenseSquareMatrix {
  int order = 0;
  std::vector<double> entries;  // order * order, row-major

  static DenseSquareMatrix zero(int n) {
    return DenseSquareMatrix{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  }
  double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }
  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
};

/// Row-major dense rectangular matrix (rows >= cols in the QR context).
struct DenseRectMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> entries;  // rows * cols, row-major

  static DenseRectMatrix zero(int r, int c) {
    return DenseRectMatrix{r, c, std::vector<double>(static_cast<std::size_t>(r) * c, 0.0)};
  }
  double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

}  // namespace genmat
