#include "genmat/lqr.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "genmat/errors.hpp"

namespace genmat {

DenseRectMatrix householder_step(const DenseRectMatrix& m,
                                 std::span<const int> selected, int column) {
  const int r = static_cast<int>(selected.size());
  if (column < 0 || column >= m.cols)
    throw InvalidParam("reference column out of range");
  std::vector<char> seen(static_cast<std::size_t>(m.rows), 0);
  for (int s : selected) {
    if (s < 0 || s >= m.rows) throw InvalidParam("selected row out of range");
    if (seen[s]) throw InvalidParam("selected rows must be distinct");
    seen[s] = 1;
  }

  // omega = m_vec - ||m_vec|| e1 on the selected subcolumn.
  std::vector<double> omega(r);
  double norm_sq = 0.0;
  for (int i = 0; i < r; ++i) {
    omega[i] = m.at(selected[i], column);
    norm_sq += omega[i] * omega[i];
  }
  if (norm_sq == 0.0)
    throw ZeroPivotColumn("selected column entries are all zero");
  const double norm = std::sqrt(norm_sq);
  omega[0] -= norm;

  double omega_sq = 0.0;
  for (double w : omega) omega_sq += w * w;
  DenseRectMatrix y = m;
  if (omega_sq == 0.0) return y;  // already aligned with +e1: Q = I

  // Y = M - (2 / w^T w) * H^T w (w^T H M): a rank-1 update of the selected rows.
  const double factor = 2.0 / omega_sq;
  for (int c = 0; c < m.cols; ++c) {
    double dot = 0.0;
    for (int i = 0; i < r; ++i) dot += omega[i] * y.at(selected[i], c);
    const double scale = factor * dot;
    for (int i = 0; i < r; ++i) y.at(selected[i], c) -= omega[i] * scale;
  }
  return y;
}

namespace {

std::vector<int> lower_reduction_rows(int rows, int cols, int pivot) {
  // <pivot, 0..pivot-1, cols..rows-1>, the selection that zeroes a column
  // of the lower block while preserving the untouched trailing rows.
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(pivot + 1 + rows - cols));
  s.push_back(pivot);
  for (int i = 0; i < pivot; ++i) s.push_back(i);
  for (int i = cols; i < rows; ++i) s.push_back(i);
  return s;
}

}  // namespace

DenseRectMatrix lo_qr(const DenseRectMatrix& m, int cap) {
  if (m.rows > cap)
    throw SizeCapExceeded("decomposition capped at " + std::to_string(cap) +
                          " rows");
  if (m.rows < m.cols) throw InvalidParam("matrix must not be wide");
  DenseRectMatrix r = m;
  for (int pivot = m.cols - 1; pivot >= 0; --pivot) {
    const std::vector<int> rows = lower_reduction_rows(m.rows, m.cols, pivot);
    try {
      r = householder_step(r, rows, pivot);
    } catch (const ZeroPivotColumn&) {
      throw RankDeficient("column " + std::to_string(pivot + 1) +
                          " vanished during reduction");
    }
  }
  return r;
}

InvariantReport check_invariants_under_reduction(const HierarchicalTree& tree,
                                                 int cap) {
  const int n = tree.node_count();
  const int n1 = tree.internal_count();
  if (n > cap)
    throw SizeCapExceeded("invariant check capped at " + std::to_string(cap) +
                          " rows");
  InvariantReport report;
  if (n1 <= 1) return report;  // no intermediate steps to inspect

  DenseRectMatrix m = DenseRectMatrix::zero(n, n1);
  for (int j = 0; j < n1; ++j) m.at(j, j) = 1.0;
  for (int i = 1; i < n; ++i) m.at(i, tree.parent(i)) = -1.0;

  const TreePtr inner = k_order_subtree(tree, 1);
  auto fail = [&](int step, char property, std::string detail) {
    report.pass = false;
    report.failed_step = step;
    report.failed_property = property;
    report.detail = std::move(detail);
  };

  for (int step = 1; step <= n1 - 1; ++step) {
    const int pivot = n1 - step;
    m = householder_step(m, lower_reduction_rows(n, n1, pivot), pivot);

    double scale = 0.0;
    for (double e : m.entries) scale = std::max(scale, std::abs(e));
    const double tol = 1e-10 * scale;

    // a) the upper block keeps the subtree's generation-matrix pattern
    for (int i = 0; i < n1 && report.pass; ++i)
      for (int j = 0; j < n1; ++j) {
        const bool structural = (i == j) || (j == inner->parent(i));
        if (structural && std::abs(m.at(i, j)) <= tol) {
          fail(step, 'a', "structural entry vanished at row " +
                              std::to_string(i + 1));
          break;
        }
        if (!structural && std::abs(m.at(i, j)) > tol) {
          fail(step, 'a', "fill-in at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
          break;
        }
      }
    // b) each lower row carries exactly one nonzero
    for (int i = n1; i < n && report.pass; ++i) {
      int nonzeros = 0;
      for (int j = 0; j < n1; ++j)
        if (std::abs(m.at(i, j)) > tol) ++nonzeros;
      if (nonzeros != 1)
        fail(step, 'b', "lower row " + std::to_string(i + 1) + " has " +
                            std::to_string(nonzeros) + " nonzeros");
    }
    // c) the last `step` lower-block columns are zero
    for (int i = n1; i < n && report.pass; ++i)
      for (int j = n1 - step; j < n1; ++j)
        if (std::abs(m.at(i, j)) > tol) {
          fail(step, 'c', "cleared column " + std::to_string(j + 1) +
                              " re-filled at row " + std::to_string(i + 1));
          break;
        }
    if (!report.pass) break;
  }
  return report;
}

}  // namespace genmat
