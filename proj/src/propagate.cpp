#include "genmat/propagate.hpp"

#include <algorithm>
#include <string>

#include "genmat/errors.hpp"

namespace genmat {

std::vector<double> solve_upward(const GenerationMatrix& g,
                                 std::span<const double> v) {
  const int n = g.size();
  if (static_cast<int>(v.size()) != n)
    throw DimensionMismatch("vector length differs from matrix order");
  std::vector<double> z(v.begin(), v.end());
  // Descending sweep: each node is finalized after all of its children, then
  // pushes its contribution to the parent row of G^T.
  for (int i = n - 1; i >= 1; --i) {
    z[i] /= g.diag(i);
    z[g.tree().parent(i)] -= g.off(i) * z[i];
  }
  z[0] /= g.diag(0);
  return z;
}

std::vector<double> solve_downward(const GenerationMatrix& g,
                                   std::span<const double> v) {
  const int n = g.size();
  if (static_cast<int>(v.size()) != n)
    throw DimensionMismatch("vector length differs from matrix order");
  std::vector<double> z(v.begin(), v.end());
  z[0] /= g.diag(0);
  for (int i = 1; i < n; ++i)
    z[i] = (z[i] - g.off(i) * z[g.tree().parent(i)]) / g.diag(i);
  return z;
}

std::vector<double> child_counts(const HierarchicalTree& tree) {
  const int n = tree.node_count();
  // (I - G^T) 1 with unit weights: 1 - column sums of the structure matrix.
  std::vector<double> z(n, 0.0);
  for (int i = 1; i < n; ++i) z[tree.parent(i)] += 1.0;
  return z;
}

std::vector<double> subtree_sizes(const HierarchicalTree& tree) {
  const int n = tree.node_count();
  // G^{-T} 1: the upward solve with unit weights (divisions drop out).
  std::vector<double> z(n, 1.0);
  for (int i = n - 1; i >= 1; --i) z[tree.parent(i)] += z[i];
  return z;
}

std::vector<double> depths(const HierarchicalTree& tree) {
  const int n = tree.node_count();
  // G^{-1} 1: the downward solve with unit weights.
  std::vector<double> z(n, 1.0);
  for (int i = 1; i < n; ++i) z[i] += z[tree.parent(i)];
  return z;
}

double SparseMatrix::at(int i, int j) const {
  const auto& row = row_entries[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, int c) { return e.col < c; });
  return (it != row.end() && it->col == j) ? it->value : 0.0;
}

namespace {
void check_relation_cap(const HierarchicalTree& tree, int cap) {
  if (tree.node_count() > cap)
    throw SizeCapExceeded("relation matrix capped at " + std::to_string(cap) +
                          " nodes");
}
}  // namespace

SparseMatrix ancestor_indicator(const HierarchicalTree& tree, int cap) {
  check_relation_cap(tree, cap);
  const int n = tree.node_count();
  SparseMatrix m{.rows = n, .cols = n, .row_entries = {}};
  m.row_entries.resize(n);
  // Row recursion of the inverse: row_i = e_i + row_{parent(i)}.
  m.row_entries[0] = {{0, 1.0}};
  for (int i = 1; i < n; ++i) {
    m.row_entries[i] = m.row_entries[tree.parent(i)];
    m.row_entries[i].push_back({i, 1.0});  // parent cols all precede i
  }
  return m;
}

SparseMatrix sibling_indicator(const HierarchicalTree& tree, int cap) {
  check_relation_cap(tree, cap);
  const int n = tree.node_count();
  SparseMatrix m{.rows = n, .cols = n, .row_entries = {}};
  m.row_entries.resize(n);

  // G G^T: rows i and j interact exactly when they share a column, i.e. when
  // one is the column owner k and the other a child of k, or both are
  // children of k. Accumulate per column.
  std::vector<std::vector<int>> children(n);
  for (int i = 1; i < n; ++i) children[tree.parent(i)].push_back(i);

  for (int i = 0; i < n; ++i)
    m.row_entries[i].push_back({i, i == 0 ? 1.0 : 2.0});
  for (int k = 0; k < n; ++k) {
    for (int c : children[k]) {
      m.row_entries[k].push_back({c, -1.0});
      m.row_entries[c].push_back({k, -1.0});
      for (int d : children[k])
        if (d != c) m.row_entries[c].push_back({d, 1.0});
    }
  }
  for (auto& row : m.row_entries)
    std::sort(row.begin(), row.end(),
              [](const SparseMatrix::Entry& a, const SparseMatrix::Entry& b) {
                return a.col < b.col;
              });
  return m;
}

DenseSquareMatrix common_ancestor_counts(const HierarchicalTree& tree, int cap) {
  check_relation_cap(tree, cap);
  const int n = tree.node_count();
  auto t = std::make_shared<const HierarchicalTree>(tree);
  GenerationMatrix g = GenerationMatrix::structure(std::move(t));
  DenseSquareMatrix m = DenseSquareMatrix::zero(n);
  // Column j of (G^T G)^{-1} = G^{-1}(G^{-T} e_j), one pair of solves each.
  std::vector<double> e(n, 0.0);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    std::vector<double> col = solve_downward(g, solve_upward(g, e));
    for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
    e[j] = 0.0;
  }
  return m;
}

}  // namespace genmat
