#include "genmat/convert.hpp"

#include <string>

#include "genmat/errors.hpp"
#include "genmat/propagate.hpp"

namespace genmat {

DenseSquareMatrix to_adjacency(const HierarchicalTree& tree) {
  const int n = tree.node_count();
  DenseSquareMatrix a = DenseSquareMatrix::zero(n);
  // I - G with unit weights: ones exactly on the parent edges.
  for (int i = 1; i < n; ++i) a.at(i, tree.parent(i)) = 1.0;
  return a;
}

DenseSquareMatrix to_laplacian(const HierarchicalTree& tree) {
  const int n = tree.node_count();
  DenseSquareMatrix l = DenseSquareMatrix::zero(n);
  // G^T G accumulated row by row of G, then the e1 e1^T correction.
  l.at(0, 0) = 1.0;
  for (int i = 1; i < n; ++i) {
    const int p = tree.parent(i);
    l.at(i, i) += 1.0;
    l.at(p, p) += 1.0;
    l.at(i, p) -= 1.0;
    l.at(p, i) -= 1.0;
  }
  l.at(0, 0) -= 1.0;
  return l;
}

DenseSquareMatrix to_distance(const HierarchicalTree& tree, int cap) {
  const int n = tree.node_count();
  if (n > cap)
    throw SizeCapExceeded("distance matrix capped at " + std::to_string(cap) +
                          " nodes");
  const std::vector<double> depth = depths(tree);
  const DenseSquareMatrix ca = common_ancestor_counts(tree, cap);
  DenseSquareMatrix d = DenseSquareMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d.at(i, j) = depth[i] + depth[j] - 2.0 * ca.at(i, j);
  return d;
}

DenseSquareMatrix to_ancestral(const HierarchicalTree& tree, int cap) {
  const int n = tree.node_count();
  if (n > cap)
    throw SizeCapExceeded("ancestral matrix capped at " + std::to_string(cap) +
                          " nodes");
  const int m = tree.leaf_count();
  const int n1 = tree.internal_count();
  const DenseSquareMatrix ca = common_ancestor_counts(tree, cap);
  DenseSquareMatrix c = DenseSquareMatrix::zero(m);
  // Leaf rows/cols of (G^T G)^{-1} minus the all-ones matrix; leaves are the
  // contiguous tail of the ordering.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      c.at(i, j) = ca.at(n1 + i, n1 + j) - 1.0;
  return c;
}

}  // namespace genmat
