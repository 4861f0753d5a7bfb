#pragma once

#include "genmat/dense.hpp"
#include "genmat/tree.hpp"

namespace genmat {

/// Conversions are analysis tools, not the scale path.
inline constexpr int kDenseConversionCap = 10000;

/// A = I - G: ones exactly at (i, parent(i)).
DenseSquareMatrix to_adjacency(const HierarchicalTree& tree);

/// L = G^T G - e1 e1^T: the graph Laplacian of the underlying tree.
DenseSquareMatrix to_laplacian(const HierarchicalTree& tree);

/// D(i,j) = path length between i and j, via depth_i + depth_j - 2 * (depth
/// of the nearest common ancestor). Throws SizeCapExceeded above the cap.
DenseSquareMatrix to_distance(const HierarchicalTree& tree,
                              int cap = kDenseConversionCap);

/// m x m ancestral matrix over the leaves: (i,j) = distance from the nearest
/// common ancestor of leaves i and j to the root. Throws SizeCapExceeded.
DenseSquareMatrix to_ancestral(const HierarchicalTree& tree,
                               int cap = kDenseConversionCap);

}  // namespace genmat
