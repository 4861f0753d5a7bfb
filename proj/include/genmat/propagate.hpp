#pragma once

#include <span>
#include <vector>

#include "genmat/dense.hpp"
#include "genmat/generation_matrix.hpp"
#include "genmat/tree.hpp"

namespace genmat {

/// Solves G^T z = v exactly by the leaf-to-root recursion (one descending
/// index sweep). Simulates bottom-up aggregation on the tree.
std::vector<double> solve_upward(const GenerationMatrix& g,
                                 std::span<const double> v);

/// Solves G z = v exactly by the root-to-leaf recursion (one ascending
/// index sweep). Simulates top-down accumulation on the tree.
std::vector<double> solve_downward(const GenerationMatrix& g,
                                   std::span<const double> v);

// Structural vectors, each realized as the matrix expression over the
// structure matrix. Values are exact small integers.
std::vector<double> child_counts(const HierarchicalTree& tree);    // (I - G^T) 1
std::vector<double> subtree_sizes(const HierarchicalTree& tree);   // G^{-T} 1
std::vector<double> depths(const HierarchicalTree& tree);          // G^{-1} 1

/// Sparse real matrix with sorted per-row entry lists.
struct SparseMatrix {
  struct Entry {
    int col;
    double value;
  };
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Entry>> row_entries;

  double at(int i, int j) const;
};

/// Relation matrices are Theta(n * depth) to Theta(n^2) dense, so they are
/// exposed only up to a node cap; the O(n) vectors above carry large trees.
inline constexpr int kRelationMatrixCap = 10000;

/// G^{-1} materialized sparsely: entry (i,j) = 1 iff i == j or j is an
/// ancestor of i.
SparseMatrix ancestor_indicator(const HierarchicalTree& tree,
                                int cap = kRelationMatrixCap);

/// G G^T. Off-diagonal entry (i,j) = 1 exactly when i and j are siblings
/// (entry (0,0) = 1 is the root special case); parent-child pairs carry -1.
SparseMatrix sibling_indicator(const HierarchicalTree& tree,
                               int cap = kRelationMatrixCap);

/// (G^T G)^{-1}: entry (i,j) counts the common ancestors of i and j
/// (both included when on one chain); the diagonal is the depth.
DenseSquareMatrix common_ancestor_counts(const HierarchicalTree& tree,
                                         int cap = kRelationMatrixCap);

}  // namespace genmat
