#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genmat/mapping.hpp"

namespace genmat {

class HierarchicalTree;
using TreePtr = std::shared_ptr<const HierarchicalTree>;

/// A rooted tree whose nodes are numbered in descending order of height:
/// i < j implies height(i) >= height(j). The root sits at index 0, every
/// non-root node's parent index is strictly smaller than its own, nodes
/// [0, n1) are exactly the non-leaf nodes and [n1, n) exactly the leaves.
/// Immutable after construction; safe to share read-only across threads.
class HierarchicalTree {
 public:
  int node_count() const { return n_; }
  int internal_count() const { return n_ - leaf_count(); }  // n1
  int leaf_count() const { return static_cast<int>(leaves_.size()); }  // m
  int height() const { return height_[0]; }  // h = root height

  int parent(int i) const { return parent_[i]; }  // -1 for the root
  int node_height(int i) const { return height_[i]; }
  bool is_leaf(int i) const { return height_[i] == 1; }
  const std::string& label(int i) const { return labels_[i]; }

  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& heights() const { return height_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// n_k: node count of the k-order subtree {i : height(i) > k}; 0 for k >= h.
  int order_size(int k) const;

  /// Leaf indices in ascending order (always the contiguous tail [n1, n)).
  const std::vector<int>& leaf_nodes() const { return leaves_; }

  /// The mapping H over the ordered leaf set: unit-count index -> node index.
  MappingMatrix leaf_mapping() const { return MappingMatrix(leaves_, n_); }

  /// Node index for a label, if present.
  std::optional<int> find_label(const std::string& label) const;

  /// Builds a tree from a parent array already in descending-height order
  /// (parent[0] == -1, parent[i] < i otherwise). Heights, order sizes and the
  /// leaf set are derived here; violations of the ordering invariants throw.
  static TreePtr from_parts(std::vector<int> parent,
                            std::vector<std::string> labels);

 private:
  HierarchicalTree() = default;

  int n_ = 0;
  std::vector<int> parent_;
  std::vector<int> height_;
  std::vector<int> order_sizes_;  // n_k for k = 0..h-1
  std::vector<std::string> labels_;
  std::vector<int> leaves_;
};

/// One row of a label-indexed parent map; `parent` empty for the root.
struct ParentLink {
  std::string label;
  std::optional<std::string> parent;
};

struct BuiltTree {
  TreePtr tree;
  /// Permutation S with s_i = tree index of the i-th input link, so that
  /// forward(v) views a tree-ordered vector in input order.
  MappingMatrix input_to_tree;
};

/// Re-indexes arbitrary parent links into descending-height order. Ties
/// within a height class are broken by ascending label. Throws MultipleRoots,
/// OrphanNode, CycleDetected or InvalidParam (empty input, duplicate label).
BuiltTree build_tree(const std::vector<ParentLink>& links);

/// Induced subtree on the nodes with height > k (the leading n_k indices);
/// heights drop by k, labels are retained. Throws KTooLarge for k >= h.
TreePtr k_order_subtree(const HierarchicalTree& tree, int k);

}  // namespace genmat
