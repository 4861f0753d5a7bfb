#include "genmat/tree.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "genmat/errors.hpp"

namespace genmat {

int HierarchicalTree::order_size(int k) const {
  if (k < 0) throw InvalidParam("subtree order must be nonnegative");
  if (k >= static_cast<int>(order_sizes_.size())) return 0;
  return order_sizes_[k];
}

std::optional<int> HierarchicalTree::find_label(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

TreePtr HierarchicalTree::from_parts(std::vector<int> parent,
                                     std::vector<std::string> labels) {
  const int n = static_cast<int>(parent.size());
  if (n == 0) throw InvalidParam("a tree needs at least one node");
  if (labels.size() != parent.size())
    throw InvalidParam("labels and parents differ in length");
  if (parent[0] != -1) throw InvalidParam("node 0 must be the root");
  for (int i = 1; i < n; ++i)
    if (parent[i] < 0 || parent[i] >= i)
      throw InvalidParam("every non-root parent index must precede the node");

  auto t = std::shared_ptr<HierarchicalTree>(new HierarchicalTree());
  t->n_ = n;
  t->parent_ = std::move(parent);
  t->labels_ = std::move(labels);

  // Heights bottom-up: a reverse sweep sees every child before its parent.
  t->height_.assign(n, 1);
  for (int i = n - 1; i >= 1; --i) {
    const int p = t->parent_[i];
    t->height_[p] = std::max(t->height_[p], t->height_[i] + 1);
  }
  for (int i = 0; i + 1 < n; ++i)
    if (t->height_[i] < t->height_[i + 1])
      throw InvalidParam("nodes are not in descending order of height");

  const int h = t->height_[0];
  t->order_sizes_.assign(h, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < t->height_[i]; ++k) ++t->order_sizes_[k];
    if (t->height_[i] == 1) t->leaves_.push_back(i);
  }
  return t;
}

BuiltTree build_tree(const std::vector<ParentLink>& links) {
  const int n = static_cast<int>(links.size());
  if (n == 0) throw InvalidParam("a tree needs at least one node");

  std::unordered_map<std::string, int> index_of;
  index_of.reserve(links.size());
  for (int i = 0; i < n; ++i) {
    if (!index_of.emplace(links[i].label, i).second)
      throw InvalidParam("duplicate node label: " + links[i].label);
  }

  int root = -1;
  std::vector<int> raw_parent(n);
  for (int i = 0; i < n; ++i) {
    if (!links[i].parent) {
      if (root >= 0)
        throw MultipleRoots("more than one root: " + links[root].label +
                            " and " + links[i].label);
      root = i;
      raw_parent[i] = -1;
      continue;
    }
    auto it = index_of.find(*links[i].parent);
    if (it == index_of.end())
      throw OrphanNode("unknown parent label: " + *links[i].parent);
    raw_parent[i] = it->second;
  }
  if (root < 0) throw CycleDetected("no root; the parent links close a cycle");

  // Children lists, then a BFS from the root. Anything unreached hangs off a
  // cycle (its parent chain never meets the root).
  std::vector<int> child_head(n, -1), child_next(n, -1);
  for (int i = 0; i < n; ++i) {
    if (raw_parent[i] < 0) continue;
    child_next[i] = child_head[raw_parent[i]];
    child_head[raw_parent[i]] = i;
  }
  std::vector<int> bfs;
  bfs.reserve(n);
  bfs.push_back(root);
  for (std::size_t q = 0; q < bfs.size(); ++q)
    for (int c = child_head[bfs[q]]; c >= 0; c = child_next[c]) bfs.push_back(c);
  if (static_cast<int>(bfs.size()) != n)
    throw CycleDetected("parent links contain a cycle");

  // Heights on the raw indexing; reversed BFS order visits children first.
  std::vector<int> height(n, 1);
  for (std::size_t q = bfs.size(); q-- > 1;) {
    const int i = bfs[q];
    height[raw_parent[i]] = std::max(height[raw_parent[i]], height[i] + 1);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (height[a] != height[b]) return height[a] > height[b];
    return links[a].label < links[b].label;
  });

  std::vector<int> new_index(n);  // raw index -> tree index
  for (int pos = 0; pos < n; ++pos) new_index[order[pos]] = pos;

  std::vector<int> parent(n);
  std::vector<std::string> labels(n);
  for (int pos = 0; pos < n; ++pos) {
    const int raw = order[pos];
    parent[pos] = raw_parent[raw] < 0 ? -1 : new_index[raw_parent[raw]];
    labels[pos] = links[raw].label;
  }

  return BuiltTree{HierarchicalTree::from_parts(std::move(parent), std::move(labels)),
                   MappingMatrix(std::move(new_index), n)};
}

TreePtr k_order_subtree(const HierarchicalTree& tree, int k) {
  if (k < 0) throw InvalidParam("subtree order must be nonnegative");
  if (k >= tree.height())
    throw KTooLarge("order " + std::to_string(k) + " leaves an empty tree");
  const int nk = tree.order_size(k);
  std::vector<int> parent(tree.parents().begin(), tree.parents().begin() + nk);
  std::vector<std::string> labels(tree.labels().begin(),
                                  tree.labels().begin() + nk);
  return HierarchicalTree::from_parts(std::move(parent), std::move(labels));
}

}  // namespace genmat
