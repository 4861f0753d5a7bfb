#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "genmat/release.hpp"
#include "genmat/tree.hpp"

namespace genmat {

/// A tree file is CSV with header `id,parent,node_weight,edge_weight`: one
/// row per node, `parent` empty for the root, weights optional (default 1),
/// edge_weight meaningless on the root row. Loading re-indexes into
/// descending-height order and carries the weights along.
struct TreeFile {
  TreePtr tree;
  std::vector<double> node_weights;  // n, tree order
  std::vector<double> edge_weights;  // n-1, tree order (node 1..n-1)
};

TreeFile load_tree(const std::filesystem::path& path);
void save_tree(const HierarchicalTree& tree, std::span<const double> node_w,
               std::span<const double> edge_w,
               const std::filesystem::path& path);
void save_tree(const HierarchicalTree& tree,
               const std::filesystem::path& path);  // unit weights

/// Counts file: CSV `leaf_id,count`, nonnegative integers, one row per leaf.
/// Every tree leaf must appear exactly once and nothing else may; returns
/// counts in leaf order.
std::vector<std::int64_t> load_counts(const std::filesystem::path& path,
                                      const HierarchicalTree& tree);
void save_counts(const HierarchicalTree& tree,
                 std::span<const std::int64_t> counts,
                 const std::filesystem::path& path);

/// Release CSV `id,true,noisy,consistent` plus a `<path>.json` metrics
/// sidecar {epsilon, seed, h, n, m, rmse_nq, bias, mse_theory_noisy,
/// mse_theory_consistent}. Writes are byte-deterministic.
void save_release(const ReleaseReport& report, const HierarchicalTree& tree,
                  const std::filesystem::path& path);

struct ReleaseColumns {
  std::vector<std::string> ids;
  std::vector<double> v_true;
  std::vector<double> v_noisy;
  std::vector<double> v_consistent;
};
ReleaseColumns load_release(const std::filesystem::path& path);

}  // namespace genmat
