#include "genmat/datagen.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "genmat/errors.hpp"
#include "genmat/rng.hpp"

namespace genmat {

namespace {

// Zero-padded decimal labels sort lexicographically in construction order,
// which keeps reloads byte-for-byte order-stable.
std::vector<std::string> padded_labels(std::int64_t n) {
  const int width = static_cast<int>(std::to_string(n).size());
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    std::string id = std::to_string(i + 1);
    labels[i] = std::string(width - id.size(), '0') + id;
  }
  return labels;
}

std::vector<std::int64_t> poisson_counts(std::int64_t m, double lambda,
                                         Rng& rng) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m));
  for (auto& c : counts) c = rng.poisson(lambda);
  return counts;
}

}  // namespace

GeneratedData gen_complete_tree(int height, int fanout, double lambda,
                                std::uint64_t seed) {
  if (height < 1) throw InvalidParam("height must be at least 1");
  if (fanout < 2) throw InvalidParam("fanout must be at least 2");
  if (!(lambda > 0.0)) throw InvalidParam("poisson mean must be positive");

  std::int64_t n = 0, level = 1;
  for (int d = 0; d < height; ++d, level *= fanout) n += level;
  if (n > (std::int64_t{1} << 31))
    throw InvalidParam("tree too large to materialize");

  // Level order is already descending-height order; parent of node i is
  // (i-1)/fanout, the standard heap layout.
  std::vector<int> parent(static_cast<std::size_t>(n));
  parent[0] = -1;
  for (std::int64_t i = 1; i < n; ++i)
    parent[i] = static_cast<int>((i - 1) / fanout);
  TreePtr tree =
      HierarchicalTree::from_parts(std::move(parent), padded_labels(n));

  Rng rng(seed);
  return GeneratedData{std::move(tree),
                       poisson_counts(tree ? 0 : 0, lambda, rng)};
}

std::vector<FanoutShare> default_fanout_shares() {
  return {{2, 0.4}, {3, 0.3}, {4, 0.2}, {5, 0.1}};
}

GeneratedData gen_random_fanout_tree(std::int64_t target_leaves,
                                     std::span<const FanoutShare> shares,
                                     double lambda, std::uint64_t seed) {
  if (target_leaves < 1) throw InvalidParam("need at least one leaf");
  if (!(lambda > 0.0)) throw InvalidParam("poisson mean must be positive");
  if (shares.empty()) throw InvalidParam("empty fan-out distribution");
  double total = 0.0;
  for (const auto& s : shares) {
    if (s.fanout < 2) throw InvalidParam("fan-outs below 2 are not supported");
    if (s.share < 0.0) throw InvalidParam("negative fan-out share");
    total += s.share;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidParam("fan-out shares must sum to 1");

  Rng rng(seed);
  auto draw_fanout = [&]() {
    const double u = rng.next_unit();
    double acc = 0.0;
    for (const auto& s : shares) {
      acc += s.share;
      if (u <= acc) return s.fanout;
    }
    return shares.back().fanout;
  };

  // Group each level into blocks until one root remains. All leaves end up
  // at the same depth, so level j (0 = leaves) has uniform height j+1.
  std::vector<std::int64_t> level_sizes{target_leaves};
  std::vector<std::vector<std::int64_t>> block_sizes;  // per upper level
  while (level_sizes.back() > 1) {
    std::int64_t remaining = level_sizes.back();
    std::vector<std::int64_t> blocks;
    while (remaining > 0) {
      std::int64_t f = draw_fanout();
      if (remaining <= f + 1) f = remaining;  // absorb a leftover of one
      blocks.push_back(f);
      remaining -= f;
    }
    level_sizes.push_back(static_cast<std::int64_t>(blocks.size()));
    block_sizes.push_back(std::move(blocks));
  }

  std::int64_t n = 0;
  for (std::int64_t s : level_sizes) n += s;
  if (n > (std::int64_t{1} << 31))
    throw InvalidParam("tree too large to materialize");

  // Emit levels from the root down; each block of the level below hangs off
  // one parent, in order.
  std::vector<int> parent(static_cast<std::size_t>(n));
  parent[0] = -1;
  std::int64_t level_start = 0;  // index of the first node of current level
  for (std::size_t upper = level_sizes.size() - 1; upper >= 1; --upper) {
    const auto& blocks = block_sizes[upper - 1];
    const std::int64_t child_start = level_start + level_sizes[upper];
    std::int64_t child = child_start;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::int64_t k = 0; k < blocks[b]; ++k)
        parent[child++] = static_cast<int>(level_start + b);
    level_start = child_start;
  }

  TreePtr tree =
      HierarchicalTree::from_parts(std::move(parent), padded_labels(n));
  return GeneratedData{std::move(tree),
                       poisson_counts(target_leaves, lambda, rng)};
}

}  // namespace genmat
