#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "genmat/tree.hpp"

namespace genmat {

struct GeneratedData {
  TreePtr tree;
  std::vector<std::int64_t> counts;  // one per leaf, in leaf order
};

/// Complete k-ary tree of the given height: n = (k^h - 1)/(k - 1) nodes,
/// k^(h-1) leaves, counts i.i.d. Poisson(lambda). Deterministic under seed.
GeneratedData gen_complete_tree(int height, int fanout, double lambda,
                                std::uint64_t seed);

struct FanoutShare {
  int fanout;
  double share;
};

/// {2: 40%, 3: 30%, 4: 20%, 5: 10%}.
std::vector<FanoutShare> default_fanout_shares();

/// Builds bottom-up from `target_leaves` leaves: each level is grouped into
/// blocks with fan-outs drawn from the share distribution (a leftover of one
/// node is absorbed into the preceding block) until a single root remains.
/// Counts i.i.d. Poisson(lambda). Deterministic under seed.
GeneratedData gen_random_fanout_tree(std::int64_t target_leaves,
                                     std::span<const FanoutShare> shares,
                                     double lambda, std::uint64_t seed);

}  // namespace genmat
