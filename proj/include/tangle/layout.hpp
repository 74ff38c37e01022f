#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

/// A layout up to equivalence: one leaf order per tree, both listed
/// top-to-bottom as the viewer sees them. Two matching edges cross iff their
/// left endpoints and right endpoints compare in opposite directions.
struct LayoutRep {
  std::vector<std::string> left;
  std::vector<std::string> right;

  /// Mirror image across the horizontal axis (both orders reversed).
  LayoutRep flipped() const;
  /// Left and right exchanged (layout of the mirrored tanglegram).
  LayoutRep swapped() const { return {right, left}; }

  friend bool operator==(const LayoutRep&, const LayoutRep&) = default;
};

/// Every internal node's leaf descendants are contiguous in `order`.
/// Throws DomainError if `order` is not a permutation of the tree's leaves.
bool is_consistent(const RootedBinaryTree& tree, const std::vector<std::string>& order);
bool is_consistent(const RootedBinaryTree& tree, const std::vector<NodeId>& order);

/// Throws DomainError unless both orders are permutations of the leaves.
void check_permutations(const Tanglegram& tg, const LayoutRep& rep);
/// Both orders consistent with their trees.
bool is_layout(const Tanglegram& tg, const LayoutRep& rep);

/// Crossing pairs of the drawing, counted by inversion counting.
std::uint64_t crossing_count(const Tanglegram& tg, const LayoutRep& rep);
/// Same quantity via the all-pairs kernel (O(n^2)).
std::uint64_t crossing_count_pairwise(const Tanglegram& tg, const LayoutRep& rep);
/// The crossing pairs themselves, each as (smaller id, larger id), sorted.
std::vector<std::pair<EdgeId, EdgeId>> crossing_pairs(const Tanglegram& tg, const LayoutRep& rep);

/// Inversions of a sequence of distinct integers (merge-sort count).
std::uint64_t count_inversions(std::vector<std::int32_t> seq);

struct OneSided {
  std::vector<std::string> right;
  std::uint64_t crossings = 0;
};

/// Best right order for a fixed consistent left order. Pairs of matching
/// edges are decided at the right-tree meet of their right leaves, so each
/// branching node chooses its child order independently. Ties keep the
/// natural child order.
OneSided optimize_one_side(const Tanglegram& tg, const std::vector<std::string>& fixed_left);

struct CrtOptions {
  /// Search-node limit; nullopt means the default (TGL_BUDGET env or 1e7).
  std::optional<std::uint64_t> budget;
  std::size_t max_size = 18;
  /// Allow sizes above max_size.
  bool override_cap = false;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
/// kDefaultBudget unless TGL_BUDGET holds a positive integer.
std::uint64_t default_budget();

struct CrtResult {
  std::uint64_t value = 0;
  LayoutRep witness;
  std::uint64_t explored = 0;
  bool optimal = false;
};

/// Exact tangle crossing number by branch-and-bound over the orientations of
/// one tree, with the other side solved exactly at each node. Throws
/// RefusalError if the size exceeds the cap without override.
CrtResult exact_crt(const Tanglegram& tg, const CrtOptions& options = {});

/// A crossing-free layout, or nullopt if none exists. Search budget
/// exhaustion throws BudgetExhausted (the answer would be unknown).
std::optional<LayoutRep> planar_layout(const Tanglegram& tg, const CrtOptions& options = {});

/// Sublayout of T[Z] induced by `rep`.
LayoutRep restrict_layout(const Tanglegram& tg, const LayoutRep& rep, const std::vector<EdgeId>& z);

/// Leaf order of the tree with the default child order.
std::vector<std::string> default_order(const RootedBinaryTree& tree);

}  // namespace tangle
