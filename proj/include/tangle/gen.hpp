#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

/// Portable random source: std::mt19937_64 (fully specified by the standard)
/// with bounded draws by rejection, so sequences agree across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Random binary tree with leaves labeled prefix1..prefixN in preorder, grown
/// by attaching each new leaf to a uniformly chosen existing edge.
RootedBinaryTree random_tree(std::size_t n, Rng& rng, const std::string& prefix);

/// Leaves l1..ln and r1..rn, uniform random matching. Deterministic per seed.
Tanglegram random_tanglegram(std::size_t n, std::uint64_t seed);

/// Number of unordered rooted binary tree shapes with n leaves.
std::size_t shape_count(std::size_t n);

/// All raw (left shape, right shape, matching) triples of size n ≤ 6, in a
/// fixed order addressable by index.
class TanglegramEnumeration {
 public:
  static constexpr std::size_t kMaxSize = 6;
  /// Throws RefusalError for n > kMaxSize, DomainError for n = 0.
  explicit TanglegramEnumeration(std::size_t n);

  std::size_t size() const noexcept { return total_; }
  Tanglegram at(std::size_t index) const;

  template <typename Fn>
  void for_each(Fn&& fn, std::size_t start = 0) const {
    for (std::size_t i = start; i < total_; ++i) fn(i, at(i));
  }

 private:
  std::size_t n_;
  std::vector<RootedBinaryTree> left_shapes_, right_shapes_;
  std::size_t perms_ = 1;
  std::size_t total_ = 0;
};

std::vector<Tanglegram> enumerate_tanglegrams(std::size_t n);

enum class Family { K1, K2, T1, T2 };
/// Throws DomainError for an unknown name.
Family parse_family(const std::string& name);
std::string to_string(Family f);

/// K1, K2, or the block families T1(m) (a planar block beside a K1) and
/// T2(m) (K1 with every edge replaced by a planar m-block). Blocks are
/// caterpillars with identity matching. m ≥ 1, ignored for K1/K2.
Tanglegram build_family(Family f, std::size_t m = 1);

}  // namespace tangle
