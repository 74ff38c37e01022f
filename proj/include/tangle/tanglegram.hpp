#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangle/tree.hpp"

namespace tangle {

using EdgeId = std::int32_t;

struct MatchingEdge {
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  friend bool operator==(const MatchingEdge&, const MatchingEdge&) = default;
};

/// Two rooted binary trees joined by a perfect matching of their leaves.
/// Matching edges are numbered by their position in `sigma`.
class Tanglegram {
 public:
  Tanglegram(RootedBinaryTree left, RootedBinaryTree right, std::vector<MatchingEdge> sigma);

  /// Matching given as (left label, right label) pairs.
  static Tanglegram from_labels(RootedBinaryTree left, RootedBinaryTree right,
                                const std::vector<std::pair<std::string, std::string>>& pairs);

  const RootedBinaryTree& left() const noexcept { return left_; }
  const RootedBinaryTree& right() const noexcept { return right_; }
  const std::vector<MatchingEdge>& sigma() const noexcept { return sigma_; }
  std::size_t size() const noexcept { return sigma_.size(); }

  const MatchingEdge& edge(EdgeId e) const;
  EdgeId edge_at_left(NodeId leaf) const;
  EdgeId edge_at_right(NodeId leaf) const;
  /// "leftLabel-rightLabel"
  std::string edge_name(EdgeId e) const;

  /// Left and right trees exchanged; matching edge ids are preserved.
  Tanglegram mirrored() const;

  friend bool operator==(const Tanglegram&, const Tanglegram&) = default;

 private:
  RootedBinaryTree left_;
  RootedBinaryTree right_;
  std::vector<MatchingEdge> sigma_;
  std::vector<EdgeId> by_left_;
  std::vector<EdgeId> by_right_;
};

/// T[Z] together with both induced trees; `edge_map[i]` is the host id of
/// sub-tanglegram edge i. Z is kept in increasing id order.
struct InducedSubtanglegram {
  Tanglegram tanglegram;
  InducedSubtree left;
  InducedSubtree right;
  std::vector<EdgeId> edge_map;
};

/// Throws DomainError on empty Z, repeated or unknown edge ids.
InducedSubtanglegram induce(const Tanglegram& tg, std::vector<EdgeId> z);
Tanglegram induce_subtanglegram(const Tanglegram& tg, std::vector<EdgeId> z);

/// σ \ excluded, sorted.
std::vector<EdgeId> complement(const Tanglegram& tg, const std::vector<EdgeId>& excluded);

/// Left and right scar of an outside matching edge m on T[Z].
struct ScarRecord {
  EdgeId edge = -1;
  NodeId left_scar = kNoNode;   // edge of L[Z], by contracted lower endpoint
  NodeId right_scar = kNoNode;  // edge of R[Z]
  NodeId left_scar_host = kNoNode;   // host image of that lower endpoint
  NodeId right_scar_host = kNoNode;
  bool left_outside = false;
  bool right_outside = false;
  NodeId left_attach = kNoNode;  // host node where m's root path first meets T⟦Z⟧
  NodeId right_attach = kNoNode;
};

ScarRecord scar_of(const InducedSubtanglegram& sub, const Tanglegram& tg, EdgeId m);
ScarRecord scar_of(const Tanglegram& tg, const std::vector<EdgeId>& z, EdgeId m);

/// Node maps of a root- and matching-preserving isomorphism a -> b.
struct TanglegramIsomorphism {
  std::vector<NodeId> left;   // a.left node -> b.left node
  std::vector<NodeId> right;  // a.right node -> b.right node
  std::vector<EdgeId> edges;  // a edge -> b edge
  friend bool operator==(const TanglegramIsomorphism&, const TanglegramIsomorphism&) = default;
};

/// Lexicographically least encoding over all consistent representations.
/// Exponential in size; refuses tanglegrams larger than kCanonicalMaxSize.
inline constexpr std::size_t kCanonicalMaxSize = 8;
std::string canonical_code(const Tanglegram& tg);

std::optional<TanglegramIsomorphism> tanglegram_isomorphic(const Tanglegram& a, const Tanglegram& b);
std::vector<TanglegramIsomorphism> all_isomorphisms(const Tanglegram& a, const Tanglegram& b);

}  // namespace tangle
