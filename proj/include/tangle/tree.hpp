#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tangle {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Immutable rooted binary tree whose root has degree one.
///
/// Nodes are renumbered in preorder on construction, so node 0 is the root
/// and the subtree of v occupies the id range [v, subtree_end(v)). Children
/// are stored as an ordered pair; the order is only a drawing default and no
/// semantic operation depends on it.
///
/// Edges are identified by their lower endpoint: edge v joins v to parent(v).
class RootedBinaryTree {
 public:
  /// Builds a tree from an arbitrary numbering. `children[v]` holds up to two
  /// child ids (kNoNode for absent), `labels[v]` is nonempty exactly for
  /// leaves. Throws DomainError if the shape or labels are invalid.
  static RootedBinaryTree from_children(NodeId root,
                                        const std::vector<std::array<NodeId, 2>>& children,
                                        const std::vector<std::string>& labels);

  /// Single-leaf tree: root -- leaf.
  static RootedBinaryTree single_leaf(std::string label);

  /// Empty placeholder (no nodes); only assignment and destruction are valid.
  RootedBinaryTree() = default;

  NodeId root() const noexcept { return 0; }
  std::size_t node_count() const noexcept { return parent_.size(); }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }

  NodeId parent(NodeId v) const;
  int child_count(NodeId v) const;
  NodeId child(NodeId v, int which) const;
  bool is_leaf(NodeId v) const;
  /// Degree-3 nodes (two children).
  bool is_branching(NodeId v) const;
  const std::string& label(NodeId v) const;
  int depth(NodeId v) const;
  NodeId subtree_end(NodeId v) const;

  /// Leaves in preorder, i.e. the default top-to-bottom drawing order.
  std::span<const NodeId> leaves() const noexcept { return leaves_; }
  /// Branching nodes in preorder.
  std::span<const NodeId> branching_nodes() const noexcept { return branching_; }
  /// Index of leaf v in leaves(); the leaves below v are the contiguous rank
  /// range [leaf_begin(v), leaf_end(v)).
  int leaf_rank(NodeId v) const;
  int leaf_begin(NodeId v) const;
  int leaf_end(NodeId v) const;
  /// Index of branching node v in branching_nodes(), or -1.
  int branching_index(NodeId v) const;

  std::optional<NodeId> find_leaf(std::string_view label) const;
  /// Like find_leaf but throws DomainError on unknown labels.
  NodeId leaf(std::string_view label) const;

  /// a ⪯ d in the tree order (a lies on the root-d path).
  bool is_ancestor(NodeId a, NodeId d) const;
  /// Largest common lower bound of u and v in the tree order.
  NodeId meet(NodeId u, NodeId v) const;

  bool is_root_edge(NodeId lower) const { return parent(lower) == root(); }
  bool is_leaf_edge(NodeId lower) const { return is_leaf(lower); }
  bool is_cherry(NodeId a, NodeId b) const;

  /// Children pair of every node, kNoNode-padded (preorder ids).
  const std::vector<std::array<NodeId, 2>>& children_table() const noexcept { return children_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Same tree with the children of every branching node v for which
  /// flip(branching_index(v)) is true exchanged; returns the leaf order.
  template <typename FlipFn>
  std::vector<NodeId> oriented_leaf_order(FlipFn&& flip) const;

  /// Order-independent shape code; equal codes iff the trees are isomorphic
  /// as rooted unlabeled trees.
  std::string shape_code() const;

  friend bool operator==(const RootedBinaryTree&, const RootedBinaryTree&) = default;

 private:
  void finalize();

  std::vector<NodeId> parent_;
  std::vector<std::array<NodeId, 2>> children_;
  std::vector<std::string> labels_;
  std::vector<int> depth_;
  std::vector<NodeId> end_;
  std::vector<NodeId> leaves_;
  std::vector<NodeId> branching_;
  std::vector<int> leaf_rank_;
  std::vector<int> leaf_begin_;
  std::vector<int> leaf_end_;
  std::vector<int> branching_index_;
  std::unordered_map<std::string, NodeId> by_label_;
};

/// T⟦S⟧ and T[S] together with the correspondence between them.
struct InducedSubtree {
  std::vector<NodeId> selected;      // host leaves, sorted
  std::vector<bool> in_steiner;      // host-indexed membership in T⟦S⟧
  RootedBinaryTree contracted;       // T[S], labels preserved
  std::vector<NodeId> vertex_map;    // contracted node -> host node
  /// rep_paths[c] for contracted non-root node c: host nodes from
  /// vertex_map[c] up to vertex_map[parent(c)], both inclusive.
  std::vector<std::vector<NodeId>> rep_paths;

  /// Contracted node whose host image is h, or kNoNode.
  NodeId contracted_of(NodeId host) const;
};

/// Steiner tree and contraction of `tree` on the leaf set `selected`.
/// Throws DomainError if `selected` is empty or contains non-leaves.
InducedSubtree induce_subtree(const RootedBinaryTree& tree, std::span<const NodeId> selected);

/// Where the root path of an outside leaf first meets T⟦S⟧.
struct ScarPoint {
  NodeId attach = kNoNode;        // degree-2 node of T⟦S⟧
  NodeId contracted_edge = kNoNode;  // lower endpoint (contracted id) of the scarred edge
  NodeId host_lower = kNoNode;    // host image of that lower endpoint
  bool outside = false;           // scar sits on the root-edge of T[S]
};

/// Scar of host leaf `leaf` (not in the selection) on the induced subtree.
ScarPoint scar_point(const RootedBinaryTree& tree, const InducedSubtree& sub, NodeId leaf);

/// Rooted, unordered isomorphism test on shapes and leaf labels ignored.
bool shape_isomorphic(const RootedBinaryTree& a, const RootedBinaryTree& b);

template <typename FlipFn>
std::vector<NodeId> RootedBinaryTree::oriented_leaf_order(FlipFn&& flip) const {
  std::vector<NodeId> order;
  order.reserve(leaves_.size());
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    const auto& ch = children_[static_cast<std::size_t>(v)];
    if (ch[0] == kNoNode) {
      order.push_back(v);
    } else if (ch[1] == kNoNode) {
      stack.push_back(ch[0]);
    } else {
      bool f = flip(branching_index_[static_cast<std::size_t>(v)]);
      // Push the child that must come second first.
      stack.push_back(f ? ch[0] : ch[1]);
      stack.push_back(f ? ch[1] : ch[0]);
    }
  }
  return order;
}

}  // namespace tangle
