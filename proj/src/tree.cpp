#include "tangle/tree.hpp"

#include <algorithm>
#include <functional>

#include "tangle/error.hpp"

namespace tangle {

namespace {

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }

}  // namespace

RootedBinaryTree RootedBinaryTree::from_children(NodeId root,
                                                 const std::vector<std::array<NodeId, 2>>& children,
                                                 const std::vector<std::string>& labels) {
  const auto n = children.size();
  if (labels.size() != n) throw DomainError("tree: children and labels differ in size");
  if (n < 2) throw DomainError("tree: a rooted tree needs at least two vertices");
  if (root < 0 || idx(root) >= n) throw DomainError("tree: root id out of range");

  auto in_range = [n](NodeId v) { return v >= 0 && idx(v) < n; };
  auto child_list = [&](NodeId v) {
    std::vector<NodeId> out;
    for (NodeId c : children[idx(v)]) {
      if (c == kNoNode) continue;
      if (!in_range(c)) throw DomainError("tree: child id out of range");
      out.push_back(c);
    }
    return out;
  };

  if (child_list(root).size() != 1) throw DomainError("tree: root must have exactly one child");

  // Preorder renumbering; also detects cycles, sharing and unreachable nodes.
  std::vector<NodeId> new_id(n, kNoNode);
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (new_id[idx(v)] != kNoNode) throw DomainError("tree: node reachable twice (cycle or shared child)");
    new_id[idx(v)] = static_cast<NodeId>(order.size());
    order.push_back(v);
    auto ch = child_list(v);
    if (v != root && ch.size() == 1) throw DomainError("tree: non-root node with a single child");
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  if (order.size() != n) throw DomainError("tree: node not reachable from root");

  RootedBinaryTree t;
  t.parent_.assign(n, kNoNode);
  t.children_.assign(n, {kNoNode, kNoNode});
  t.labels_.assign(n, std::string{});
  for (std::size_t i = 0; i < n; ++i) {
    NodeId old = order[i];
    auto ch = child_list(old);
    for (std::size_t k = 0; k < ch.size(); ++k) {
      NodeId c = new_id[idx(ch[k])];
      t.children_[i][k] = c;
      t.parent_[idx(c)] = static_cast<NodeId>(i);
    }
    const std::string& lab = labels[idx(old)];
    bool leaf = old != root && ch.empty();
    if (leaf) {
      if (!valid_label(lab)) throw DomainError("tree: invalid leaf label '" + lab + "'");
      t.labels_[i] = lab;
    } else if (!lab.empty()) {
      throw DomainError("tree: internal node carries a label '" + lab + "'");
    }
  }
  t.finalize();
  return t;
}

RootedBinaryTree RootedBinaryTree::single_leaf(std::string label) {
  return from_children(0, {{1, kNoNode}, {kNoNode, kNoNode}}, {"", std::move(label)});
}

void RootedBinaryTree::finalize() {
  const auto n = parent_.size();
  depth_.assign(n, 0);
  end_.assign(n, 0);
  leaf_rank_.assign(n, -1);
  leaf_begin_.assign(n, 0);
  leaf_end_.assign(n, 0);
  branching_index_.assign(n, -1);
  leaves_.clear();
  branching_.clear();
  by_label_.clear();

  for (std::size_t v = 1; v < n; ++v) depth_[v] = depth_[idx(parent_[v])] + 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (children_[v][0] == kNoNode && v != 0) {
      leaf_rank_[v] = static_cast<int>(leaves_.size());
      leaves_.push_back(static_cast<NodeId>(v));
      if (!by_label_.emplace(labels_[v], static_cast<NodeId>(v)).second)
        throw DomainError("tree: duplicate leaf label '" + labels_[v] + "'");
    }
    if (children_[v][1] != kNoNode) {
      branching_index_[v] = static_cast<int>(branching_.size());
      branching_.push_back(static_cast<NodeId>(v));
    }
  }
  // Postorder pass over reversed preorder.
  for (std::size_t i = n; i-- > 0;) {
    const auto& ch = children_[i];
    if (ch[0] == kNoNode) {
      end_[i] = static_cast<NodeId>(i + 1);
      leaf_begin_[i] = leaf_rank_[i];
      leaf_end_[i] = leaf_rank_[i] + 1;
    } else {
      NodeId last = ch[1] == kNoNode ? ch[0] : ch[1];
      end_[i] = end_[idx(last)];
      leaf_begin_[i] = leaf_begin_[idx(ch[0])];
      leaf_end_[i] = leaf_end_[idx(last)];
    }
  }
}

namespace {
void check_node(const RootedBinaryTree& t, NodeId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= t.node_count())
    throw DomainError("tree: unknown node id " + std::to_string(v));
}
}  // namespace

NodeId RootedBinaryTree::parent(NodeId v) const {
  check_node(*this, v);
  return parent_[idx(v)];
}

int RootedBinaryTree::child_count(NodeId v) const {
  check_node(*this, v);
  const auto& ch = children_[idx(v)];
  return (ch[0] != kNoNode) + (ch[1] != kNoNode);
}

NodeId RootedBinaryTree::child(NodeId v, int which) const {
  check_node(*this, v);
  if (which < 0 || which > 1) throw DomainError("tree: child index must be 0 or 1");
  return children_[idx(v)][static_cast<std::size_t>(which)];
}

bool RootedBinaryTree::is_leaf(NodeId v) const {
  check_node(*this, v);
  return v != root() && children_[idx(v)][0] == kNoNode;
}

bool RootedBinaryTree::is_branching(NodeId v) const {
  check_node(*this, v);
  return children_[idx(v)][1] != kNoNode;
}

const std::string& RootedBinaryTree::label(NodeId v) const {
  check_node(*this, v);
  return labels_[idx(v)];
}

int RootedBinaryTree::depth(NodeId v) const {
  check_node(*this, v);
  return depth_[idx(v)];
}

NodeId RootedBinaryTree::subtree_end(NodeId v) const {
  check_node(*this, v);
  return end_[idx(v)];
}

int RootedBinaryTree::leaf_rank(NodeId v) const {
  check_node(*this, v);
  return leaf_rank_[idx(v)];
}

int RootedBinaryTree::leaf_begin(NodeId v) const {
  check_node(*this, v);
  return leaf_begin_[idx(v)];
}

int RootedBinaryTree::leaf_end(NodeId v) const {
  check_node(*this, v);
  return leaf_end_[idx(v)];
}

int RootedBinaryTree::branching_index(NodeId v) const {
  check_node(*this, v);
  return branching_index_[idx(v)];
}

std::optional<NodeId> RootedBinaryTree::find_leaf(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

NodeId RootedBinaryTree::leaf(std::string_view label) const {
  auto v = find_leaf(label);
  if (!v) throw DomainError("tree: unknown leaf label '" + std::string(label) + "'");
  return *v;
}

bool RootedBinaryTree::is_ancestor(NodeId a, NodeId d) const {
  check_node(*this, a);
  check_node(*this, d);
  return a <= d && d < end_[idx(a)];
}

NodeId RootedBinaryTree::meet(NodeId u, NodeId v) const {
  check_node(*this, u);
  check_node(*this, v);
  while (depth_[idx(u)] > depth_[idx(v)]) u = parent_[idx(u)];
  while (depth_[idx(v)] > depth_[idx(u)]) v = parent_[idx(v)];
  while (u != v) {
    u = parent_[idx(u)];
    v = parent_[idx(v)];
  }
  return u;
}

bool RootedBinaryTree::is_cherry(NodeId a, NodeId b) const {
  return a != b && is_leaf(a) && is_leaf(b) && parent_[idx(a)] == parent_[idx(b)];
}

std::string RootedBinaryTree::shape_code() const {
  // AHU-style: sort child codes so child order does not matter.
  std::vector<std::string> code(node_count());
  for (std::size_t i = node_count(); i-- > 0;) {
    const auto& ch = children_[i];
    if (ch[0] == kNoNode) {
      code[i] = "L";
    } else if (ch[1] == kNoNode) {
      code[i] = "R(" + code[idx(ch[0])] + ")";
    } else {
      auto a = code[idx(ch[0])];
      auto b = code[idx(ch[1])];
      if (b < a) std::swap(a, b);
      code[i] = "(" + a + "," + b + ")";
    }
  }
  return code[0];
}

bool shape_isomorphic(const RootedBinaryTree& a, const RootedBinaryTree& b) {
  return a.node_count() == b.node_count() && a.shape_code() == b.shape_code();
}

NodeId InducedSubtree::contracted_of(NodeId host) const {
  auto it = std::find(vertex_map.begin(), vertex_map.end(), host);
  return it == vertex_map.end() ? kNoNode : static_cast<NodeId>(it - vertex_map.begin());
}

InducedSubtree induce_subtree(const RootedBinaryTree& tree, std::span<const NodeId> selected) {
  if (selected.empty()) throw DomainError("induce_subtree: empty leaf set");
  InducedSubtree out;
  out.selected.assign(selected.begin(), selected.end());
  std::sort(out.selected.begin(), out.selected.end());
  if (std::adjacent_find(out.selected.begin(), out.selected.end()) != out.selected.end())
    throw DomainError("induce_subtree: repeated leaf");

  const auto n = tree.node_count();
  out.in_steiner.assign(n, false);
  for (NodeId s : out.selected) {
    if (s < 0 || idx(s) >= n || !tree.is_leaf(s)) throw DomainError("induce_subtree: selection contains a non-leaf");
    for (NodeId v = s; v != kNoNode && !out.in_steiner[idx(v)]; v = tree.parent(v)) out.in_steiner[idx(v)] = true;
  }

  auto steiner_children = [&](NodeId v) {
    std::vector<NodeId> ch;
    for (int k = 0; k < tree.child_count(v); ++k) {
      NodeId c = tree.child(v, k);
      if (out.in_steiner[idx(c)]) ch.push_back(c);
    }
    return ch;
  };

  // Kept nodes: root, selected leaves, nodes with two Steiner children.
  // Walk down from each kept node through suppressed chains.
  std::vector<std::array<NodeId, 2>> children;
  std::vector<std::string> labels;
  std::vector<std::vector<NodeId>> paths;
  out.vertex_map.clear();

  std::function<NodeId(NodeId)> build = [&](NodeId host) -> NodeId {
    auto id = static_cast<NodeId>(out.vertex_map.size());
    out.vertex_map.push_back(host);
    children.push_back({kNoNode, kNoNode});
    labels.push_back(tree.is_leaf(host) ? tree.label(host) : std::string{});
    paths.emplace_back();
    auto sc = steiner_children(host);
    for (std::size_t k = 0; k < sc.size(); ++k) {
      std::vector<NodeId> down{host};
      NodeId c = sc[k];
      for (;;) {
        down.push_back(c);
        auto cc = steiner_children(c);
        if (cc.size() != 1) break;
        c = cc[0];
      }
      NodeId cid = build(c);
      children[idx(id)][k] = cid;
      std::reverse(down.begin(), down.end());
      paths[idx(cid)] = std::move(down);
    }
    return id;
  };
  build(tree.root());

  out.contracted = RootedBinaryTree::from_children(0, children, labels);
  // from_children renumbers in preorder; `build` already assigned preorder ids.
  out.rep_paths = std::move(paths);
  return out;
}

ScarPoint scar_point(const RootedBinaryTree& tree, const InducedSubtree& sub, NodeId leaf) {
  if (!tree.is_leaf(leaf)) throw DomainError("scar: not a leaf");
  if (sub.in_steiner[idx(leaf)]) throw DomainError("scar: leaf belongs to the selection");
  NodeId v = leaf;
  while (!sub.in_steiner[idx(v)]) v = tree.parent(v);
  ScarPoint sp;
  sp.attach = v;
  // Follow the Steiner path downward to the next kept node.
  NodeId w = v;
  for (;;) {
    NodeId kept = sub.contracted_of(w);
    if (kept != kNoNode && w != v) {
      sp.contracted_edge = kept;
      sp.host_lower = w;
      break;
    }
    NodeId next = kNoNode;
    for (int k = 0; k < tree.child_count(w); ++k) {
      NodeId c = tree.child(w, k);
      if (sub.in_steiner[idx(c)]) next = c;
    }
    if (next == kNoNode) throw ConsistencyError("scar", "attach point is not interior to a representative path");
    w = next;
  }
  sp.outside = sub.contracted.is_root_edge(sp.contracted_edge);
  return sp;
}

}  // namespace tangle
