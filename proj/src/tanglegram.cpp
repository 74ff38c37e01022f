#include "tangle/tanglegram.hpp"

#include <algorithm>
#include <cstdint>

#include "tangle/error.hpp"

namespace tangle {

namespace {
std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }
}  // namespace

Tanglegram::Tanglegram(RootedBinaryTree left, RootedBinaryTree right, std::vector<MatchingEdge> sigma)
    : left_(std::move(left)), right_(std::move(right)), sigma_(std::move(sigma)) {
  const auto n = sigma_.size();
  if (n == 0) throw DomainError("tanglegram: empty matching");
  if (left_.leaf_count() != n || right_.leaf_count() != n)
    throw DomainError("tanglegram: matching is not perfect (leaf counts " + std::to_string(left_.leaf_count()) +
                      "/" + std::to_string(right_.leaf_count()) + ", edges " + std::to_string(n) + ")");
  by_left_.assign(left_.node_count(), -1);
  by_right_.assign(right_.node_count(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = sigma_[i];
    if (e.left < 0 || idx(e.left) >= left_.node_count() || !left_.is_leaf(e.left) || e.right < 0 ||
        idx(e.right) >= right_.node_count() || !right_.is_leaf(e.right))
      throw DomainError("tanglegram: matching edge endpoint is not a leaf");
    if (by_left_[idx(e.left)] != -1 || by_right_[idx(e.right)] != -1)
      throw DomainError("tanglegram: matching is not perfect (leaf matched twice)");
    by_left_[idx(e.left)] = static_cast<EdgeId>(i);
    by_right_[idx(e.right)] = static_cast<EdgeId>(i);
  }
}

Tanglegram Tanglegram::from_labels(RootedBinaryTree left, RootedBinaryTree right,
                                   const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<MatchingEdge> sigma;
  sigma.reserve(pairs.size());
  for (const auto& [l, r] : pairs) sigma.push_back({left.leaf(l), right.leaf(r)});
  return Tanglegram(std::move(left), std::move(right), std::move(sigma));
}

const MatchingEdge& Tanglegram::edge(EdgeId e) const {
  if (e < 0 || idx(e) >= sigma_.size()) throw DomainError("tanglegram: unknown matching edge " + std::to_string(e));
  return sigma_[idx(e)];
}

EdgeId Tanglegram::edge_at_left(NodeId leaf) const {
  if (leaf < 0 || idx(leaf) >= by_left_.size() || by_left_[idx(leaf)] < 0)
    throw DomainError("tanglegram: not a left leaf");
  return by_left_[idx(leaf)];
}

EdgeId Tanglegram::edge_at_right(NodeId leaf) const {
  if (leaf < 0 || idx(leaf) >= by_right_.size() || by_right_[idx(leaf)] < 0)
    throw DomainError("tanglegram: not a right leaf");
  return by_right_[idx(leaf)];
}

std::string Tanglegram::edge_name(EdgeId e) const {
  const auto& m = edge(e);
  return left_.label(m.left) + "-" + right_.label(m.right);
}

Tanglegram Tanglegram::mirrored() const {
  std::vector<MatchingEdge> sigma;
  sigma.reserve(sigma_.size());
  for (const auto& e : sigma_) sigma.push_back({e.right, e.left});
  return Tanglegram(right_, left_, std::move(sigma));
}

std::vector<EdgeId> complement(const Tanglegram& tg, const std::vector<EdgeId>& excluded) {
  std::vector<bool> drop(tg.size(), false);
  for (EdgeId e : excluded) {
    tg.edge(e);
    drop[idx(e)] = true;
  }
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < tg.size(); ++i)
    if (!drop[i]) out.push_back(static_cast<EdgeId>(i));
  return out;
}

InducedSubtanglegram induce(const Tanglegram& tg, std::vector<EdgeId> z) {
  if (z.empty()) throw DomainError("induce: empty edge set");
  std::sort(z.begin(), z.end());
  if (std::adjacent_find(z.begin(), z.end()) != z.end()) throw DomainError("induce: repeated edge");
  std::vector<NodeId> sl, sr;
  for (EdgeId e : z) {
    const auto& m = tg.edge(e);
    sl.push_back(m.left);
    sr.push_back(m.right);
  }
  auto left = induce_subtree(tg.left(), sl);
  auto right = induce_subtree(tg.right(), sr);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (EdgeId e : z) {
    const auto& m = tg.edge(e);
    pairs.emplace_back(tg.left().label(m.left), tg.right().label(m.right));
  }
  auto sub = Tanglegram::from_labels(left.contracted, right.contracted, pairs);
  return InducedSubtanglegram{std::move(sub), std::move(left), std::move(right), std::move(z)};
}

Tanglegram induce_subtanglegram(const Tanglegram& tg, std::vector<EdgeId> z) {
  return induce(tg, std::move(z)).tanglegram;
}

ScarRecord scar_of(const InducedSubtanglegram& sub, const Tanglegram& tg, EdgeId m) {
  const auto& me = tg.edge(m);
  if (std::binary_search(sub.edge_map.begin(), sub.edge_map.end(), m))
    throw DomainError("scar_of: edge " + tg.edge_name(m) + " belongs to Z");
  auto l = scar_point(tg.left(), sub.left, me.left);
  auto r = scar_point(tg.right(), sub.right, me.right);
  ScarRecord rec;
  rec.edge = m;
  rec.left_scar = l.contracted_edge;
  rec.right_scar = r.contracted_edge;
  rec.left_scar_host = l.host_lower;
  rec.right_scar_host = r.host_lower;
  rec.left_outside = l.outside;
  rec.right_outside = r.outside;
  rec.left_attach = l.attach;
  rec.right_attach = r.attach;
  return rec;
}

ScarRecord scar_of(const Tanglegram& tg, const std::vector<EdgeId>& z, EdgeId m) {
  if (std::find(z.begin(), z.end(), m) != z.end())
    throw DomainError("scar_of: edge " + tg.edge_name(m) + " belongs to Z");
  return scar_of(induce(tg, z), tg, m);
}

// ---------------------------------------------------------------------------
// Canonical form over all consistent representations.

namespace {

/// Preorder node sequence of `tree` with branching node children swapped
/// wherever the corresponding bit of `mask` is set.
std::vector<NodeId> oriented_preorder(const RootedBinaryTree& tree, std::uint64_t mask) {
  std::vector<NodeId> out;
  out.reserve(tree.node_count());
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    int cc = tree.child_count(v);
    if (cc == 1) {
      stack.push_back(tree.child(v, 0));
    } else if (cc == 2) {
      bool f = (mask >> tree.branching_index(v)) & 1U;
      stack.push_back(tree.child(v, f ? 0 : 1));
      stack.push_back(tree.child(v, f ? 1 : 0));
    }
  }
  return out;
}

struct Oriented {
  std::vector<NodeId> preorder;
  std::string shape;
  std::vector<NodeId> leaf_order;
};

std::vector<Oriented> all_orientations(const RootedBinaryTree& tree) {
  const auto k = tree.branching_nodes().size();
  std::vector<Oriented> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Oriented o;
    o.preorder = oriented_preorder(tree, mask);
    for (NodeId v : o.preorder) {
      int cc = tree.child_count(v);
      o.shape.push_back(cc == 0 ? 'L' : cc == 1 ? 'R' : 'B');
      if (tree.is_leaf(v)) o.leaf_order.push_back(v);
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::string encode(const Tanglegram& tg, const Oriented& l, const Oriented& r) {
  std::vector<int> rpos(tg.right().node_count(), -1);
  for (std::size_t i = 0; i < r.leaf_order.size(); ++i) rpos[idx(r.leaf_order[i])] = static_cast<int>(i);
  std::string code = l.shape;
  code.push_back('|');
  code += r.shape;
  code.push_back('|');
  for (NodeId leaf : l.leaf_order) {
    int p = rpos[idx(tg.edge(tg.edge_at_left(leaf)).right)];
    code.push_back(static_cast<char>('A' + p));
  }
  return code;
}

void check_canonical_size(const Tanglegram& tg) {
  if (tg.size() > kCanonicalMaxSize)
    throw RefusalError("canonical form: size " + std::to_string(tg.size()) + " exceeds " +
                       std::to_string(kCanonicalMaxSize));
}

struct Best {
  std::string code;
  std::size_t li = 0, ri = 0;
};

Best minimal_code(const Tanglegram& tg, const std::vector<Oriented>& lo, const std::vector<Oriented>& ro) {
  Best best;
  bool first = true;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    for (std::size_t j = 0; j < ro.size(); ++j) {
      auto c = encode(tg, lo[i], ro[j]);
      if (first || c < best.code) {
        best = {std::move(c), i, j};
        first = false;
      }
    }
  }
  return best;
}

TanglegramIsomorphism map_between(const Tanglegram& a, const Oriented& al, const Oriented& ar,
                                  const Tanglegram& b, const Oriented& bl, const Oriented& br) {
  TanglegramIsomorphism iso;
  iso.left.assign(a.left().node_count(), kNoNode);
  iso.right.assign(a.right().node_count(), kNoNode);
  for (std::size_t i = 0; i < al.preorder.size(); ++i) iso.left[idx(al.preorder[i])] = bl.preorder[i];
  for (std::size_t i = 0; i < ar.preorder.size(); ++i) iso.right[idx(ar.preorder[i])] = br.preorder[i];
  iso.edges.assign(a.size(), -1);
  for (std::size_t e = 0; e < a.size(); ++e) {
    const auto& m = a.sigma()[e];
    EdgeId be = b.edge_at_left(iso.left[idx(m.left)]);
    if (b.edge(be).right != iso.right[idx(m.right)]) throw ConsistencyError("isomorphism", "matching not preserved");
    iso.edges[e] = be;
  }
  return iso;
}

}  // namespace

std::string canonical_code(const Tanglegram& tg) {
  check_canonical_size(tg);
  return minimal_code(tg, all_orientations(tg.left()), all_orientations(tg.right())).code;
}

std::vector<TanglegramIsomorphism> all_isomorphisms(const Tanglegram& a, const Tanglegram& b) {
  check_canonical_size(a);
  check_canonical_size(b);
  if (a.size() != b.size()) return {};
  auto alo = all_orientations(a.left());
  auto aro = all_orientations(a.right());
  auto blo = all_orientations(b.left());
  auto bro = all_orientations(b.right());
  auto best = minimal_code(a, alo, aro);
  std::vector<TanglegramIsomorphism> out;
  for (std::size_t i = 0; i < blo.size(); ++i) {
    if (blo[i].shape != alo[best.li].shape) continue;
    for (std::size_t j = 0; j < bro.size(); ++j) {
      if (bro[j].shape != aro[best.ri].shape) continue;
      if (encode(b, blo[i], bro[j]) != best.code) continue;
      auto iso = map_between(a, alo[best.li], aro[best.ri], b, blo[i], bro[j]);
      if (std::find(out.begin(), out.end(), iso) == out.end()) out.push_back(std::move(iso));
    }
  }
  return out;
}

std::optional<TanglegramIsomorphism> tanglegram_isomorphic(const Tanglegram& a, const Tanglegram& b) {
  check_canonical_size(a);
  check_canonical_size(b);
  if (a.size() != b.size()) return std::nullopt;
  auto alo = all_orientations(a.left());
  auto aro = all_orientations(a.right());
  auto blo = all_orientations(b.left());
  auto bro = all_orientations(b.right());
  auto ba = minimal_code(a, alo, aro);
  auto bb = minimal_code(b, blo, bro);
  if (ba.code != bb.code) return std::nullopt;
  return map_between(a, alo[ba.li], aro[ba.ri], b, blo[bb.li], bro[bb.ri]);
}

}  // namespace tangle
