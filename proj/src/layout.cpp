#include "tangle/layout.hpp"

#include <algorithm>
#include <unordered_set>

#include "tangle/error.hpp"
#include "tangle/kernels.hpp"

namespace tangle {

namespace {

std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }

std::vector<NodeId> to_nodes(const RootedBinaryTree& tree, const std::vector<std::string>& order) {
  if (order.size() != tree.leaf_count())
    throw DomainError("order has " + std::to_string(order.size()) + " labels, tree has " +
                      std::to_string(tree.leaf_count()) + " leaves");
  std::vector<NodeId> nodes;
  nodes.reserve(order.size());
  std::vector<bool> seen(tree.node_count(), false);
  for (const auto& lab : order) {
    NodeId v = tree.leaf(lab);
    if (seen[idx(v)]) throw DomainError("order repeats leaf '" + lab + "'");
    seen[idx(v)] = true;
    nodes.push_back(v);
  }
  return nodes;
}

/// position of each matching edge on the left and right leaf lines.
struct Positions {
  std::vector<std::int32_t> left, right;
};

Positions positions(const Tanglegram& tg, const LayoutRep& rep) {
  auto ln = to_nodes(tg.left(), rep.left);
  auto rn = to_nodes(tg.right(), rep.right);
  Positions p;
  p.left.assign(tg.size(), 0);
  p.right.assign(tg.size(), 0);
  for (std::size_t i = 0; i < ln.size(); ++i) p.left[idx(tg.edge_at_left(ln[i]))] = static_cast<std::int32_t>(i);
  for (std::size_t i = 0; i < rn.size(); ++i) p.right[idx(tg.edge_at_right(rn[i]))] = static_cast<std::int32_t>(i);
  return p;
}

std::uint64_t merge_count(std::vector<std::int32_t>& v, std::vector<std::int32_t>& tmp, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      inv += mid - i;
      tmp[k++] = v[j++];
    } else {
      tmp[k++] = v[i++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo), tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace

LayoutRep LayoutRep::flipped() const {
  LayoutRep r{left, right};
  std::reverse(r.left.begin(), r.left.end());
  std::reverse(r.right.begin(), r.right.end());
  return r;
}

bool is_consistent(const RootedBinaryTree& tree, const std::vector<NodeId>& order) {
  if (order.size() != tree.leaf_count()) throw DomainError("order is not a permutation of the leaves");
  const auto n = tree.node_count();
  std::vector<int> lo(n, static_cast<int>(order.size())), hi(n, -1), cnt(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId v = order[i];
    if (v < 0 || idx(v) >= n || !tree.is_leaf(v) || seen[idx(v)])
      throw DomainError("order is not a permutation of the leaves");
    seen[idx(v)] = true;
    lo[idx(v)] = hi[idx(v)] = static_cast<int>(i);
    cnt[idx(v)] = 1;
  }
  for (std::size_t v = n; v-- > 1;) {
    NodeId p = tree.parent(static_cast<NodeId>(v));
    lo[idx(p)] = std::min(lo[idx(p)], lo[v]);
    hi[idx(p)] = std::max(hi[idx(p)], hi[v]);
    cnt[idx(p)] += cnt[v];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (hi[v] - lo[v] + 1 != cnt[v]) return false;
  return true;
}

bool is_consistent(const RootedBinaryTree& tree, const std::vector<std::string>& order) {
  return is_consistent(tree, to_nodes(tree, order));
}

void check_permutations(const Tanglegram& tg, const LayoutRep& rep) {
  to_nodes(tg.left(), rep.left);
  to_nodes(tg.right(), rep.right);
}

bool is_layout(const Tanglegram& tg, const LayoutRep& rep) {
  return is_consistent(tg.left(), rep.left) && is_consistent(tg.right(), rep.right);
}

std::uint64_t count_inversions(std::vector<std::int32_t> seq) {
  std::vector<std::int32_t> tmp(seq.size());
  return merge_count(seq, tmp, 0, seq.size());
}

std::uint64_t crossing_count(const Tanglegram& tg, const LayoutRep& rep) {
  auto p = positions(tg, rep);
  // Right positions listed in left order; each inversion is a crossing.
  std::vector<std::int32_t> seq(tg.size());
  for (std::size_t e = 0; e < tg.size(); ++e) seq[idx(p.left[e])] = p.right[e];
  return count_inversions(std::move(seq));
}

std::uint64_t crossing_count_pairwise(const Tanglegram& tg, const LayoutRep& rep) {
  auto p = positions(tg, rep);
  return kernels::count_discordant_pairs(p.left, p.right);
}

std::vector<std::pair<EdgeId, EdgeId>> crossing_pairs(const Tanglegram& tg, const LayoutRep& rep) {
  auto p = positions(tg, rep);
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (std::size_t i = 0; i < tg.size(); ++i)
    for (std::size_t j = i + 1; j < tg.size(); ++j)
      if ((p.left[i] < p.left[j]) != (p.right[i] < p.right[j]))
        out.emplace_back(static_cast<EdgeId>(i), static_cast<EdgeId>(j));
  return out;
}

std::vector<std::string> default_order(const RootedBinaryTree& tree) {
  std::vector<std::string> out;
  for (NodeId v : tree.leaves()) out.push_back(tree.label(v));
  return out;
}

OneSided optimize_one_side(const Tanglegram& tg, const std::vector<std::string>& fixed_left) {
  auto ln = to_nodes(tg.left(), fixed_left);
  if (!is_consistent(tg.left(), ln)) throw DomainError("optimize_one_side: fixed left order is not consistent");
  const auto& rt = tg.right();
  // by_rank[r]: left position of the partner of the right leaf of rank r.
  std::vector<std::int32_t> by_rank(tg.size());
  for (std::size_t i = 0; i < ln.size(); ++i) {
    NodeId rleaf = tg.edge(tg.edge_at_left(ln[i])).right;
    by_rank[idx(rt.leaf_rank(rleaf))] = static_cast<std::int32_t>(i);
  }
  std::span<const std::int32_t> all(by_rank);
  std::vector<bool> flip(rt.branching_nodes().size(), false);
  OneSided out;
  for (NodeId w : rt.branching_nodes()) {
    NodeId a = rt.child(w, 0), b = rt.child(w, 1);
    auto sa = all.subspan(idx(rt.leaf_begin(a)), idx(rt.leaf_end(a) - rt.leaf_begin(a)));
    auto sb = all.subspan(idx(rt.leaf_begin(b)), idx(rt.leaf_end(b) - rt.leaf_begin(b)));
    // a above b on the right crosses every pair where a sits below b on the left.
    std::uint64_t ab = kernels::count_greater_pairs(sa, sb);
    std::uint64_t ba = sa.size() * sb.size() - ab;
    flip[idx(rt.branching_index(w))] = ba < ab;
    out.crossings += std::min(ab, ba);
  }
  for (NodeId v : rt.oriented_leaf_order([&](int i) { return static_cast<bool>(flip[idx(i)]); }))
    out.right.push_back(rt.label(v));
  return out;
}

LayoutRep restrict_layout(const Tanglegram& tg, const LayoutRep& rep, const std::vector<EdgeId>& z) {
  check_permutations(tg, rep);
  std::unordered_set<std::string> keep_l, keep_r;
  for (EdgeId e : z) {
    const auto& m = tg.edge(e);
    keep_l.insert(tg.left().label(m.left));
    keep_r.insert(tg.right().label(m.right));
  }
  LayoutRep out;
  for (const auto& s : rep.left)
    if (keep_l.contains(s)) out.left.push_back(s);
  for (const auto& s : rep.right)
    if (keep_r.contains(s)) out.right.push_back(s);
  return out;
}

}  // namespace tangle
