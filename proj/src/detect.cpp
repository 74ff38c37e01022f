#include "tangle/detect.hpp"

#include <algorithm>

#include "tangle/error.hpp"
#include "tangle/layout.hpp"

namespace tangle {

namespace {

int deeper(const RootedBinaryTree& t, NodeId a, NodeId b) { return t.depth(a) - t.depth(b); }

bool same_pair(std::array<EdgeId, 2> a, std::array<EdgeId, 2> b) {
  return (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]);
}

struct EdgeQuartet {
  bool balanced;
  std::array<EdgeId, 4> roles;
};

EdgeQuartet edge_quartet(const Tanglegram& tg, const std::array<EdgeId, 4>& x, bool left) {
  const auto& tree = left ? tg.left() : tg.right();
  std::array<NodeId, 4> leaves{};
  for (std::size_t i = 0; i < 4; ++i) leaves[i] = left ? tg.edge(x[i]).left : tg.edge(x[i]).right;
  auto q = quartet_shape(tree, leaves);
  EdgeQuartet out{q.balanced, {}};
  for (std::size_t i = 0; i < 4; ++i) out.roles[i] = left ? tg.edge_at_left(q.roles[i]) : tg.edge_at_right(q.roles[i]);
  return out;
}

CrossResponsibleSet label_k1(const Tanglegram& tg, std::array<EdgeId, 4> x) {
  const auto& L = tg.left();
  const auto& R = tg.right();
  auto lc = [&](EdgeId a, EdgeId b) { return L.meet(tg.edge(a).left, tg.edge(b).left); };
  auto rc = [&](EdgeId a, EdgeId b) { return R.meet(tg.edge(a).right, tg.edge(b).right); };
  // In the induced trees two leaves form a cherry iff their meet is deeper
  // than their meets with the other two leaves.
  auto cherry_l = [&](EdgeId a, EdgeId b, EdgeId c) { return deeper(L, lc(a, b), lc(a, c)) > 0; };
  auto cherry_r = [&](EdgeId a, EdgeId b, EdgeId c) { return deeper(R, rc(a, b), rc(a, c)) > 0; };

  std::array<EdgeId, 4> p = x;
  std::sort(p.begin(), p.end());
  do {
    // p = (e1, e2, e3, e4): left cherries {e1,e2},{e3,e4}; right {e1,e4},{e2,e3}.
    if (cherry_l(p[0], p[1], p[2]) && cherry_l(p[2], p[3], p[0]) && cherry_r(p[0], p[3], p[1]) &&
        cherry_r(p[1], p[2], p[0]))
      break;
  } while (std::next_permutation(p.begin(), p.end()));

  CrossResponsibleSet s;
  s.kind = CrsKind::K1;
  s.edges = x;
  std::sort(s.edges.begin(), s.edges.end());
  for (int i = 0; i < 4; ++i) s.matching["e" + std::to_string(i + 1)] = p[static_cast<std::size_t>(i)];
  NodeId l1 = tg.edge(p[0]).left, l2 = tg.edge(p[1]).left, l3 = tg.edge(p[2]).left, l4 = tg.edge(p[3]).left;
  NodeId l5 = tg.edge(p[0]).right, l6 = tg.edge(p[1]).right, l7 = tg.edge(p[2]).right, l8 = tg.edge(p[3]).right;
  s.left_edges = {{L.meet(l1, l3), "rL"}, {L.meet(l1, l2), "x1"}, {L.meet(l3, l4), "x2"},
                  {l1, "f1"},             {l2, "f2"},             {l3, "f3"},
                  {l4, "f4"}};
  s.right_edges = {{R.meet(l5, l6), "rR"}, {R.meet(l5, l8), "x3"}, {R.meet(l6, l7), "x4"},
                   {l5, "f5"},             {l6, "f6"},             {l7, "f7"},
                   {l8, "f8"}};
  return s;
}

CrossResponsibleSet label_k2(const Tanglegram& tg, std::array<EdgeId, 4> x, EdgeId ex, EdgeId ey, EdgeId eu1,
                             EdgeId eu2) {
  const auto& L = tg.left();
  const auto& R = tg.right();
  CrossResponsibleSet s;
  s.kind = CrsKind::K2;
  s.edges = x;
  std::sort(s.edges.begin(), s.edges.end());
  s.matching = {{"x", ex}, {"y", ey}, {"u1", eu1}, {"u2", eu2}};
  NodeId lx = tg.edge(ex).left, ly = tg.edge(ey).left, lu1 = tg.edge(eu1).left, lu2 = tg.edge(eu2).left;
  NodeId rx = tg.edge(ex).right, ry = tg.edge(ey).right, ru1 = tg.edge(eu1).right, ru2 = tg.edge(eu2).right;
  s.left_edges = {{L.meet(lu2, lx), "a1"}, {L.meet(lx, ly), "b1"}, {lu2, "c1"}, {lx, "d1"},
                  {L.meet(ly, lu1), "e1"}, {ly, "f1"},             {lu1, "g1"}};
  s.right_edges = {{R.meet(ru1, rx), "a2"}, {R.meet(rx, ry), "b2"}, {ru1, "c2"}, {rx, "d2"},
                   {R.meet(ry, ru2), "e2"}, {ry, "f2"},             {ru2, "g2"}};
  return s;
}

}  // namespace

std::string to_string(CrsKind kind) { return kind == CrsKind::K1 ? "K1" : "K2"; }

std::vector<int> UndirectedGraph::degrees() const {
  std::vector<int> d(vertex_count, 0);
  for (auto [a, b] : edges) {
    ++d[static_cast<std::size_t>(a)];
    ++d[static_cast<std::size_t>(b)];
  }
  return d;
}

Quartet quartet_shape(const RootedBinaryTree& tree, std::array<NodeId, 4> leaves) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!tree.is_leaf(leaves[i])) throw DomainError("quartet: not a leaf");
    for (std::size_t j = 0; j < i; ++j)
      if (leaves[i] == leaves[j]) throw DomainError("quartet: repeated leaf");
  }
  // The deepest pairwise meet is a cherry of the induced tree.
  std::size_t bi = 0, bj = 1;
  int best = -1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      int d = tree.depth(tree.meet(leaves[i], leaves[j]));
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  std::array<NodeId, 2> rest{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != bi && i != bj) rest[k++] = leaves[i];
  NodeId a = leaves[bi], b = leaves[bj];
  NodeId m_cd = tree.meet(rest[0], rest[1]);
  NodeId m_ac = tree.meet(a, rest[0]);
  NodeId m_ad = tree.meet(a, rest[1]);
  Quartet q;
  if (deeper(tree, m_cd, m_ac) > 0 && deeper(tree, m_cd, m_ad) > 0) {
    q.balanced = true;
    q.roles = {a, b, rest[0], rest[1]};
  } else {
    bool c_deeper = deeper(tree, m_ac, m_ad) > 0;
    NodeId depth2 = c_deeper ? rest[0] : rest[1];
    NodeId depth1 = c_deeper ? rest[1] : rest[0];
    q.balanced = false;
    q.roles = {depth1, depth2, a, b};
  }
  return q;
}

std::optional<CrossResponsibleSet> classify_quartet(const Tanglegram& tg, std::array<EdgeId, 4> x) {
  auto ql = edge_quartet(tg, x, true);
  auto qr = edge_quartet(tg, x, false);
  if (ql.balanced != qr.balanced) return std::nullopt;
  if (ql.balanced) {
    std::array<EdgeId, 2> l0{ql.roles[0], ql.roles[1]};
    std::array<EdgeId, 2> r0{qr.roles[0], qr.roles[1]};
    std::array<EdgeId, 2> r1{qr.roles[2], qr.roles[3]};
    if (same_pair(l0, r0) || same_pair(l0, r1)) return std::nullopt;
    return label_k1(tg, x);
  }
  // Caterpillars: the depth-2 leaves carry x; the cherries share exactly y;
  // each side's depth-1 leaf is the other side's remaining cherry leaf.
  EdgeId x_edge = ql.roles[1];
  if (qr.roles[1] != x_edge) return std::nullopt;
  std::array<EdgeId, 2> cl{ql.roles[2], ql.roles[3]};
  std::array<EdgeId, 2> cr{qr.roles[2], qr.roles[3]};
  if (same_pair(cl, cr)) return std::nullopt;
  EdgeId y = kNoNode;
  for (EdgeId a : cl)
    for (EdgeId b : cr)
      if (a == b) y = a;
  if (y == kNoNode) return std::nullopt;
  EdgeId u1 = cl[0] == y ? cl[1] : cl[0];  // left cherry partner of y
  EdgeId u2 = cr[0] == y ? cr[1] : cr[0];  // right cherry partner of y
  if (ql.roles[0] != u2 || qr.roles[0] != u1) return std::nullopt;
  return label_k2(tg, x, x_edge, y, u1, u2);
}

std::vector<CrossResponsibleSet> cross_responsible_sets(const Tanglegram& tg, std::size_t limit) {
  std::vector<CrossResponsibleSet> out;
  const auto n = static_cast<EdgeId>(tg.size());
  for (EdgeId a = 0; a < n; ++a)
    for (EdgeId b = a + 1; b < n; ++b)
      for (EdgeId c = b + 1; c < n; ++c)
        for (EdgeId d = c + 1; d < n; ++d) {
          if (auto s = classify_quartet(tg, {a, b, c, d})) {
            out.push_back(std::move(*s));
            if (limit != 0 && out.size() >= limit) return out;
          }
        }
  return out;
}

std::vector<std::array<EdgeId, 4>> cross_responsible_sets_by_crt(const Tanglegram& tg) {
  std::vector<std::array<EdgeId, 4>> out;
  const auto n = static_cast<EdgeId>(tg.size());
  for (EdgeId a = 0; a < n; ++a)
    for (EdgeId b = a + 1; b < n; ++b)
      for (EdgeId c = b + 1; c < n; ++c)
        for (EdgeId d = c + 1; d < n; ++d)
          if (exact_crt(induce_subtanglegram(tg, {a, b, c, d})).value >= 1) out.push_back({a, b, c, d});
  return out;
}

ScarType scar_type(const Tanglegram& tg, const CrossResponsibleSet& x, EdgeId m) {
  auto rec = scar_of(tg, x.edge_list(), m);
  auto l = x.left_edges.find(rec.left_scar_host);
  auto r = x.right_edges.find(rec.right_scar_host);
  if (l == x.left_edges.end() || r == x.right_edges.end())
    throw ConsistencyError("labeling", "scarred edge missing from the standardized labeling");
  return {l->second, r->second};
}

bool is_safe_pair(const Tanglegram& tg, EdgeId e, EdgeId f) {
  if (e == f) throw DomainError("is_safe_pair: an edge is not paired with itself");
  const auto& a = tg.edge(e);
  const auto& b = tg.edge(f);
  return tg.left().is_cherry(a.left, b.left) || tg.right().is_cherry(a.right, b.right);
}

std::vector<std::pair<EdgeId, EdgeId>> unsafe_pairs(const Tanglegram& tg) {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  const auto n = static_cast<EdgeId>(tg.size());
  for (EdgeId e = 0; e < n; ++e)
    for (EdgeId f = e + 1; f < n; ++f)
      if (!is_safe_pair(tg, e, f)) out.emplace_back(e, f);
  return out;
}

UndirectedGraph associated_graph(const Tanglegram& tg) {
  UndirectedGraph g;
  const auto nl = static_cast<int>(tg.left().node_count());
  g.vertex_count = tg.left().node_count() + tg.right().node_count();
  for (std::size_t v = 1; v < tg.left().node_count(); ++v)
    g.edges.emplace_back(tg.left().parent(static_cast<NodeId>(v)), static_cast<int>(v));
  for (std::size_t v = 1; v < tg.right().node_count(); ++v)
    g.edges.emplace_back(nl + tg.right().parent(static_cast<NodeId>(v)), nl + static_cast<int>(v));
  for (const auto& m : tg.sigma()) g.edges.emplace_back(m.left, nl + m.right);
  g.edges.emplace_back(tg.left().root(), nl + tg.right().root());
  return g;
}

const std::vector<ScarType>& allowed_k2_scar_types() {
  static const std::vector<ScarType> allowed = {{"a1", "a2"}, {"a1", "b2"}, {"b1", "a2"}, {"a1", "c2"}, {"c1", "a2"},
                                                {"b1", "c2"}, {"c1", "b2"}, {"d1", "f2"}, {"f1", "d2"}};
  return allowed;
}

std::vector<LemmaViolation> validate_unique_set_lemmas(const Tanglegram& tg, const CrossResponsibleSet& x) {
  std::vector<LemmaViolation> out;
  auto members = x.edge_list();
  auto sub = induce(tg, members);
  std::vector<std::pair<EdgeId, ScarType>> types;
  for (std::size_t i = 0; i < tg.size(); ++i) {
    auto m = static_cast<EdgeId>(i);
    if (std::find(members.begin(), members.end(), m) != members.end()) continue;
    auto rec = scar_of(sub, tg, m);
    types.emplace_back(m, ScarType{x.left_edges.at(rec.left_scar_host), x.right_edges.at(rec.right_scar_host)});
  }

  auto violation = [&](std::string lemma, EdgeId m, const ScarType& st) {
    out.push_back({std::move(lemma), m, tg.edge_name(m) + " has scar-type (" + st.left + "," + st.right + ")"});
  };

  if (x.kind == CrsKind::K1) {
    for (const auto& [m, st] : types) {
      if (st.left != "rL" && st.right != "rR") violation("k1-outside-scar", m, st);
      if (st.left[0] == 'f' || st.right[0] == 'f') violation("k1-no-leaf-scar", m, st);
    }
    return out;
  }

  const auto& allowed = allowed_k2_scar_types();
  bool m1 = false, m2 = false;
  for (const auto& [m, st] : types) {
    if (std::find(allowed.begin(), allowed.end(), st) == allowed.end()) violation("k2-scar-type", m, st);
    for (const char* bad : {"e1", "g1"})
      if (st.left == bad) violation("k2-unscarred-edges", m, st);
    for (const char* bad : {"e2", "g2"})
      if (st.right == bad) violation("k2-unscarred-edges", m, st);
    if ((st.left == "d1") != (st.right == "f2") || (st.right == "d2") != (st.left == "f1"))
      violation("k2-d-f-pairing", m, st);
    m1 = m1 || st.left == "d1";
    m2 = m2 || st.right == "d2";
  }
  if (m1 && m2) out.push_back({"k2-single-d-side", -1, "outside edges scar both d1 and d2"});
  return out;
}

}  // namespace tangle
