// One-crossing layouts for tanglegrams with a unique cross-responsible set.
//
// All leaf orders here are top-to-bottom on both sides. Each case deletes
// edges of X (and for K2 possibly the d-scarring edges M) to get a planar
// tanglegram, takes a planar layout of it, normalizes its mirror image and
// then splices the deleted leaves back next to their X neighbours.

#include "tangle/construct.hpp"

#include <algorithm>

#include "tangle/error.hpp"

namespace tangle {

namespace {

using Order = std::vector<std::string>;

std::ptrdiff_t pos(const Order& o, const std::string& s) {
  auto it = std::find(o.begin(), o.end(), s);
  if (it == o.end()) throw ConsistencyError("construct", "label '" + s + "' missing from a sublayout");
  return it - o.begin();
}

/// `seq` occurs in `o` as a contiguous run, in this order.
bool contiguous(const Order& o, const Order& seq) {
  return std::search(o.begin(), o.end(), seq.begin(), seq.end()) != o.end();
}

std::string join(const Order& o) {
  std::string s;
  for (const auto& x : o) s += (s.empty() ? "" : ",") + x;
  return s;
}

struct Names {
  std::string l, r;  // left and right leaf labels
};

Names names(const Tanglegram& tg, EdgeId e) {
  const auto& m = tg.edge(e);
  return {tg.left().label(m.left), tg.right().label(m.right)};
}

std::pair<EdgeId, EdgeId> ordered(EdgeId a, EdgeId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

class Builder {
 public:
  Builder(const Tanglegram& tg, CrtOptions options, std::vector<std::string>& trace)
      : tg_(tg), options_(std::move(options)), trace_(trace) {
    options_.override_cap = true;
  }

  /// Planar layout of T[z]; the caller guarantees T[z] has no cross-responsible set.
  LayoutRep planar(const std::vector<EdgeId>& z, const std::string& what) {
    auto sub = induce_subtanglegram(tg_, z);
    auto rep = planar_layout(sub, options_);
    if (!rep) throw ConsistencyError("planar-sublayout", what + " has no planar layout");
    trace_.push_back("planar layout of " + what + " (" + std::to_string(z.size()) + " edges): left " +
                     join(rep->left) + " | right " + join(rep->right));
    return *rep;
  }

  /// Mirror `rep` unless `upper` precedes `lower` in the left order.
  void orient(LayoutRep& rep, const std::string& upper, const std::string& lower, const std::string& why) {
    if (pos(rep.left, upper) > pos(rep.left, lower)) {
      rep = rep.flipped();
      trace_.push_back("mirrored so that " + why);
    }
  }

  void require(bool ok, const std::string& id, const std::string& what) {
    if (!ok) throw ConsistencyError(id, what);
  }

  void note(const std::string& s) { trace_.push_back(s); }

 private:
  const Tanglegram& tg_;
  CrtOptions options_;
  std::vector<std::string>& trace_;
};

struct Built {
  LayoutRep layout;
  std::pair<EdgeId, EdgeId> expected;
};

Built build_k1(const Tanglegram& tg, const CrossResponsibleSet& x, Builder& b) {
  EdgeId e[5] = {-1, x.named("e1"), x.named("e2"), x.named("e3"), x.named("e4")};
  // lam[i] for i = 1..4 on the left, lam[4+i] on the right.
  std::string lam[9];
  for (int i = 1; i <= 4; ++i) {
    auto n = names(tg, e[i]);
    lam[i] = n.l;
    lam[4 + i] = n.r;
  }
  auto d = b.planar(complement(tg, {e[1]}), "T[sigma \\ {e1}]");
  b.orient(d, lam[4], lam[2], "e2 lies below e4");
  b.require(contiguous(d.left, {lam[4], lam[3], lam[2]}), "k1-planar-shape",
            "left order lacks the run " + lam[4] + "," + lam[3] + "," + lam[2]);
  b.require(contiguous(d.right, {lam[8], lam[7], lam[6]}), "k1-planar-shape",
            "right order lacks the run " + lam[8] + "," + lam[7] + "," + lam[6]);
  LayoutRep out;
  out.left = insert_leaf_order(d.left, {lam[1]}, lam[3], lam[2]);
  out.right = insert_leaf_order(d.right, {lam[5]}, lam[8], lam[7]);
  b.note("inserted " + lam[1] + " between " + lam[3] + " and " + lam[2] + " on the left");
  b.note("inserted " + lam[5] + " between " + lam[8] + " and " + lam[7] + " on the right");
  return {out, ordered(e[1], e[3])};
}

struct K2Names {
  EdgeId x, y, u1, u2;
  Names nx, ny, nu1, nu2;
};

K2Names k2_names(const Tanglegram& tg, const CrossResponsibleSet& s) {
  K2Names k{s.named("x"), s.named("y"), s.named("u1"), s.named("u2"), {}, {}, {}, {}};
  k.nx = names(tg, k.x);
  k.ny = names(tg, k.y);
  k.nu1 = names(tg, k.u1);
  k.nu2 = names(tg, k.u2);
  return k;
}

/// D' with u1 below u2; both sides carry the run (u2, y, u1).
LayoutRep k2_prime(const Tanglegram& tg, const K2Names& k, const std::vector<EdgeId>& removed, Builder& b,
                   const std::string& what) {
  auto d = b.planar(complement(tg, removed), what);
  b.orient(d, k.nu2.l, k.nu1.l, "u1 lies below u2");
  b.require(contiguous(d.left, {k.nu2.l, k.ny.l, k.nu1.l}), "k2-planar-shape",
            "left order lacks the run " + k.nu2.l + "," + k.ny.l + "," + k.nu1.l);
  b.require(contiguous(d.right, {k.nu2.r, k.ny.r, k.nu1.r}), "k2-planar-shape",
            "right order lacks the run " + k.nu2.r + "," + k.ny.r + "," + k.nu1.r);
  return d;
}

Built build_k2_empty(const Tanglegram& tg, const CrossResponsibleSet& s, Builder& b) {
  auto k = k2_names(tg, s);
  auto d = k2_prime(tg, k, {k.x}, b, "T[sigma \\ {x}]");
  LayoutRep out;
  out.left = insert_leaf_order(d.left, {k.nx.l}, k.nu2.l, k.ny.l);
  out.right = insert_leaf_order(d.right, {k.nx.r}, k.ny.r, k.nu1.r);
  b.note("inserted " + k.nx.l + " between " + k.nu2.l + " and " + k.ny.l + " on the left");
  b.note("inserted " + k.nx.r + " between " + k.ny.r + " and " + k.nu1.r + " on the right");
  return {out, ordered(k.x, k.y)};
}

/// M scars d1 (and f2).
Built build_k2_d1(const Tanglegram& tg, const CrossResponsibleSet& s, const std::vector<EdgeId>& m, Builder& b) {
  auto k = k2_names(tg, s);
  std::vector<EdgeId> removed = m;
  removed.push_back(k.x);
  auto d = k2_prime(tg, k, removed, b, "T[sigma \\ (M + {x})]");

  std::vector<EdgeId> star = m;
  for (EdgeId e : {k.x, k.y, k.u1}) star.push_back(e);
  std::sort(star.begin(), star.end());
  auto ds = b.planar(star, "T[M + {x, y, u1}]");
  b.orient(ds, k.nx.l, k.nu1.l, "u1 lies below x");
  // Expected shapes: left (x, k5, y, u1) and right (x, k6, y, u1).
  const auto nl = ds.left.size(), nr = ds.right.size();
  b.require(nl >= 3 && ds.left.front() == k.nx.l && ds.left[nl - 2] == k.ny.l && ds.left[nl - 1] == k.nu1.l,
            "k2-star-shape", "left order of the star layout is " + join(ds.left));
  b.require(nr >= 3 && ds.right.front() == k.nx.r && ds.right[nr - 2] == k.ny.r && ds.right[nr - 1] == k.nu1.r,
            "k2-star-shape", "right order of the star layout is " + join(ds.right));
  Order seg_left(ds.left.begin(), ds.left.end() - 2);        // x, k5
  Order k6(ds.right.begin() + 1, ds.right.end() - 2);         // k6

  LayoutRep out;
  out.left = insert_leaf_order(d.left, seg_left, k.nu2.l, k.ny.l);
  b.note("inserted " + join(seg_left) + " between " + k.nu2.l + " and " + k.ny.l + " on the left");
  out.right = d.right;
  if (!k6.empty()) out.right = insert_leaf_order(out.right, k6, k.nu2.r, k.ny.r);
  out.right.insert(out.right.begin() + pos(out.right, k.nu2.r), k.nx.r);
  b.note("right order built as (k3, " + k.nx.r + ", " + k.nu2.r + ", " + join(k6) + ", " + k.ny.r + ", " + k.nu1.r +
         ", k4)");
  return {out, ordered(k.x, k.u2)};
}

std::vector<EdgeId> d_scarring(const Tanglegram& tg, const CrossResponsibleSet& s, bool left_d1) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < tg.size(); ++i) {
    auto e = static_cast<EdgeId>(i);
    if (std::find(s.edges.begin(), s.edges.end(), e) != s.edges.end()) continue;
    auto st = scar_type(tg, s, e);
    if (left_d1 ? st.left == "d1" : st.right == "d2") out.push_back(e);
  }
  return out;
}

}  // namespace

std::string to_string(ConstructCase c) {
  switch (c) {
    case ConstructCase::K1: return "K1";
    case ConstructCase::K2MEmpty: return "K2-M-empty";
    case ConstructCase::K2MOnD1: return "K2-M-on-d1";
    case ConstructCase::K2MOnD2: return "K2-M-on-d2";
  }
  return "?";
}

std::vector<std::string> insert_leaf_order(const std::vector<std::string>& base, const std::vector<std::string>& segment,
                                           const std::string& a, const std::string& b) {
  auto ia = std::find(base.begin(), base.end(), a);
  auto ib = std::find(base.begin(), base.end(), b);
  if (ia == base.end() || ib == base.end()) throw DomainError("insert_leaf_order: anchor not in the order");
  auto d = ib - ia;
  if (d != 1 && d != -1) throw DomainError("insert_leaf_order: anchors '" + a + "' and '" + b + "' are not adjacent");
  std::vector<std::string> out(base.begin(), std::max(ia, ib));
  out.insert(out.end(), segment.begin(), segment.end());
  out.insert(out.end(), std::max(ia, ib), base.end());
  return out;
}

OneCrossCertificate one_crossing_layout(const Tanglegram& tg, const CrtOptions& options) {
  auto sets = cross_responsible_sets(tg);
  if (sets.size() != 1)
    throw PreconditionError("|X|=" + std::to_string(sets.size()) + ": exactly one cross-responsible set required",
                            sets.size());
  OneCrossCertificate cert;
  cert.set = sets.front();
  const auto& x = cert.set;
  if (auto v = validate_unique_set_lemmas(tg, x); !v.empty()) throw ConsistencyError(v.front().lemma, v.front().detail);

  Builder b(tg, options, cert.trace);
  Built built;
  if (x.kind == CrsKind::K1) {
    cert.kind = ConstructCase::K1;
    b.note("X induces K1; e1=" + tg.edge_name(x.named("e1")) + " e3=" + tg.edge_name(x.named("e3")));
    built = build_k1(tg, x, b);
  } else {
    auto m1 = d_scarring(tg, x, true);
    auto m2 = d_scarring(tg, x, false);
    if (m1.empty() && m2.empty()) {
      cert.kind = ConstructCase::K2MEmpty;
      b.note("X induces K2; M is empty");
      built = build_k2_empty(tg, x, b);
    } else if (m2.empty()) {
      cert.kind = ConstructCase::K2MOnD1;
      b.note("X induces K2; " + std::to_string(m1.size()) + " edge(s) scar d1");
      built = build_k2_d1(tg, x, m1, b);
    } else {
      // Exchange the sides: d2 becomes d1 and u1, u2 trade places.
      cert.kind = ConstructCase::K2MOnD2;
      b.note("X induces K2; " + std::to_string(m2.size()) + " edge(s) scar d2; solving the mirrored tanglegram");
      auto mirror = tg.mirrored();
      auto msets = cross_responsible_sets(mirror, 2);
      if (msets.size() != 1) throw ConsistencyError("mirror", "mirrored tanglegram lost uniqueness");
      auto mm = d_scarring(mirror, msets.front(), true);
      Builder mb(mirror, options, cert.trace);
      built = build_k2_d1(mirror, msets.front(), mm, mb);
      built.layout = built.layout.swapped();
    }
  }

  cert.layout = std::move(built.layout);
  if (!is_layout(tg, cert.layout)) throw ConsistencyError("construct", "spliced orders are not consistent");
  auto pairs = crossing_pairs(tg, cert.layout);
  if (pairs.size() != 1)
    throw ConsistencyError("construct", "layout has " + std::to_string(pairs.size()) + " crossings, expected 1");
  if (pairs.front() != built.expected)
    throw ConsistencyError("construct", "crossing between " + tg.edge_name(pairs.front().first) + " and " +
                                            tg.edge_name(pairs.front().second) + ", expected " +
                                            tg.edge_name(built.expected.first) + " and " +
                                            tg.edge_name(built.expected.second));
  cert.crossing_pair = pairs.front();
  b.note("verified: consistent, one crossing between " + tg.edge_name(cert.crossing_pair.first) + " and " +
         tg.edge_name(cert.crossing_pair.second));
  return cert;
}

}  // namespace tangle
