#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

enum class CrsKind { K1, K2 };
std::string to_string(CrsKind kind);

/// A 4-subset of σ inducing K1 or K2, with the standardized names of the
/// copy's matching edges and of the edges of the two induced trees.
///
/// K2 names follow the standardized labeling (a1..g1 left, a2..g2 right,
/// matching x, y, u1, u2). K1 names: matching e1..e4 with e1,e3 unsafe and
/// the left leaves of e1,e2 a cherry; tree edges rL/rR (root-edges), x1..x4
/// (edges above the cherry parents x1 = λ1∧λ2, x2 = λ3∧λ4, x3 = λ5∧λ8,
/// x4 = λ6∧λ7) and f1..f8 (leaf-edges of λ1..λ8).
struct CrossResponsibleSet {
  std::array<EdgeId, 4> edges{};  // sorted host edge ids
  CrsKind kind = CrsKind::K1;
  std::map<std::string, EdgeId> matching;  // name -> host edge
  /// Induced-tree edges keyed by the host node at their lower end.
  std::map<NodeId, std::string> left_edges;
  std::map<NodeId, std::string> right_edges;

  EdgeId named(const std::string& name) const { return matching.at(name); }
  std::vector<EdgeId> edge_list() const { return {edges.begin(), edges.end()}; }
};

/// Induced shape of four leaves: for a balanced tree roles = {a, b, c, d}
/// with cherries {a,b} and {c,d}; for a caterpillar roles = {depth-1 leaf,
/// depth-2 leaf, cherry, cherry}.
struct Quartet {
  bool balanced = false;
  std::array<NodeId, 4> roles{};
};
Quartet quartet_shape(const RootedBinaryTree& tree, std::array<NodeId, 4> leaves);

/// Classifies the 4-subset X directly from the two quartet shapes; nullopt
/// if T[X] is planar.
std::optional<CrossResponsibleSet> classify_quartet(const Tanglegram& tg, std::array<EdgeId, 4> x);

/// All cross-responsible sets, ordered by edge ids. `limit` stops the scan
/// once that many sets are found (0 = no limit).
std::vector<CrossResponsibleSet> cross_responsible_sets(const Tanglegram& tg, std::size_t limit = 0);

/// Reference enumeration: X qualifies iff exact_crt(T[X]) = 1, kind from the
/// induced tree shapes. Slower; kept as an independent oracle.
std::vector<std::array<EdgeId, 4>> cross_responsible_sets_by_crt(const Tanglegram& tg);

struct ScarType {
  std::string left;
  std::string right;
  friend bool operator==(const ScarType&, const ScarType&) = default;
  friend auto operator<=>(const ScarType&, const ScarType&) = default;
};

/// Standardized names of the edges carrying m's scars on T[X].
ScarType scar_type(const Tanglegram& tg, const CrossResponsibleSet& x, EdgeId m);

/// Leaves of e and f form a cherry in the left or the right tree.
bool is_safe_pair(const Tanglegram& tg, EdgeId e, EdgeId f);
std::vector<std::pair<EdgeId, EdgeId>> unsafe_pairs(const Tanglegram& tg);

struct UndirectedGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degrees() const;
};

/// T*: both trees, the matching and one edge joining the roots. Left tree
/// nodes keep their ids, right tree node v becomes left.node_count() + v.
UndirectedGraph associated_graph(const Tanglegram& tg);

bool is_planar_graph(const UndirectedGraph& g);

/// Outcome of checking the structural lemmas that must hold when X is the
/// only cross-responsible set.
struct LemmaViolation {
  /// k1-outside-scar, k1-no-leaf-scar, k2-scar-type, k2-unscarred-edges,
  /// k2-d-f-pairing, k2-single-d-side
  std::string lemma;
  EdgeId edge = -1;   // offending outside edge, -1 for set-level lemmas
  std::string detail;
};

std::vector<LemmaViolation> validate_unique_set_lemmas(const Tanglegram& tg, const CrossResponsibleSet& x);

/// K2 scar-types allowed for outside edges when X is unique.
const std::vector<ScarType>& allowed_k2_scar_types();

}  // namespace tangle
