#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tangle/detect.hpp"
#include "tangle/layout.hpp"

namespace tangle {

enum class ConstructCase { K1, K2MEmpty, K2MOnD1, K2MOnD2 };
std::string to_string(ConstructCase c);

struct OneCrossCertificate {
  LayoutRep layout;
  std::pair<EdgeId, EdgeId> crossing_pair{-1, -1};  // smaller id first
  ConstructCase kind = ConstructCase::K1;
  CrossResponsibleSet set;
  std::vector<std::string> trace;
};

/// Layout with exactly one crossing for a tanglegram whose only
/// cross-responsible set is X.
///
/// Throws PreconditionError (count = number of sets) unless there is exactly
/// one set, and ConsistencyError when a structural lemma fails on the input
/// or a planar sublayout lacks the shape the construction relies on. The
/// result is checked before it is returned: both orders consistent, exactly
/// one crossing, and that crossing between the expected pair (e1,e3) for K1,
/// (x,y) without M, (x,u2) for M on d1 and (x,u1) for M on d2.
OneCrossCertificate one_crossing_layout(const Tanglegram& tg, const CrtOptions& options = {});

/// `base` with `segment` spliced between the adjacent labels `a` and `b`
/// (in either order). DomainError if they are missing or not adjacent.
std::vector<std::string> insert_leaf_order(const std::vector<std::string>& base, const std::vector<std::string>& segment,
                                           const std::string& a, const std::string& b);

}  // namespace tangle
