#include "tangle/gen.hpp"

#include <functional>
#include <limits>
#include <numeric>

#include "tangle/error.hpp"
#include "tangle/io.hpp"

namespace tangle {

namespace {

std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }

/// Labels the leaves prefix1.. in preorder (child 0 first).
RootedBinaryTree label_preorder(const std::vector<std::array<NodeId, 2>>& ch, const std::string& prefix) {
  std::vector<std::string> labels(ch.size());
  int next = 1;
  std::vector<NodeId> stack{0};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    const auto& c = ch[idx(v)];
    if (v != 0 && c[0] == kNoNode) labels[idx(v)] = prefix + std::to_string(next++);
    if (c[1] != kNoNode) stack.push_back(c[1]);
    if (c[0] != kNoNode) stack.push_back(c[0]);
  }
  return RootedBinaryTree::from_children(0, ch, labels);
}

/// Shapes as Newick skeletons with '*' for leaves.
const std::vector<std::string>& shape_skeletons(std::size_t n) {
  static std::vector<std::vector<std::string>> memo{{}, {"*"}};
  while (memo.size() <= n) {
    std::size_t k = memo.size();
    std::vector<std::string> out;
    for (std::size_t a = k - 1; a >= (k + 1) / 2; --a) {
      std::size_t b = k - a;
      const auto& sa = memo[a];
      const auto& sb = memo[b];
      for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = a == b ? i : 0; j < sb.size(); ++j) out.push_back("(" + sa[i] + "," + sb[j] + ")");
    }
    memo.push_back(std::move(out));
  }
  return memo[n];
}

std::string fill(const std::string& skeleton, const std::string& prefix) {
  std::string out;
  int next = 1;
  for (char c : skeleton) {
    if (c == '*')
      out += prefix + std::to_string(next++);
    else
      out += c;
  }
  return out + ";";
}

/// (p1,(p2,(...,pm))) with labels prefix{first}..prefix{first+m-1}.
std::string caterpillar(const std::string& prefix, std::size_t first, std::size_t m) {
  std::string s, close;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    s += "(" + prefix + std::to_string(first + i) + ",";
    close += ")";
  }
  return s + prefix + std::to_string(first + m - 1) + close;
}

Tanglegram assemble(const std::string& left, const std::string& right,
                    const std::vector<std::pair<std::string, std::string>>& pairs) {
  return Tanglegram::from_labels(parse_newick(left), parse_newick(right), pairs);
}

std::string L(std::size_t i) { return "l" + std::to_string(i); }
std::string R(std::size_t i) { return "r" + std::to_string(i); }

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below: zero bound");
  // Reject the short top segment so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

RootedBinaryTree random_tree(std::size_t n, Rng& rng, const std::string& prefix) {
  if (n == 0) throw DomainError("random_tree: n must be positive");
  std::vector<std::array<NodeId, 2>> ch{{1, kNoNode}, {kNoNode, kNoNode}};
  std::vector<NodeId> parent{kNoNode, 0};
  for (std::size_t k = 1; k < n; ++k) {
    // Edges are named by their lower node 1..size-1.
    auto lower = static_cast<NodeId>(1 + rng.below(ch.size() - 1));
    NodeId p = parent[idx(lower)];
    auto mid = static_cast<NodeId>(ch.size());
    auto leaf = static_cast<NodeId>(ch.size() + 1);
    auto& pc = ch[idx(p)];
    (pc[0] == lower ? pc[0] : pc[1]) = mid;
    ch.push_back({lower, leaf});
    ch.push_back({kNoNode, kNoNode});
    parent.push_back(p);
    parent.push_back(mid);
    parent[idx(lower)] = mid;
  }
  return label_preorder(ch, prefix);
}

Tanglegram random_tanglegram(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("random_tanglegram: n must be positive");
  Rng rng(seed);
  auto left = random_tree(n, rng, "l");
  auto right = random_tree(n, rng, "r");
  std::vector<NodeId> targets(right.leaves().begin(), right.leaves().end());
  rng.shuffle(targets);
  std::vector<MatchingEdge> sigma;
  for (std::size_t i = 0; i < n; ++i) sigma.push_back({left.leaves()[i], targets[i]});
  return Tanglegram(std::move(left), std::move(right), std::move(sigma));
}

std::size_t shape_count(std::size_t n) { return n == 0 ? 0 : shape_skeletons(n).size(); }

TanglegramEnumeration::TanglegramEnumeration(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("enumerate: n must be positive");
  if (n > kMaxSize) throw RefusalError("enumerate: n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxSize));
  for (const auto& s : shape_skeletons(n)) {
    left_shapes_.push_back(parse_newick(fill(s, "l")));
    right_shapes_.push_back(parse_newick(fill(s, "r")));
  }
  for (std::size_t i = 2; i <= n; ++i) perms_ *= i;
  total_ = left_shapes_.size() * right_shapes_.size() * perms_;
}

Tanglegram TanglegramEnumeration::at(std::size_t index) const {
  if (index >= total_) throw DomainError("enumerate: index out of range");
  const std::size_t s = right_shapes_.size();
  const auto& left = left_shapes_[index / (s * perms_)];
  const auto& right = right_shapes_[(index / perms_) % s];
  // Lexicographic rank -> permutation (factorial number system).
  std::size_t rank = index % perms_;
  std::vector<std::size_t> pool(n_);
  std::iota(pool.begin(), pool.end(), 0);
  std::size_t f = perms_;
  std::vector<MatchingEdge> sigma;
  for (std::size_t i = 0; i < n_; ++i) {
    f /= (n_ - i);
    std::size_t k = rank / f;
    rank %= f;
    sigma.push_back({left.leaves()[i], right.leaves()[pool[k]]});
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Tanglegram(left, right, std::move(sigma));
}

std::vector<Tanglegram> enumerate_tanglegrams(std::size_t n) {
  TanglegramEnumeration e(n);
  std::vector<Tanglegram> out;
  out.reserve(e.size());
  e.for_each([&](std::size_t, Tanglegram tg) { out.push_back(std::move(tg)); });
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "K1") return Family::K1;
  if (name == "K2") return Family::K2;
  if (name == "T1") return Family::T1;
  if (name == "T2") return Family::T2;
  throw DomainError("unknown family '" + name + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::K1: return "K1";
    case Family::K2: return "K2";
    case Family::T1: return "T1";
    case Family::T2: return "T2";
  }
  return "?";
}

Tanglegram build_family(Family f, std::size_t m) {
  switch (f) {
    case Family::K1:
      return assemble("((l1,l2),(l3,l4));", "((r1,r2),(r3,r4));",
                      {{"l1", "r1"}, {"l2", "r3"}, {"l3", "r2"}, {"l4", "r4"}});
    case Family::K2:
      return assemble("(l1,(l2,(l3,l4)));", "(r1,(r2,(r3,r4)));",
                      {{"l1", "r4"}, {"l2", "r2"}, {"l3", "r3"}, {"l4", "r1"}});
    case Family::T1: {
      if (m == 0) throw DomainError("T1 needs block size m >= 1");
      // Planar block l1..lm beside a K1 on l(m+1)..l(m+4).
      std::vector<std::pair<std::string, std::string>> pairs;
      for (std::size_t i = 1; i <= m; ++i) pairs.emplace_back(L(i), R(i));
      const std::size_t k = m;
      for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {3, 2}, {4, 4}}) pairs.emplace_back(L(k + a), R(k + b));
      std::string left = "(" + caterpillar("l", 1, m) + ",((" + L(k + 1) + "," + L(k + 2) + "),(" + L(k + 3) + "," +
                         L(k + 4) + ")));";
      std::string right = "(" + caterpillar("r", 1, m) + ",((" + R(k + 1) + "," + R(k + 2) + "),(" + R(k + 3) + "," +
                          R(k + 4) + ")));";
      return assemble(left, right, pairs);
    }
    case Family::T2: {
      if (m == 0) throw DomainError("T2 needs block size m >= 1");
      // Block i on the left pairs with block target[i] on the right, leaf by leaf.
      const std::size_t target[4] = {0, 2, 1, 3};
      auto block = [&](const std::string& p, std::size_t b) { return caterpillar(p, b * m + 1, m); };
      std::string left = "((" + block("l", 0) + "," + block("l", 1) + "),(" + block("l", 2) + "," + block("l", 3) + "));";
      std::string right =
          "((" + block("r", 0) + "," + block("r", 1) + "),(" + block("r", 2) + "," + block("r", 3) + "));";
      std::vector<std::pair<std::string, std::string>> pairs;
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t j = 1; j <= m; ++j) pairs.emplace_back(L(b * m + j), R(target[b] * m + j));
      return assemble(left, right, pairs);
    }
  }
  throw DomainError("unknown family");
}

}  // namespace tangle
