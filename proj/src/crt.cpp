// Exact tangle crossing number.
//
// The enumerated tree E fixes its branching-node orientations one at a time
// in preorder; the other tree D is never enumerated. For every pair of
// matching edges the crossing status is decided by the orientation of the
// E-meet and the D-meet of the pair, so for each D branching node w we keep
// two counters: crossings already forced among decided pairs if w keeps its
// natural child order (ab[w]) or swaps it (ba[w]). Pairs whose E-meet is not
// yet oriented contribute nothing, hence sum_w min(ab[w], ba[w]) is a lower
// bound, and it is the exact one-sided optimum once E is fully oriented.

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "tangle/error.hpp"
#include "tangle/kernels.hpp"
#include "tangle/layout.hpp"

namespace tangle {

namespace {

std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }

long leaf_depth_sum(const RootedBinaryTree& t) {
  long s = 0;
  for (NodeId v : t.leaves()) s += t.depth(v);
  return s;
}

class Search {
 public:
  Search(const Tanglegram& tg, std::uint64_t budget) : tg_(tg), budget_(budget) {
    const auto& e = tg.left();
    const auto& d = tg.right();
    ke_ = e.branching_nodes().size();
    kd_ = d.branching_nodes().size();
    // Row r = 2*v + f holds, for E node v oriented f, the per-D-node
    // increments of ab (first kd_ entries) and ba (next kd_ entries).
    same_.assign(ke_ * kd_, 0);
    diff_.assign(ke_ * kd_, 0);
    const auto n = tg.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& mi = tg.sigma()[i];
        const auto& mj = tg.sigma()[j];
        NodeId v = e.meet(mi.left, mj.left);
        NodeId w = d.meet(mi.right, mj.right);
        bool side_e = e.is_ancestor(e.child(v, 0), mi.left);
        bool side_d = d.is_ancestor(d.child(w, 0), mi.right);
        auto cell = idx(e.branching_index(v)) * kd_ + idx(d.branching_index(w));
        (side_e == side_d ? same_ : diff_)[cell] += 1;
      }
    }
    ab_.assign(kd_, 0);
    ba_.assign(kd_, 0);
    flips_.assign(ke_, false);
  }

  /// Searches for an orientation strictly better than `incumbent`; stops as
  /// soon as the incumbent is <= stop_at.
  void run(std::uint64_t incumbent, std::uint64_t stop_at) {
    best_ = incumbent;
    stop_at_ = stop_at;
    if (ke_ == 0) {
      ++explored_;
      consider_leaf();
      return;
    }
    dfs(0);
  }

  std::uint64_t best() const { return best_; }
  bool found() const { return found_; }
  bool truncated() const { return truncated_; }
  std::uint64_t explored() const { return explored_; }

  LayoutRep witness() const {
    const auto& e = tg_.left();
    const auto& d = tg_.right();
    LayoutRep rep;
    for (NodeId v : e.oriented_leaf_order([&](int i) { return static_cast<bool>(best_e_[idx(i)]); }))
      rep.left.push_back(e.label(v));
    for (NodeId v : d.oriented_leaf_order([&](int i) { return static_cast<bool>(best_d_[idx(i)]); }))
      rep.right.push_back(d.label(v));
    return rep;
  }

 private:
  std::span<const std::int32_t> row(const std::vector<std::int32_t>& m, std::size_t v) const {
    return {m.data() + v * kd_, kd_};
  }

  // Orientation f of E node v: unflipped keeps child 0 above child 1, so a
  // "same" pair crosses iff w is flipped and a "diff" pair iff w is not.
  void apply(std::size_t v, bool f, int sign) {
    kernels::add_rows(ab_, row(f ? same_ : diff_, v), sign);
    kernels::add_rows(ba_, row(f ? diff_ : same_, v), sign);
  }

  std::uint64_t bound() const { return static_cast<std::uint64_t>(kernels::sum_min(ab_, ba_)); }

  void consider_leaf() {
    std::uint64_t value = bound();
    if (value < best_) {
      best_ = value;
      found_ = true;
      best_e_ = flips_;
      best_d_.assign(kd_, false);
      for (std::size_t w = 0; w < kd_; ++w) best_d_[w] = ba_[w] < ab_[w];
      if (best_ <= stop_at_) done_ = true;
    }
  }

  void dfs(std::size_t depth) {
    if (depth == ke_) {
      consider_leaf();
      return;
    }
    // The mirror image of a layout has the same crossings; fix the topmost
    // branching node of E.
    const int choices = depth == 0 ? 1 : 2;
    std::uint64_t lb[2] = {0, 0};
    for (int f = 0; f < choices; ++f) {
      apply(depth, f != 0, +1);
      lb[f] = bound();
      apply(depth, f != 0, -1);
    }
    int order[2] = {0, 1};
    if (choices == 2 && lb[1] < lb[0]) std::swap(order[0], order[1]);
    for (int k = 0; k < choices; ++k) {
      if (done_ || truncated_) return;
      int f = order[k];
      if (lb[f] >= best_) continue;
      if (explored_ >= budget_) {
        truncated_ = true;
        return;
      }
      ++explored_;
      flips_[depth] = f != 0;
      apply(depth, f != 0, +1);
      dfs(depth + 1);
      apply(depth, f != 0, -1);
    }
    flips_[depth] = false;
  }

  const Tanglegram& tg_;
  std::uint64_t budget_;
  std::size_t ke_ = 0, kd_ = 0;
  std::vector<std::int32_t> same_, diff_, ab_, ba_;
  std::vector<bool> flips_, best_e_, best_d_;
  std::uint64_t best_ = 0, stop_at_ = 0, explored_ = 0;
  bool found_ = false, truncated_ = false, done_ = false;
};

void check_cap(const Tanglegram& tg, const CrtOptions& opt) {
  if (tg.size() > opt.max_size && !opt.override_cap)
    throw RefusalError("exact crt: size " + std::to_string(tg.size()) + " exceeds cap " +
                       std::to_string(opt.max_size) + " (override required)");
}

/// Enumerate the side whose leaves sit shallower in total on the other side.
bool enumerate_right(const Tanglegram& tg) { return leaf_depth_sum(tg.right()) < leaf_depth_sum(tg.left()); }

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("TGL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

CrtResult exact_crt(const Tanglegram& tg, const CrtOptions& options) {
  check_cap(tg, options);
  const bool swap = enumerate_right(tg);
  const Tanglegram oriented = swap ? tg.mirrored() : tg;
  const auto budget = options.budget.value_or(default_budget());

  Search search(oriented, budget);
  search.run(std::numeric_limits<std::uint64_t>::max(), 0);
  CrtResult out;
  out.explored = search.explored();
  out.optimal = !search.truncated();
  if (!search.found()) {
    // Budget too small to reach a single complete orientation.
    auto fallback = optimize_one_side(tg, default_order(tg.left()));
    out.value = fallback.crossings;
    out.witness = {default_order(tg.left()), std::move(fallback.right)};
    out.optimal = false;
    return out;
  }
  out.value = search.best();
  out.witness = swap ? search.witness().swapped() : search.witness();
  return out;
}

std::optional<LayoutRep> planar_layout(const Tanglegram& tg, const CrtOptions& options) {
  check_cap(tg, options);
  const bool swap = enumerate_right(tg);
  const Tanglegram oriented = swap ? tg.mirrored() : tg;
  Search search(oriented, options.budget.value_or(default_budget()));
  search.run(1, 0);
  if (search.found()) return swap ? search.witness().swapped() : search.witness();
  if (search.truncated()) throw BudgetExhausted("planar_layout: search budget exhausted");
  return std::nullopt;
}

}  // namespace tangle
