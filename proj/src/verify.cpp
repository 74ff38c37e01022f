#include "tangle/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "tangle/construct.hpp"
#include "tangle/detect.hpp"
#include "tangle/error.hpp"
#include "tangle/gen.hpp"

namespace tangle {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::vector<int>> positions_per_orientation(const Tanglegram& tg, bool left) {
  const auto& t = left ? tg.left() : tg.right();
  const auto k = t.branching_nodes().size();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    auto order = t.oriented_leaf_order([&](int i) { return ((mask >> i) & 1U) != 0; });
    std::vector<int> at(tg.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
      EdgeId e = left ? tg.edge_at_left(order[p]) : tg.edge_at_right(order[p]);
      at[static_cast<std::size_t>(e)] = static_cast<int>(p);
    }
    out.push_back(std::move(at));
  }
  return out;
}

/// Runs `body`, which fills pass/detail, and stamps the elapsed time.
CriterionResult timed(int id, std::string name, double limit, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit_seconds = limit;
  auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (r.pass && r.seconds > limit) {
    r.pass = false;
    r.detail += " (over the time limit)";
  }
  return r;
}

std::vector<Tanglegram> all_up_to(std::size_t max_size) {
  std::vector<Tanglegram> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    TanglegramEnumeration e(n);
    e.for_each([&](std::size_t, Tanglegram tg) { out.push_back(std::move(tg)); });
  }
  return out;
}

bool all_proper_subsets_planar(const Tanglegram& tg) {
  const auto n = tg.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::vector<EdgeId> z;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) z.push_back(static_cast<EdgeId>(i));
    if (brute_force_crt(induce_subtanglegram(tg, z)) != 0) return false;
  }
  return true;
}

CriterionResult criterion1() {
  return timed(1, "kuratowski-fixtures", 1.0, [](CriterionResult& r) {
    std::string d;
    bool ok = true;
    for (auto f : {Family::K1, Family::K2}) {
      auto tg = build_family(f);
      auto c = exact_crt(tg);
      bool critical = all_proper_subsets_planar(tg);
      ok = ok && c.optimal && c.value == 1 && brute_force_crt(tg) == 1 && critical;
      d += (d.empty() ? "" : "; ") + to_string(f) + ": crt " + std::to_string(c.value) +
           (critical ? ", proper subsets planar" : ", NOT critical");
    }
    r.pass = ok;
    r.detail = d;
  });
}

CriterionResult criterion2() {
  return timed(2, "unsafe-pair-census", 1.0, [](CriterionResult& r) {
    auto disjoint = [](const std::vector<std::pair<EdgeId, EdgeId>>& p) {
      std::vector<EdgeId> ends;
      for (auto [a, b] : p) ends.insert(ends.end(), {a, b});
      std::sort(ends.begin(), ends.end());
      return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
    };
    auto u1 = unsafe_pairs(build_family(Family::K1));
    auto u2 = unsafe_pairs(build_family(Family::K2));
    r.pass = u1.size() == 2 && disjoint(u1) && u2.size() == 4 && !disjoint(u2);
    r.detail = "K1: " + std::to_string(u1.size()) + (disjoint(u1) ? " disjoint" : " overlapping") + "; K2: " +
               std::to_string(u2.size()) + (disjoint(u2) ? " disjoint" : " overlapping");
  });
}

CriterionResult criterion3(const VerifyOptions& o, const std::vector<Tanglegram>& small) {
  return timed(3, "oracle-equivalence", 120.0, [&](CriterionResult& r) {
    std::size_t checked = 0, nonplanar = 0, bad = 0;
    auto check = [&](const Tanglegram& tg) {
      auto c = exact_crt(tg);
      bool has = !cross_responsible_sets(tg, 1).empty();
      if (!c.optimal || (c.value >= 1) != has) ++bad;
      nonplanar += has;
      ++checked;
    };
    for (const auto& tg : small) check(tg);
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.samples; ++i) check(random_tanglegram(6 + i % 5, rng.next()));
    r.pass = bad == 0;
    r.detail = std::to_string(checked) + " instances (" + std::to_string(nonplanar) + " nonplanar), " +
               std::to_string(bad) + " disagreements";
  });
}

/// Criteria 4 and 7 from one sampling run.
std::pair<CriterionResult, CriterionResult> criteria4and7(const VerifyOptions& o) {
  std::size_t unique = 0, samples = 0, lemma_bad = 0, edges_checked = 0;
  auto r4 = timed(4, "unique-set-one-crossing", 300.0, [&](CriterionResult& r) {
    Rng rng(o.seed + 4);
    std::size_t bad = 0;
    std::map<std::string, std::size_t> cases;
    const auto& allowed = allowed_k2_scar_types();
    const std::size_t cap = 100 * std::max<std::size_t>(o.one_cross_samples, 1);
    while ((samples < o.one_cross_samples || unique < o.one_cross_unique) && samples < cap) {
      auto tg = random_tanglegram(8 + samples % 5, rng.next());
      ++samples;
      auto sets = cross_responsible_sets(tg, 2);
      if (sets.size() != 1) continue;
      ++unique;
      const auto& x = sets.front();
      if (!validate_unique_set_lemmas(tg, x).empty()) ++lemma_bad;
      for (EdgeId m : complement(tg, x.edge_list())) {
        auto st = scar_type(tg, x, m);
        ++edges_checked;
        if (x.kind == CrsKind::K1) {
          bool outside = st.left == "rL" || st.right == "rR";
          bool leaf = st.left[0] == 'f' || st.right[0] == 'f';
          if (!outside || leaf) ++lemma_bad;
        } else if (std::find(allowed.begin(), allowed.end(), st) == allowed.end()) {
          ++lemma_bad;
        }
      }
      try {
        auto cert = one_crossing_layout(tg);
        auto c = exact_crt(tg);
        bool ok = is_layout(tg, cert.layout) && crossing_count(tg, cert.layout) == 1 && c.optimal && c.value == 1;
        bad += !ok;
        ++cases[to_string(cert.kind)];
      } catch (const std::exception&) {
        ++bad;
      }
    }
    r.pass = bad == 0 && unique >= o.one_cross_unique;
    r.detail = std::to_string(samples) + " samples, " + std::to_string(unique) + " with |X|=1 (";
    bool first = true;
    for (const auto& [k, v] : cases) {
      r.detail += (first ? "" : ", ") + k + " " + std::to_string(v);
      first = false;
    }
    r.detail += "), " + std::to_string(bad) + " failures";
  });
  CriterionResult r7;
  r7.id = 7;
  r7.name = "lemma-validators";
  r7.limit_seconds = r4.limit_seconds;
  r7.seconds = 0;
  r7.pass = unique >= o.one_cross_unique && lemma_bad == 0;
  r7.detail = std::to_string(edges_checked) + " outside edges on " + std::to_string(unique) + " instances, " +
              std::to_string(lemma_bad) + " violations (timed with criterion 4)";
  return {r4, r7};
}

CriterionResult criterion5() {
  return timed(5, "block-families", 60.0, [](CriterionResult& r) {
    bool ok = true;
    std::string d;
    for (std::size_t m = 1; m <= 3; ++m) {
      auto tg = build_family(Family::T1, m);
      auto sets = cross_responsible_sets(tg).size();
      auto c = exact_crt(tg);
      ok = ok && sets == 1 && c.optimal && c.value == 1;
      d += "T1(" + std::to_string(m) + "): |X|=" + std::to_string(sets) + " crt " + std::to_string(c.value) + "; ";
    }
    for (std::size_t m = 1; m <= 2; ++m) {
      auto c = exact_crt(build_family(Family::T2, m));
      ok = ok && c.optimal && c.value == m * m;
      d += "T2(" + std::to_string(m) + "): crt " + std::to_string(c.value) + (m < 2 ? "; " : "");
    }
    r.pass = ok;
    r.detail = d;
  });
}

CriterionResult criterion6(const std::vector<Tanglegram>& small) {
  return timed(6, "associated-graph", 120.0, [&](CriterionResult& r) {
    std::size_t bad = 0;
    for (const auto& tg : small)
      bad += is_planar_graph(associated_graph(tg)) != cross_responsible_sets(tg, 1).empty();
    r.pass = bad == 0;
    r.detail = std::to_string(small.size()) + " instances, " + std::to_string(bad) + " disagreements";
  });
}

CriterionResult criterion8(const std::vector<Tanglegram>& small) {
  return timed(8, "solver-self-consistency", 180.0, [&](CriterionResult& r) {
    std::size_t bad = 0, safe_cross = 0;
    for (const auto& tg : small) {
      auto c = exact_crt(tg);
      if (!c.optimal || c.value != brute_force_crt(tg) || crossing_count(tg, c.witness) != c.value) ++bad;
      for (auto [a, b] : crossing_pairs(tg, c.witness)) safe_cross += is_safe_pair(tg, a, b);
    }
    r.pass = bad == 0 && safe_cross == 0;
    r.detail = std::to_string(small.size()) + " instances, " + std::to_string(bad) + " value mismatches, " +
               std::to_string(safe_cross) + " crossing safe pairs";
  });
}

}  // namespace

std::uint64_t brute_force_crt(const Tanglegram& tg) {
  auto lp = positions_per_orientation(tg, true);
  auto rp = positions_per_orientation(tg, false);
  const auto n = tg.size();
  std::uint64_t best = UINT64_MAX;
  for (const auto& l : lp)
    for (const auto& r : rp) {
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c += (l[i] < l[j]) != (r[i] < r[j]);
      best = std::min(best, c);
    }
  return best;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options,
                                            const std::function<void(const CriterionResult&)>& report) {
  if (options.max_size < 1 || options.max_size > TanglegramEnumeration::kMaxSize)
    throw DomainError("verify: max size must be between 1 and " + std::to_string(TanglegramEnumeration::kMaxSize));
  std::vector<CriterionResult> out;
  auto add = [&](CriterionResult r) {
    if (report) report(r);
    out.push_back(std::move(r));
  };
  const auto small = all_up_to(options.max_size);
  add(criterion1());
  add(criterion2());
  add(criterion3(options, small));
  auto [r4, r7] = criteria4and7(options);
  add(r4);
  add(criterion5());
  add(criterion6(small));
  add(r7);
  add(criterion8(small));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %d %-24s %8.2fs / %gs  ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.limit_seconds);
  return buf + r.detail;
}

std::map<std::size_t, SurveyBin> survey(std::size_t size, std::size_t samples, std::uint64_t seed,
                                        const CrtOptions& options) {
  std::map<std::size_t, SurveyBin> bins;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    auto tg = random_tanglegram(size, rng.next());
    auto& bin = bins[cross_responsible_sets(tg).size()];
    auto c = exact_crt(tg, options);
    ++bin.count;
    bin.unresolved += !c.optimal;
    bin.max_crt = std::max(bin.max_crt, c.value);
  }
  return bins;
}

}  // namespace tangle
