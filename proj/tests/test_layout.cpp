#include <doctest.h>

#include "oracles.hpp"
#include "tangle/detect.hpp"
#include "tangle/error.hpp"
#include "tangle/gen.hpp"
#include "tangle/io.hpp"
#include "tangle/layout.hpp"

using namespace tangle;

namespace {

/// Random (not necessarily consistent) permutations of both leaf sets.
LayoutRep random_rep(const Tanglegram& tg, Rng& rng) {
  LayoutRep r{default_order(tg.left()), default_order(tg.right())};
  rng.shuffle(r.left);
  rng.shuffle(r.right);
  return r;
}

Tanglegram ladder(std::size_t n) {
  std::string l, r, m, close;
  for (std::size_t i = 1; i < n; ++i) {
    l += "(a" + std::to_string(i) + ",";
    r += "(b" + std::to_string(i) + ",";
    close += ")";
  }
  l += "a" + std::to_string(n) + close + ";";
  r += "b" + std::to_string(n) + close + ";";
  for (std::size_t i = 1; i <= n; ++i) m += (i > 1 ? "," : "") + ("a" + std::to_string(i)) + "-b" + std::to_string(i);
  return parse_tanglegram(l + "\n" + r + "\n" + m + "\n");
}

}  // namespace

TEST_CASE("is_consistent examples") {
  auto k1 = build_family(Family::K1);
  const auto& l = k1.left();
  std::vector<std::string> a{"l1", "l2"};
  auto two = parse_newick("(l1,l2);");
  CHECK(is_consistent(two, std::vector<std::string>{"l1", "l2"}));
  CHECK(is_consistent(two, std::vector<std::string>{"l2", "l1"}));
  CHECK_FALSE(is_consistent(l, std::vector<std::string>{"l1", "l3", "l2", "l4"}));
  CHECK(is_consistent(l, std::vector<std::string>{"l2", "l1", "l4", "l3"}));
  CHECK_THROWS_AS(is_consistent(l, std::vector<std::string>{"l1", "l2", "l3"}), DomainError);
  CHECK_THROWS_AS(is_consistent(l, std::vector<std::string>{"l1", "l1", "l3", "l4"}), DomainError);
}

TEST_CASE("is_consistent matches the contiguity oracle") {
  Rng rng(5);
  for (int it = 0; it < 500; ++it) {
    auto tg = random_tanglegram(3 + std::size_t(it % 7), std::uint64_t(it) + 1);
    auto r = random_rep(tg, rng);
    REQUIRE(is_consistent(tg.left(), r.left) == oracle::consistent(tg.left(), r.left));
    for (const auto& o : oracle::all_orders(tg.right())) REQUIRE(is_consistent(tg.right(), o));
  }
}

TEST_CASE("crossing_count examples") {
  auto lad = ladder(5);
  LayoutRep aligned{default_order(lad.left()), default_order(lad.right())};
  CHECK(crossing_count(lad, aligned) == 0);
  auto rev = aligned;
  std::reverse(rev.right.begin(), rev.right.end());
  CHECK(crossing_count(lad, rev) == 10);

  // K2 as drawn with its standardized labels: left l1..l4 top to bottom,
  // right r4, r2, r3, r1 (u2, x, y, u1 on both sides but x, y swapped).
  auto k2 = build_family(Family::K2);
  LayoutRep fig{{"l1", "l2", "l3", "l4"}, {"r4", "r3", "r2", "r1"}};
  REQUIRE(is_layout(k2, fig));
  CHECK(crossing_count(k2, fig) == 1);
  auto pairs = crossing_pairs(k2, fig);
  REQUIRE(pairs.size() == 1);
  CHECK(k2.edge_name(pairs[0].first) + " " + k2.edge_name(pairs[0].second) == "l2-r2 l3-r3");

  LayoutRep bad{{"l1", "l2", "l3", "zz"}, fig.right};
  CHECK_THROWS_AS(crossing_count(k2, bad), DomainError);
}

TEST_CASE("crossing counters agree with the all-pairs definition") {
  Rng rng(99);
  for (int it = 0; it < 1000; ++it) {
    auto tg = random_tanglegram(1 + rng.below(30), rng.next());
    auto r = random_rep(tg, rng);
    auto expect = oracle::crossings(tg, r);
    REQUIRE(crossing_count(tg, r) == expect);
    REQUIRE(crossing_count_pairwise(tg, r) == expect);
    REQUIRE(crossing_pairs(tg, r).size() == expect);
  }
}

TEST_CASE("optimize_one_side examples") {
  auto lad = ladder(6);
  auto res = optimize_one_side(lad, default_order(lad.left()));
  CHECK(res.crossings == 0);

  auto k1 = build_family(Family::K1);
  auto r = optimize_one_side(k1, {"l1", "l2", "l3", "l4"});
  std::uint64_t brute = UINT64_MAX;
  for (const auto& o : oracle::all_orders(k1.right())) brute = std::min(brute, oracle::crossings(k1, {{"l1", "l2", "l3", "l4"}, o}));
  CHECK(brute == 1);
  CHECK(r.crossings == 1);
  CHECK(oracle::crossings(k1, {{"l1", "l2", "l3", "l4"}, r.right}) == 1);

  // Tie: both child orders of the right root cost the same; natural order kept.
  auto tie = parse_tanglegram("(a,b);\n(x,y);\na-x,b-y\n");
  auto t = optimize_one_side(tie, {"a", "b"});
  CHECK(t.crossings == 0);
  CHECK(t.right == std::vector<std::string>{"x", "y"});
  auto tie2 = parse_tanglegram("((a,b),c);\n(x,(y,z));\na-x,b-z,c-y\n");
  // Right root: {x} vs {y,z}; x's partner a is above both, so natural order wins strictly.
  CHECK(optimize_one_side(tie2, {"a", "b", "c"}).right.front() == "x");

  CHECK_THROWS_AS(optimize_one_side(k1, {"l1", "l3", "l2", "l4"}), DomainError);
}

TEST_CASE("optimize_one_side equals brute force over right orders") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto tg = random_tanglegram(2 + seed % 7, seed);
    auto lo = oracle::all_orders(tg.left());
    const auto& left = lo[seed % lo.size()];
    std::uint64_t brute = UINT64_MAX;
    for (const auto& o : oracle::all_orders(tg.right())) brute = std::min(brute, oracle::crossings(tg, {left, o}));
    auto r = optimize_one_side(tg, left);
    REQUIRE(r.crossings == brute);
    REQUIRE(oracle::crossings(tg, {left, r.right}) == brute);
    REQUIRE(is_consistent(tg.right(), r.right));
  }
}

TEST_CASE("exact_crt examples") {
  auto k1 = exact_crt(build_family(Family::K1));
  auto k2 = exact_crt(build_family(Family::K2));
  CHECK(k1.value == 1);
  CHECK(k2.value == 1);
  CHECK(k1.optimal);
  CHECK(exact_crt(build_family(Family::T2, 2)).value == 4);
  for (const auto& tg : enumerate_tanglegrams(3)) CHECK(exact_crt(tg).value == 0);
  CHECK_THROWS_AS(exact_crt(random_tanglegram(19, 1)), RefusalError);
  CrtOptions big;
  big.override_cap = true;
  auto r = exact_crt(random_tanglegram(19, 1), big);
  CHECK(crossing_count(random_tanglegram(19, 1), r.witness) == r.value);
}

TEST_CASE("exact_crt matches the double enumeration on random sizes 6 to 8") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto tg = random_tanglegram(6 + seed % 3, seed);
    auto r = exact_crt(tg);
    REQUIRE(r.optimal);
    REQUIRE(r.value == oracle::brute_crt(tg));
    REQUIRE(is_layout(tg, r.witness));
    REQUIRE(crossing_count(tg, r.witness) == r.value);
  }
}

TEST_CASE("budget exhaustion is reported, not raised") {
  CrtOptions tiny;
  tiny.budget = 3;
  auto tg = random_tanglegram(14, 77);
  auto r = exact_crt(tg, tiny);
  CHECK_FALSE(r.optimal);
  CHECK(r.explored <= 3);
  CHECK(is_layout(tg, r.witness));
  CHECK(crossing_count(tg, r.witness) == r.value);
  CHECK(r.value >= exact_crt(tg).value);
}

TEST_CASE("planar_layout") {
  CHECK_FALSE(planar_layout(build_family(Family::K1)).has_value());
  auto one = Tanglegram::from_labels(RootedBinaryTree::single_leaf("a"), RootedBinaryTree::single_leaf("b"), {{"a", "b"}});
  auto p = planar_layout(one);
  REQUIRE(p.has_value());
  CHECK(crossing_count(one, *p) == 0);

  auto t1 = build_family(Family::T1, 2);
  auto x = cross_responsible_sets(t1);
  REQUIRE(x.size() == 1);
  for (EdgeId e : x[0].edges) {
    auto sub = induce_subtanglegram(t1, complement(t1, {e}));
    auto lay = planar_layout(sub);
    REQUIRE(lay.has_value());
    CHECK(crossing_count(sub, *lay) == 0);
    CHECK(is_layout(sub, *lay));
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto tg = random_tanglegram(4 + seed % 4, seed);
    auto lay = planar_layout(tg);
    REQUIRE(lay.has_value() == (oracle::brute_crt(tg) == 0));
    if (lay) REQUIRE(oracle::crossings(tg, *lay) == 0);
  }
}

TEST_CASE("restrict_layout") {
  auto tg = random_tanglegram(8, 3);
  auto r = exact_crt(tg);
  CHECK(restrict_layout(tg, r.witness, complement(tg, {})) == r.witness);
  auto lad = ladder(7);
  LayoutRep aligned{default_order(lad.left()), default_order(lad.right())};
  Rng rng(1);
  for (int it = 0; it < 50; ++it) {
    std::vector<EdgeId> z;
    for (EdgeId e = 0; e < 7; ++e)
      if (rng.below(2)) z.push_back(e);
    if (z.empty()) continue;
    auto sub = induce_subtanglegram(lad, z);
    auto rr = restrict_layout(lad, aligned, z);
    CHECK(is_layout(sub, rr));
    CHECK(crossing_count(sub, rr) == 0);
  }
  CHECK_THROWS_AS(restrict_layout(tg, r.witness, {99}), DomainError);
}

TEST_CASE("crt is monotone under induced subtanglegrams") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto tg = random_tanglegram(8, seed);
    auto full = exact_crt(tg).value;
    Rng rng(seed);
    for (int k = 0; k < 5; ++k) {
      std::vector<EdgeId> z;
      for (EdgeId e = 0; e < 8; ++e)
        if (rng.below(3) != 0) z.push_back(e);
      if (z.empty()) continue;
      REQUIRE(exact_crt(induce_subtanglegram(tg, z)).value <= full);
    }
  }
}
