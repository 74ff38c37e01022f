#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/gen.hpp"
#include "tangle/io.hpp"

using namespace tangle;

namespace {

const char* kK1Text = "((l1,l2),(l3,l4));\n((r1,r2),(r3,r4));\nl1-r1,l2-r3,l3-r2,l4-r4\n";

ParseError::Code code_of(std::string_view text) {
  try {
    parse_tanglegram(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  FAIL("no ParseError for: " << text);
  return ParseError::Code::Syntax;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

/// Integer inside <text id="caption">crossings: N</text>.
long caption_count(const std::string& svg) {
  auto p = svg.find("id=\"caption\"");
  REQUIRE(p != std::string::npos);
  p = svg.find("crossings: ", p);
  REQUIRE(p != std::string::npos);
  return std::stol(svg.substr(p + 11));
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

TEST_CASE("newick") {
  auto t = parse_newick("((a:1.5,b)x:2,c);");
  CHECK(t.leaf_count() == 3);
  CHECK(t.is_cherry(t.leaf("a"), t.leaf("b")));
  CHECK(to_newick(t) == "((a,b),c);");
  auto single = parse_newick("a;");
  CHECK(single.leaf_count() == 1);
  CHECK(to_newick(single) == "a;");
  CHECK_THROWS_AS(parse_newick("(a);"), ParseError);
  CHECK_THROWS_AS(parse_newick("(a,b,c);"), ParseError);
  CHECK_THROWS_AS(parse_newick("(a,b)"), ParseError);
  CHECK_THROWS_AS(parse_newick("(a,(b,c);"), ParseError);
  try {
    parse_newick("((a,b),(c,a));", 2);
    FAIL("expected duplicate label");
  } catch (const ParseError& e) {
    CHECK(e.code() == ParseError::Code::DuplicateLabel);
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);
  }
}

TEST_CASE("parse_tanglegram examples") {
  auto tg = parse_tanglegram(kK1Text);
  CHECK(tg == build_family(Family::K1));
  CHECK(oracle::isomorphic_brute(tg, build_family(Family::K1)));

  auto one = parse_tanglegram("a;\nb;\na-b");
  CHECK(one.size() == 1);
  CHECK(one.edge_name(0) == "a-b");

  CHECK(code_of("(a);\nb;\na-b\n") == ParseError::Code::NonBinary);
  CHECK(code_of("((a,b);\n(c,d);\na-c,b-d\n") == ParseError::Code::Syntax);
  CHECK(code_of("(a,b);\n(c,d);\na-c\n") == ParseError::Code::MatchingNotPerfect);
  CHECK(code_of("(a,b);\n(c,d);\na-c,a-d\n") == ParseError::Code::MatchingNotPerfect);
  CHECK(code_of("(a,b);\n(c,d);\na-c,b-z\n") == ParseError::Code::MatchingNotPerfect);
  CHECK(code_of("(a,b);\n(c,(d,e));\na-c,b-d\n") == ParseError::Code::MatchingNotPerfect);
  CHECK(code_of("(a,a);\n(c,d);\na-c,a-d\n") == ParseError::Code::DuplicateLabel);
  CHECK(code_of("(a,b);\n(c,d);\n") == ParseError::Code::Syntax);
  CHECK(code_of("(a,b);\n(c,d);\na-c,b-d\nextra\n") == ParseError::Code::Syntax);
  CHECK(code_of("(a,b);\n(c,d);\nac,b-d\n") == ParseError::Code::Syntax);
}

TEST_CASE("error positions count from the original text") {
  try {
    parse_tanglegram("# header\n\n(a,b);\n(c,(d,e,f));\na-c,b-d\n");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ParseError::Code::NonBinary);
    CHECK(e.line() == 4);
  }
}

TEST_CASE("comments, blank lines and CRLF") {
  auto a = parse_tanglegram("# K1\r\n((l1,l2),(l3,l4)); # left\r\n\r\n((r1,r2),(r3,r4));\r\nl1-r1, l2-r3, l3-r2, l4-r4\r\n");
  CHECK(a == parse_tanglegram(kK1Text));
}

TEST_CASE("round trip") {
  for (auto f : {Family::K1, Family::K2, Family::T1, Family::T2}) {
    auto tg = build_family(f, 2);
    auto text = serialize_tanglegram(tg);
    CHECK(parse_tanglegram(text) == tg);
    CHECK(serialize_tanglegram(parse_tanglegram(text)) == text);
  }
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    auto tg = random_tanglegram(1 + seed % 25, seed);
    auto back = parse_tanglegram(serialize_tanglegram(tg));
    REQUIRE(back == tg);
    if (tg.size() <= 6) REQUIRE(oracle::isomorphic_brute(back, tg));
  }
}

TEST_CASE("layout files") {
  LayoutRep r{{"l1", "l2", "l3", "l4"}, {"r4", "r3", "r2", "r1"}};
  auto text = serialize_layout(r);
  CHECK(text == "l1,l2,l3,l4\nr4,r3,r2,r1\n");
  CHECK(parse_layout(text) == r);
  CHECK(parse_layout("# c\r\nl1, l2\r\nr1,r2\r\n") == LayoutRep{{"l1", "l2"}, {"r1", "r2"}});
  CHECK_THROWS_AS(parse_layout("a,b\n"), ParseError);
  CHECK_THROWS_AS(parse_layout("a,,b\nc,d\n"), ParseError);

  auto dir = std::filesystem::temp_directory_path() / "tangle_io_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "k1.tgl").string();
  write_text_file(path, kK1Text);
  CHECK(read_tanglegram_file(path) == build_family(Family::K1));
  write_text_file((dir / "k1.layout").string(), text);
  CHECK(read_layout_file((dir / "k1.layout").string()) == r);
  CHECK_THROWS_AS(read_text_file((dir / "missing.tgl").string()), IoError);
  CHECK_THROWS_AS(write_text_file((dir / "no" / "such" / "dir.txt").string(), "x"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg rendering") {
  auto k1 = build_family(Family::K1);
  LayoutRep std_layout{default_order(k1.left()), default_order(k1.right())};
  REQUIRE(crossing_count(k1, std_layout) == 1);
  auto svg = render_svg(k1, std_layout);
  CHECK(svg == render_svg(k1, std_layout));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(caption_count(svg) == 1);
  CHECK(count_of(svg, "class=\"match crossing\"") == 2);
  CHECK(count_of(svg, "class=\"crossing-point\"") == 1);

  auto lad = ladder(6);
  auto flat = render_svg(lad, {default_order(lad.left()), default_order(lad.right())});
  CHECK(caption_count(flat) == 0);
  CHECK(count_of(flat, "match crossing") == 0);
  CHECK(count_of(flat, "class=\"match\"") == 6);

  CHECK_THROWS_AS(render_svg(k1, {{"l1", "l3", "l2", "l4"}, std_layout.right}), DomainError);
}

TEST_CASE("drawn crossings agree with the crossing count") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto tg = random_tanglegram(2 + seed % 20, seed);
    Rng rng(seed);
    LayoutRep rep{default_order(tg.left()), default_order(tg.right())};
    if (tg.size() <= 8) {
      auto lo = oracle::all_orders(tg.left());
      rep.left = lo[rng.below(lo.size())];
    }
    auto drawn = drawn_crossings(tg, rep);
    REQUIRE(drawn.size() == crossing_count(tg, rep));
    auto pairs = crossing_pairs(tg, rep);
    for (std::size_t i = 0; i < drawn.size(); ++i) {
      auto p = drawn[i].a < drawn[i].b ? std::pair{drawn[i].a, drawn[i].b} : std::pair{drawn[i].b, drawn[i].a};
      REQUIRE(std::find(pairs.begin(), pairs.end(), p) != pairs.end());
    }
    REQUIRE(caption_count(render_svg(tg, rep)) == long(drawn.size()));
  }
}
