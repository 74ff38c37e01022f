#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "tangle/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI through the shell; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + TANGLE_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / "tangle_cli_test";
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

}  // namespace

TEST_CASE("gen, crt, detect") {
  TempDir d;
  CHECK(run("gen --family K1 -o " + (d / "k1.tgl")).code == 0);
  auto crt = run("crt " + (d / "k1.tgl"));
  CHECK(crt.code == 0);
  CHECK(crt.out.rfind("1 (optimal)\n", 0) == 0);

  auto det = run("detect " + (d / "k1.tgl"));
  CHECK(det.code == 0);
  CHECK(det.out.find("|X|=1") == 0);

  auto a = run("gen -n 9 --seed 17");
  auto b = run("gen -n 9 --seed 17");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(tangle::parse_tanglegram(a.out).size() == 9);
}

TEST_CASE("planar and onecross") {
  TempDir d;
  tangle::write_text_file(d / "flat.tgl", "((a,b),c);\n(x,(y,z));\na-x,b-y,c-z\n");
  auto on = run("onecross " + (d / "flat.tgl"));
  CHECK(on.code == 2);
  auto err = run("--json onecross " + (d / "flat.tgl"));
  CHECK(err.code == 2);
  auto j = nlohmann::json::parse(err.out);
  CHECK(j["error"]["count"] == 0);
  CHECK(j["error"]["message"].get<std::string>().find("|X|=0") == 0);

  auto pl = run("planar " + (d / "flat.tgl") + " -o " + (d / "flat.lay"));
  CHECK(pl.code == 0);
  auto rep = tangle::read_layout_file(d / "flat.lay");
  CHECK(rep.left.size() == 3);

  run("gen --family K2 -o " + (d / "k2.tgl"));
  auto np = run("planar " + (d / "k2.tgl"));
  CHECK(np.code == 1);
  CHECK(np.out.rfind("NONPLANAR\nK2 ", 0) == 0);

  auto oc = run("onecross " + (d / "k2.tgl") + " -o " + (d / "k2.lay"));
  CHECK(oc.code == 0);
  CHECK(oc.out.find("case K2-M-empty") == 0);
  auto svg = run("render " + (d / "k2.tgl") + " --layout " + (d / "k2.lay") + " -o " + (d / "k2.svg"));
  CHECK(svg.code == 0);
  CHECK(tangle::read_text_file(d / "k2.svg").find("crossings: 1</text>") != std::string::npos);
}

TEST_CASE("error classes map to exit codes") {
  TempDir d;
  tangle::write_text_file(d / "bad.tgl", "(a,b);\n(c,d);\na-c\n");
  CHECK(run("crt " + (d / "bad.tgl")).code == 4);
  CHECK(run("crt " + (d / "missing.tgl")).code == 4);
  CHECK(run("gen -n 0").code == 2);
  CHECK(run("frobnicate").code == 2);
  run("gen -n 14 --seed 3 -o " + (d / "big.tgl"));
  CHECK(run("crt " + (d / "big.tgl") + " --budget 5").code == 3);
  CHECK(run("crt " + (d / "big.tgl"), "TGL_BUDGET=5").code == 3);
  run("gen -n 20 --seed 3 -o " + (d / "huge.tgl"));
  CHECK(run("crt " + (d / "huge.tgl")).code == 2);
  tangle::write_text_file(d / "k1.tgl", "((l1,l2),(l3,l4));\n((r1,r2),(r3,r4));\nl1-r1,l2-r3,l3-r2,l4-r4\n");
  tangle::write_text_file(d / "bad.lay", "l1,l3,l2,l4\nr1,r2,r3,r4\n");
  CHECK(run("render " + (d / "k1.tgl") + " --layout " + (d / "bad.lay") + " -o " + (d / "x.svg")).code == 2);
}

TEST_CASE("verify and survey") {
  auto v = run("verify --max-size 5 --seed 3");
  CHECK(v.code == 0);
  int lines = 0;
  for (auto p = v.out.find("PASS "); p != std::string::npos; p = v.out.find("PASS ", p + 1)) ++lines;
  CHECK(lines == 8);
  CHECK(v.out.find("FAIL") == std::string::npos);

  auto j1 = run("--json survey --size 7 --samples 30 --seed 5");
  auto j2 = run("--json survey --size 7 --samples 30 --seed 5");
  CHECK(j1.code == 0);
  CHECK(j1.out == j2.out);
  auto doc = nlohmann::json::parse(j1.out);
  std::size_t total = 0;
  for (const auto& b : doc["bins"]) total += b["count"].get<std::size_t>();
  CHECK(total == 30);
}
