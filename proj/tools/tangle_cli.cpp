// tangle: command-line front end.
//
// Exit codes: 0 ok, 1 negative answer (nonplanar, failed verification),
// 2 precondition or usage error, 3 search budget exhausted, 4 I/O or parse
// error, 5 internal consistency failure.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "tangle/construct.hpp"
#include "tangle/detect.hpp"
#include "tangle/error.hpp"
#include "tangle/gen.hpp"
#include "tangle/io.hpp"
#include "tangle/layout.hpp"
#include "tangle/verify.hpp"

using json = nlohmann::ordered_json;
using namespace tangle;

namespace {

enum Exit { kOk = 0, kNegative = 1, kPrecondition = 2, kBudget = 3, kIo = 4, kInternal = 5 };

bool g_json = false;

void emit(const json& doc, const std::string& text) {
  if (g_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

json layout_json(const LayoutRep& rep) { return {{"left", rep.left}, {"right", rep.right}}; }

json set_json(const Tanglegram& tg, const CrossResponsibleSet& s) {
  json edges = json::array();
  for (EdgeId e : s.edges) edges.push_back(tg.edge_name(e));
  json labels = json::object();
  for (const auto& [name, e] : s.matching) labels[name] = tg.edge_name(e);
  return {{"kind", to_string(s.kind)}, {"edges", edges}, {"labels", labels}};
}

std::string set_text(const Tanglegram& tg, const CrossResponsibleSet& s) {
  std::string t = to_string(s.kind) + " {";
  for (std::size_t i = 0; i < s.edges.size(); ++i) t += (i ? ", " : "") + tg.edge_name(s.edges[i]);
  t += "}";
  for (const auto& [name, e] : s.matching) t += " " + name + "=" + tg.edge_name(e);
  return t;
}

CrtOptions crt_options(std::optional<std::uint64_t> budget, bool force) {
  CrtOptions o;
  o.budget = budget;
  o.override_cap = force;
  return o;
}

std::string pair_name(const Tanglegram& tg, std::pair<EdgeId, EdgeId> p) {
  return tg.edge_name(p.first) + " x " + tg.edge_name(p.second);
}

int cmd_detect(const std::string& file) {
  auto tg = read_tanglegram_file(file);
  auto sets = cross_responsible_sets(tg);
  json doc{{"command", "detect"}, {"size", tg.size()}, {"count", sets.size()}, {"sets", json::array()}};
  std::string text = "|X|=" + std::to_string(sets.size()) + "\n";
  for (const auto& s : sets) {
    doc["sets"].push_back(set_json(tg, s));
    text += set_text(tg, s) + "\n";
  }
  emit(doc, text);
  return kOk;
}

int cmd_crt(const std::string& file, std::optional<std::uint64_t> budget, bool force, const std::string& out) {
  auto tg = read_tanglegram_file(file);
  auto r = exact_crt(tg, crt_options(budget, force));
  if (!out.empty()) write_text_file(out, serialize_layout(r.witness));
  json doc{{"command", "crt"},   {"value", r.value},      {"optimal", r.optimal},
           {"explored", r.explored}, {"witness", layout_json(r.witness)}};
  std::string text = std::to_string(r.value) + (r.optimal ? " (optimal)\n" : " (budget exhausted; upper bound)\n");
  if (out.empty()) text += serialize_layout(r.witness);
  emit(doc, text);
  return r.optimal ? kOk : kBudget;
}

int cmd_planar(const std::string& file, std::optional<std::uint64_t> budget, bool force, const std::string& out) {
  auto tg = read_tanglegram_file(file);
  auto sets = cross_responsible_sets(tg, 1);
  if (!sets.empty()) {
    emit({{"command", "planar"}, {"planar", false}, {"obstruction", set_json(tg, sets.front())}},
         "NONPLANAR\n" + set_text(tg, sets.front()) + "\n");
    return kNegative;
  }
  auto rep = planar_layout(tg, crt_options(budget, force));
  if (!rep) throw ConsistencyError("planar", "no cross-responsible set but no planar layout");
  if (!out.empty()) write_text_file(out, serialize_layout(*rep));
  emit({{"command", "planar"}, {"planar", true}, {"layout", layout_json(*rep)}}, serialize_layout(*rep));
  return kOk;
}

int cmd_onecross(const std::string& file, const std::string& out) {
  auto tg = read_tanglegram_file(file);
  auto c = one_crossing_layout(tg);
  if (!out.empty()) write_text_file(out, serialize_layout(c.layout));
  json doc{{"command", "onecross"},
           {"case", to_string(c.kind)},
           {"crossing_pair", {tg.edge_name(c.crossing_pair.first), tg.edge_name(c.crossing_pair.second)}},
           {"set", set_json(tg, c.set)},
           {"layout", layout_json(c.layout)},
           {"trace", c.trace}};
  std::string text = "case " + to_string(c.kind) + "\ncrossing " + pair_name(tg, c.crossing_pair) + "\n";
  if (out.empty()) text += serialize_layout(c.layout);
  emit(doc, text);
  return kOk;
}

int cmd_render(const std::string& file, const std::string& layout, const std::string& out) {
  auto tg = read_tanglegram_file(file);
  auto rep = read_layout_file(layout);
  check_permutations(tg, rep);
  auto svg = render_svg(tg, rep);
  write_text_file(out, svg);
  auto n = crossing_count(tg, rep);
  emit({{"command", "render"}, {"output", out}, {"crossings", n}}, "wrote " + out + " (crossings: " + std::to_string(n) + ")\n");
  return kOk;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& family, std::size_t m, const std::string& out) {
  auto tg = family.empty() ? random_tanglegram(n, seed) : build_family(parse_family(family), m);
  auto text = serialize_tanglegram(tg);
  if (!out.empty()) write_text_file(out, text);
  json doc{{"command", "gen"}, {"size", tg.size()}, {"tgl", text}};
  if (!out.empty()) doc["output"] = out;
  emit(doc, out.empty() ? text : "wrote " + out + "\n");
  return kOk;
}

int cmd_verify(const VerifyOptions& o) {
  json rows = json::array();
  bool ok = true;
  run_acceptance(o, [&](const CriterionResult& r) {
    ok = ok && r.pass;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds},
                    {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    if (!g_json) std::cout << format_result(r) << std::endl;
  });
  if (g_json) std::cout << json{{"command", "verify"}, {"pass", ok}, {"criteria", rows}}.dump(2) << "\n";
  return ok ? kOk : kNegative;
}

int cmd_survey(std::size_t size, std::size_t samples, std::uint64_t seed, std::optional<std::uint64_t> budget, bool force) {
  auto bins = survey(size, samples, seed, crt_options(budget, force));
  json rows = json::array();
  std::string text = "|X|  count  max crt\n";
  for (const auto& [k, b] : bins) {
    rows.push_back({{"sets", k}, {"count", b.count}, {"max_crt", b.max_crt}, {"unresolved", b.unresolved}});
    char line[96];
    std::snprintf(line, sizeof line, "%3zu  %5zu  %7llu%s\n", k, b.count, static_cast<unsigned long long>(b.max_crt),
                  b.unresolved ? " (some upper bounds)" : "");
    text += line;
  }
  emit({{"command", "survey"}, {"size", size}, {"samples", samples}, {"seed", seed}, {"bins", rows}}, text);
  return kOk;
}

int fail(int code, const std::string& cls, const std::string& msg, std::optional<std::size_t> count = {}) {
  if (g_json) {
    json err{{"class", cls}, {"message", msg}, {"exit_code", code}};
    if (count) err["count"] = *count;
    std::cout << json{{"error", err}}.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tanglegram layout toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "Machine-readable output");

  std::string file, out, layout, family;
  std::optional<std::uint64_t> budget;
  bool force = false;
  std::size_t n = 0, m = 1;
  std::uint64_t seed = 1;
  VerifyOptions vo;
  std::size_t survey_size = 8, survey_samples = 100;

  auto* detect = app.add_subcommand("detect", "List the cross-responsible sets");
  detect->add_option("file", file, "TGL file")->required();

  auto* crt = app.add_subcommand("crt", "Exact tangle crossing number");
  crt->add_option("file", file, "TGL file")->required();
  crt->add_option("--budget", budget, "Search-node budget (default TGL_BUDGET or 1e7)");
  crt->add_flag("--force", force, "Allow sizes above the cap");
  crt->add_option("-o,--output", out, "Write the witness layout here");

  auto* planar = app.add_subcommand("planar", "Crossing-free layout or an obstruction");
  planar->add_option("file", file, "TGL file")->required();
  planar->add_option("--budget", budget, "Search-node budget");
  planar->add_flag("--force", force, "Allow sizes above the cap");
  planar->add_option("-o,--output", out, "Write the layout here");

  auto* onecross = app.add_subcommand("onecross", "One-crossing layout when there is exactly one cross-responsible set");
  onecross->add_option("file", file, "TGL file")->required();
  onecross->add_option("-o,--output", out, "Write the layout here");

  auto* render = app.add_subcommand("render", "Draw a layout as SVG");
  render->add_option("file", file, "TGL file")->required();
  render->add_option("--layout", layout, "Layout file")->required();
  render->add_option("-o,--output", out, "SVG output")->required();

  auto* gen = app.add_subcommand("gen", "Random tanglegram or a named family");
  auto* n_opt = gen->add_option("-n", n, "Size");
  gen->add_option("--seed", seed, "Seed");
  auto* fam_opt = gen->add_option("--family", family, "K1, K2, T1 or T2");
  gen->add_option("--m", m, "Block size for T1/T2");
  gen->add_option("-o,--output", out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suites");
  verify->add_option("--max-size", vo.max_size, "Largest exhaustively enumerated size (1..6)");
  verify->add_option("--samples", vo.samples, "Random instances for the oracle-equivalence suite");
  verify->add_option("--seed", vo.seed, "Seed");
  verify->add_option("--one-cross-samples", vo.one_cross_samples, "Minimum random instances for the one-crossing suite");
  verify->add_option("--one-cross-unique", vo.one_cross_unique, "Instances with |X|=1 required by the one-crossing suite");

  auto* surv = app.add_subcommand("survey", "Bin random tanglegrams by |X| and report the largest crt per bin");
  surv->add_option("--size", survey_size, "Size")->required();
  surv->add_option("--samples", survey_samples, "Samples");
  surv->add_option("--seed", seed, "Seed");
  surv->add_option("--budget", budget, "Search-node budget");
  surv->add_flag("--force", force, "Allow sizes above the cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  try {
    if (*detect) return cmd_detect(file);
    if (*crt) return cmd_crt(file, budget, force, out);
    if (*planar) return cmd_planar(file, budget, force, out);
    if (*onecross) return cmd_onecross(file, out);
    if (*render) return cmd_render(file, layout, out);
    if (*gen) {
      if (fam_opt->count() == 0 && n_opt->count() == 0) return fail(kPrecondition, "usage", "gen needs -n or --family");
      return cmd_gen(n, seed, family, m, out);
    }
    if (*verify) return cmd_verify(vo);
    if (*surv) return cmd_survey(survey_size, survey_samples, seed, budget, force);
  } catch (const ParseError& e) {
    return fail(kIo, std::string("parse:") + ParseError::code_name(e.code()), e.what());
  } catch (const IoError& e) {
    return fail(kIo, "io", e.what());
  } catch (const PreconditionError& e) {
    return fail(kPrecondition, "precondition", e.what(), e.count());
  } catch (const BudgetExhausted& e) {
    return fail(kBudget, "budget", e.what());
  } catch (const RefusalError& e) {
    return fail(kPrecondition, "refusal", e.what());
  } catch (const DomainError& e) {
    return fail(kPrecondition, "domain", e.what());
  } catch (const ConsistencyError& e) {
    return fail(kInternal, "consistency:" + e.lemma(), e.what());
  }
  return kPrecondition;
}
