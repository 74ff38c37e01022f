#include "tangle/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tangle/error.hpp"

namespace tangle {

namespace {

using Code = ParseError::Code;

bool label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class NewickParser {
 public:
  NewickParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  RootedBinaryTree parse() {
    children_.push_back({kNoNode, kNoNode});  // root stub
    labels_.emplace_back();
    skip_ws();
    NodeId top = node();
    skip_ws();
    expect(';');
    skip_ws();
    if (pos_ != s_.size()) fail(Code::Syntax, "trailing characters after ';'");
    children_[0][0] = top;
    try {
      return RootedBinaryTree::from_children(0, children_, labels_);
    } catch (const DomainError& e) {
      throw ParseError(Code::Syntax, e.what(), line_, 1);
    }
  }

 private:
  [[noreturn]] void fail(Code code, const std::string& what) const { fail_at(code, what, pos_); }
  [[noreturn]] void fail_at(Code code, const std::string& what, std::size_t at) const {
    throw ParseError(code, what, line_, at + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= s_.size()) fail(Code::Syntax, std::string("expected '") + c + "', found end of line");
    if (s_[pos_] != c) fail(Code::Syntax, std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    ++pos_;
  }

  std::string token(bool allow_dot) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (label_char(s_[pos_]) || (allow_dot && s_[pos_] == '.'))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void branch_length() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ':') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                  s_[pos_] == 'e' || s_[pos_] == 'E' || s_[pos_] == '-' || s_[pos_] == '+'))
        ++pos_;
      if (pos_ == start) fail(Code::Syntax, "missing branch length after ':'");
    }
  }

  NodeId add(std::string label) {
    children_.push_back({kNoNode, kNoNode});
    labels_.push_back(std::move(label));
    return static_cast<NodeId>(children_.size() - 1);
  }

  NodeId node() {
    skip_ws();
    if (pos_ >= s_.size()) fail(Code::Syntax, "unexpected end of line");
    if (s_[pos_] == '(') {
      std::size_t open = pos_++;
      NodeId self = add({});
      std::vector<NodeId> kids{node()};
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        kids.push_back(node());
        skip_ws();
      }
      expect(')');
      if (kids.size() != 2)
        fail_at(Code::NonBinary, "node has " + std::to_string(kids.size()) + " children, expected 2", open);
      children_[static_cast<std::size_t>(self)] = {kids[0], kids[1]};
      skip_ws();
      token(true);  // internal name or support value, ignored
      branch_length();
      return self;
    }
    std::size_t start = pos_;
    std::string lab = token(false);
    if (lab.empty()) fail(Code::Syntax, std::string("unexpected character '") + s_[pos_] + "'");
    if (!seen_.insert(lab).second) fail_at(Code::DuplicateLabel, "leaf label '" + lab + "' repeated", start);
    NodeId self = add(std::move(lab));
    branch_length();
    return self;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::vector<std::array<NodeId, 2>> children_;
  std::vector<std::string> labels_;
  std::set<std::string> seen_;
};

void newick_rec(const RootedBinaryTree& t, NodeId v, std::string& out) {
  if (t.is_leaf(v)) {
    out += t.label(v);
    return;
  }
  out += '(';
  newick_rec(t, t.child(v, 0), out);
  out += ',';
  newick_rec(t, t.child(v, 1), out);
  out += ')';
}

struct Line {
  std::size_t number;
  std::size_t offset;  // column offset of `text` within the raw line
  std::string text;
};

/// Nonblank lines with comments, CR and surrounding blanks removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t b = 0;
    while (b < raw.size() && (raw[b] == ' ' || raw[b] == '\t')) ++b;
    std::size_t e = raw.size();
    while (e > b && (raw[e - 1] == ' ' || raw[e - 1] == '\t' || raw[e - 1] == '\r')) --e;
    if (e > b) out.push_back({number, b, std::string(raw.substr(b, e - b))});
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  return out;
}

RootedBinaryTree parse_tree_line(const Line& line) {
  try {
    return parse_newick(line.text, line.number);
  } catch (const ParseError& e) {
    if (e.line() == 0) throw;
    // Re-anchor the column to the raw line.
    std::string what = e.what();
    auto colon = what.find(": ");
    throw ParseError(e.code(), colon == std::string::npos ? what : what.substr(colon + 2), e.line(),
                     e.column() + line.offset);
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string{} : cur.substr(b, e - b + 1));
  }
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Drawing constants (user units).
constexpr double kMargin = 20;
constexpr double kTreeWidth = 160;
constexpr double kGap = 200;
constexpr double kRow = 30;
constexpr double kTop = 30;

struct Placement {
  std::vector<double> x, y;
};

Placement place(const RootedBinaryTree& t, const std::vector<std::string>& order, bool right_side) {
  const auto n = t.node_count();
  Placement p;
  p.x.assign(n, 0);
  p.y.assign(n, 0);
  int height = 1;
  for (NodeId v : t.leaves()) height = std::max(height, t.depth(v));
  const double leaf_x = right_side ? kMargin + kTreeWidth + kGap : kMargin + kTreeWidth;
  const double step = kTreeWidth / height;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto v = static_cast<std::size_t>(t.leaf(order[i]));
    p.y[v] = kTop + kRow * static_cast<double>(i);
  }
  for (std::size_t i = n; i-- > 0;) {
    auto v = static_cast<NodeId>(i);
    if (t.is_leaf(v)) {
      p.x[i] = leaf_x;
      continue;
    }
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < t.child_count(v); ++k) {
      auto c = static_cast<std::size_t>(t.child(v, k));
      lo = std::min(lo, p.y[c]);
      hi = std::max(hi, p.y[c]);
    }
    p.y[i] = (lo + hi) / 2;
    double off = step * t.depth(v);
    p.x[i] = right_side ? leaf_x + kTreeWidth - off : leaf_x - kTreeWidth + off;
  }
  // The root stub points away from the leaves.
  p.x[0] = right_side ? leaf_x + kTreeWidth + step / 2 : leaf_x - kTreeWidth - step / 2;
  return p;
}

double orient(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

}  // namespace

RootedBinaryTree parse_newick(std::string_view text, std::size_t line) {
  return NewickParser(text, line).parse();
}

std::string to_newick(const RootedBinaryTree& tree) {
  std::string out;
  newick_rec(tree, tree.child(tree.root(), 0), out);
  out += ';';
  return out;
}

Tanglegram parse_tanglegram(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.size() < 3)
    throw ParseError(Code::Syntax, "expected 3 content lines (left tree, right tree, matching), found " +
                                       std::to_string(lines.size()),
                     lines.empty() ? 1 : lines.back().number + 1, 1);
  if (lines.size() > 3) throw ParseError(Code::Syntax, "unexpected content after the matching line", lines[3].number, 1);
  auto left = parse_tree_line(lines[0]);
  auto right = parse_tree_line(lines[1]);

  const Line& m = lines[2];
  std::vector<MatchingEdge> sigma;
  std::vector<bool> used_l(left.node_count(), false), used_r(right.node_count(), false);
  for (const auto& item : split_commas(m.text)) {
    auto dash = item.find('-');
    if (item.empty() || dash == std::string::npos || dash == 0 || dash + 1 == item.size())
      throw ParseError(Code::Syntax, "matching pair '" + item + "' is not of the form left-right", m.number, 1);
    std::string l = item.substr(0, dash), r = item.substr(dash + 1);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    l = trim(l);
    r = trim(r);
    if (!std::all_of(l.begin(), l.end(), label_char) || !std::all_of(r.begin(), r.end(), label_char))
      throw ParseError(Code::Syntax, "bad label in matching pair '" + item + "'", m.number, 1);
    auto lv = left.find_leaf(l);
    auto rv = right.find_leaf(r);
    if (!lv) throw ParseError(Code::MatchingNotPerfect, "'" + l + "' is not a left leaf", m.number, 1);
    if (!rv) throw ParseError(Code::MatchingNotPerfect, "'" + r + "' is not a right leaf", m.number, 1);
    if (used_l[static_cast<std::size_t>(*lv)])
      throw ParseError(Code::MatchingNotPerfect, "left leaf '" + l + "' matched twice", m.number, 1);
    if (used_r[static_cast<std::size_t>(*rv)])
      throw ParseError(Code::MatchingNotPerfect, "right leaf '" + r + "' matched twice", m.number, 1);
    used_l[static_cast<std::size_t>(*lv)] = used_r[static_cast<std::size_t>(*rv)] = true;
    sigma.push_back({*lv, *rv});
  }
  if (sigma.size() != left.leaf_count() || sigma.size() != right.leaf_count())
    throw ParseError(Code::MatchingNotPerfect,
                     std::to_string(sigma.size()) + " pairs for " + std::to_string(left.leaf_count()) + " left and " +
                         std::to_string(right.leaf_count()) + " right leaves",
                     m.number, 1);
  return Tanglegram(std::move(left), std::move(right), std::move(sigma));
}

std::string serialize_tanglegram(const Tanglegram& tg) {
  std::string out = to_newick(tg.left()) + "\n" + to_newick(tg.right()) + "\n";
  bool first = true;
  for (NodeId v : tg.left().leaves()) {
    const auto& m = tg.edge(tg.edge_at_left(v));
    if (!first) out += ',';
    first = false;
    out += tg.left().label(m.left) + "-" + tg.right().label(m.right);
  }
  return out + "\n";
}

LayoutRep parse_layout(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.size() != 2)
    throw ParseError(Code::Syntax, "layout needs exactly 2 lines, found " + std::to_string(lines.size()),
                     lines.size() > 2 ? lines[2].number : 1, 1);
  LayoutRep rep;
  for (int side = 0; side < 2; ++side) {
    auto& dst = side == 0 ? rep.left : rep.right;
    for (auto& lab : split_commas(lines[static_cast<std::size_t>(side)].text)) {
      if (lab.empty() || !std::all_of(lab.begin(), lab.end(), label_char))
        throw ParseError(Code::Syntax, "bad leaf label '" + lab + "'", lines[static_cast<std::size_t>(side)].number, 1);
      dst.push_back(lab);
    }
  }
  return rep;
}

std::string serialize_layout(const LayoutRep& rep) {
  std::string out;
  for (const auto* side : {&rep.left, &rep.right}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      if (i) out += ',';
      out += (*side)[i];
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

Tanglegram read_tanglegram_file(const std::string& path) { return parse_tanglegram(read_text_file(path)); }
LayoutRep read_layout_file(const std::string& path) { return parse_layout(read_text_file(path)); }

std::vector<DrawnCrossing> drawn_crossings(const Tanglegram& tg, const LayoutRep& rep) {
  check_permutations(tg, rep);
  auto pl = place(tg.left(), rep.left, false);
  auto pr = place(tg.right(), rep.right, true);
  struct Seg {
    double ax, ay, bx, by;
  };
  std::vector<Seg> segs;
  for (const auto& m : tg.sigma()) {
    auto l = static_cast<std::size_t>(m.left), r = static_cast<std::size_t>(m.right);
    segs.push_back({pl.x[l], pl.y[l], pr.x[r], pr.y[r]});
  }
  std::vector<DrawnCrossing> out;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      double d1 = orient(s.ax, s.ay, s.bx, s.by, t.ax, t.ay);
      double d2 = orient(s.ax, s.ay, s.bx, s.by, t.bx, t.by);
      double d3 = orient(t.ax, t.ay, t.bx, t.by, s.ax, s.ay);
      double d4 = orient(t.ax, t.ay, t.bx, t.by, s.bx, s.by);
      if (!((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) || !((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) continue;
      double u = d1 / (d1 - d2);
      out.push_back({static_cast<EdgeId>(i), static_cast<EdgeId>(j), t.ax + u * (t.bx - t.ax),
                     t.ay + u * (t.by - t.ay)});
    }
  return out;
}

std::string render_svg(const Tanglegram& tg, const LayoutRep& rep) {
  check_permutations(tg, rep);
  if (!is_consistent(tg.left(), rep.left)) throw DomainError("render: left order is not consistent with the tree");
  if (!is_consistent(tg.right(), rep.right)) throw DomainError("render: right order is not consistent with the tree");
  auto pl = place(tg.left(), rep.left, false);
  auto pr = place(tg.right(), rep.right, true);
  auto crossings = drawn_crossings(tg, rep);
  if (crossings.size() != crossing_count(tg, rep))
    throw ConsistencyError("render", "drawn crossings disagree with the crossing count");
  std::vector<bool> hot(tg.size(), false);
  for (const auto& c : crossings) hot[static_cast<std::size_t>(c.a)] = hot[static_cast<std::size_t>(c.b)] = true;

  const double width = 2 * kMargin + 2 * kTreeWidth + kGap + 60;
  const double height = kTop + kRow * static_cast<double>(tg.size()) + 30;
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) + "\" height=\"" +
       fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  s += "<style>.tree{stroke:#222;stroke-width:2;fill:none}.match{stroke:#5577aa;stroke-width:1.5}"
       ".crossing{stroke:#d62728;stroke-width:2.5}.leaf{font:11px monospace}</style>\n";

  auto tree_group = [&](const RootedBinaryTree& t, const Placement& p, const char* id) {
    s += "<g id=\"" + std::string(id) + "\" class=\"tree\">\n";
    for (std::size_t v = 1; v < t.node_count(); ++v) {
      auto u = static_cast<std::size_t>(t.parent(static_cast<NodeId>(v)));
      s += "<line x1=\"" + fmt(p.x[u]) + "\" y1=\"" + fmt(p.y[u]) + "\" x2=\"" + fmt(p.x[v]) + "\" y2=\"" +
           fmt(p.y[v]) + "\"/>\n";
    }
    s += "</g>\n";
  };
  tree_group(tg.left(), pl, "left");
  tree_group(tg.right(), pr, "right");

  s += "<g id=\"matching\">\n";
  for (std::size_t e = 0; e < tg.size(); ++e) {
    const auto& m = tg.sigma()[e];
    auto l = static_cast<std::size_t>(m.left), r = static_cast<std::size_t>(m.right);
    s += "<line class=\"" + std::string(hot[e] ? "match crossing" : "match") + "\" data-edge=\"" +
         tg.edge_name(static_cast<EdgeId>(e)) + "\" x1=\"" + fmt(pl.x[l]) + "\" y1=\"" + fmt(pl.y[l]) + "\" x2=\"" +
         fmt(pr.x[r]) + "\" y2=\"" + fmt(pr.y[r]) + "\"/>\n";
  }
  s += "</g>\n<g id=\"labels\" class=\"leaf\">\n";
  for (NodeId v : tg.left().leaves()) {
    auto i = static_cast<std::size_t>(v);
    s += "<text x=\"" + fmt(pl.x[i] + 4) + "\" y=\"" + fmt(pl.y[i] - 4) + "\">" + tg.left().label(v) + "</text>\n";
  }
  for (NodeId v : tg.right().leaves()) {
    auto i = static_cast<std::size_t>(v);
    s += "<text x=\"" + fmt(pr.x[i] - 4) + "\" y=\"" + fmt(pr.y[i] - 4) + "\" text-anchor=\"end\">" +
         tg.right().label(v) + "</text>\n";
  }
  s += "</g>\n<g id=\"crossings\">\n";
  for (const auto& c : crossings)
    s += "<circle class=\"crossing-point\" cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
         "\" r=\"5\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  s += "</g>\n";
  s += "<text id=\"caption\" x=\"" + fmt(kMargin) + "\" y=\"" + fmt(height - 10) +
       "\" font-family=\"sans-serif\" font-size=\"13\">crossings: " + std::to_string(crossings.size()) + "</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace tangle
