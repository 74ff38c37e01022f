#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

/// One tree in Newick nesting, terminated by ';'. Branch lengths and
/// internal node names are accepted and dropped. The root stub is implicit.
/// `line` only feeds error positions.
RootedBinaryTree parse_newick(std::string_view text, std::size_t line = 1);
/// Default child order, no lengths.
std::string to_newick(const RootedBinaryTree& tree);

/// TGL: left tree, right tree, then "l-r" pairs separated by commas. '#'
/// starts a comment; blank lines are ignored; CRLF is accepted.
Tanglegram parse_tanglegram(std::string_view text);
std::string serialize_tanglegram(const Tanglegram& tg);

/// Two lines of comma-separated labels, left then right, top to bottom.
LayoutRep parse_layout(std::string_view text);
std::string serialize_layout(const LayoutRep& rep);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
Tanglegram read_tanglegram_file(const std::string& path);
LayoutRep read_layout_file(const std::string& path);

/// A crossing found by intersecting the drawn matching segments.
struct DrawnCrossing {
  EdgeId a = -1;
  EdgeId b = -1;
  double x = 0;
  double y = 0;
};

/// Segment intersections of the matching edges as placed by render_svg.
std::vector<DrawnCrossing> drawn_crossings(const Tanglegram& tg, const LayoutRep& rep);

/// Deterministic SVG drawing: left tree, right tree, matching segments,
/// crossing edges highlighted and a caption with the crossing count. Throws
/// DomainError if either order is not consistent with its tree.
std::string render_svg(const Tanglegram& tg, const LayoutRep& rep);

}  // namespace tangle
