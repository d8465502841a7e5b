#pragma once

// Text formats.
//
//   pattern    s=<n>, then one box per line (fields joined by ':', 'e' empty)
//   below-set  pattern block, '---', one element per line as space-separated
//              formal=leaf pairs
//   chain      pattern block, then one '---' section per vertex, least first
//   element    s=<n>, then lines 'dom -> ran'
//   graph      lines 'u <-> v : colour'
//
// Blank lines and lines starting with '#' are ignored on input.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "brinv/boxes.hpp"
#include "brinv/brin_group.hpp"
#include "brinv/errors.hpp"
#include "brinv/fragments.hpp"
#include "brinv/gamma.hpp"
#include "brinv/pushing.hpp"

namespace brinv {

namespace detail {
  struct Line {
    std::size_t number;
    std::string text;
  };

  inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t       number = 0;
    std::size_t       start  = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++number;
      std::string line(text.substr(start, end - start));
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
        line.pop_back();
      }
      if (!line.empty() && line[0] != '#') {
        out.push_back({number, std::move(line)});
      }
      start = end + 1;
    }
    return out;
  }

  [[noreturn]] inline void syntax(Line const& l, std::size_t column, std::string const& msg) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(l.number) + ", column "
                                            + std::to_string(column + 1) + ": " + msg);
  }

  // Rethrows a field-level error with a position.
  template <class F>
  auto at(Line const& l, std::size_t column, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::SyntaxError) {
        syntax(l, column, e.detail());
      }
      throw;
    }
  }

  inline Box parse_box_at(Line const& l, std::size_t column, std::string_view text, int s) {
    auto b = at(l, column, [&] { return Box::parse(text); });
    if (b.colours() != s) {
      syntax(l, column, "expected " + std::to_string(s) + " fields, found "
                            + std::to_string(b.colours()));
    }
    return b;
  }

  inline int parse_header(Line const& l) {
    if (l.text.size() != 3 || l.text.rfind("s=", 0) != 0 || l.text[2] < '1'
        || l.text[2] > '3') {
      syntax(l, 0, "expected header s=1, s=2 or s=3");
    }
    return l.text[2] - '0';
  }

  inline std::size_t next_separator(std::vector<Line> const& lines, std::size_t from) {
    while (from < lines.size() && lines[from].text != "---") {
      ++from;
    }
    return from;
  }

  inline Pattern parse_pattern_lines(std::vector<Line> const& lines, std::size_t begin,
                                     std::size_t end) {
    if (begin >= end) {
      throw Error(ErrorKind::SyntaxError, "missing pattern header");
    }
    int const        s = parse_header(lines[begin]);
    std::vector<Box> boxes;
    for (std::size_t i = begin + 1; i < end; ++i) {
      boxes.push_back(parse_box_at(lines[i], 0, lines[i].text, s));
    }
    if (boxes.empty()) {
      syntax(lines[begin], 0, "pattern has no boxes");
    }
    try {
      return Pattern(s, std::move(boxes));
    } catch (Error const& e) {
      throw Error(ErrorKind::InvariantViolation,
                  "pattern starting at line " + std::to_string(lines[begin].number) + ": "
                      + e.what());
    }
  }

  inline Fragment parse_fragment_line(Line const& l, Pattern const& y) {
    std::vector<Cell> cells;
    std::size_t       pos = 0;
    while (pos < l.text.size()) {
      auto end = l.text.find(' ', pos);
      if (end == std::string::npos) {
        end = l.text.size();
      }
      std::string_view tok(l.text.data() + pos, end - pos);
      auto             eq = tok.find('=');
      if (eq == std::string_view::npos) {
        syntax(l, pos, "expected formal=leaf");
      }
      auto formal = parse_box_at(l, pos, tok.substr(0, eq), y.colours());
      auto leaf   = parse_box_at(l, pos + eq + 1, tok.substr(eq + 1), y.colours());
      auto idx    = y.index_of(leaf);
      if (!idx) {
        syntax(l, pos + eq + 1, "box " + leaf.str() + " is not in the base pattern");
      }
      cells.push_back({static_cast<LeafIndex>(*idx), formal});
      pos = end + 1;
      while (pos < l.text.size() && l.text[pos] == ' ') {
        ++pos;
      }
    }
    try {
      return Fragment(y.colours(), std::move(cells));
    } catch (Error const& e) {
      throw Error(e.kind(), "line " + std::to_string(l.number) + ": " + e.detail());
    }
  }

  inline BelowSet parse_below_lines(std::vector<Line> const&               lines,
                                    std::size_t begin, std::size_t end,
                                    std::shared_ptr<Pattern const> const& y) {
    std::vector<Fragment> elems;
    for (std::size_t i = begin; i < end; ++i) {
      elems.push_back(parse_fragment_line(lines[i], *y));
    }
    try {
      return BelowSet(y, std::move(elems));
    } catch (Error const& e) {
      auto where = begin < lines.size() ? lines[begin].number : 0;
      throw Error(e.kind(), "below-set starting at line " + std::to_string(where) + ": "
                                + e.detail());
    }
  }
}  // namespace detail

////////////////////////////////////////////////////////////////////////
// Patterns
////////////////////////////////////////////////////////////////////////

inline std::string to_text(Pattern const& p) {
  std::string out = "s=" + std::to_string(p.colours()) + "\n";
  for (auto const& b : p) {
    out += b.str() + "\n";
  }
  return out;
}

inline Pattern parse_pattern(std::string_view text) {
  auto lines = detail::split_lines(text);
  return detail::parse_pattern_lines(lines, 0, lines.size());
}

////////////////////////////////////////////////////////////////////////
// Below-sets and chains
////////////////////////////////////////////////////////////////////////

inline std::string fragment_text(Fragment const& f, Pattern const& y) {
  std::string out;
  for (auto const& c : f.cells()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += c.formal.str() + "=" + y[c.leaf].str();
  }
  return out;
}

inline std::string elems_text(BelowSet const& w) {
  std::string out;
  for (auto const& f : w.elems()) {
    out += fragment_text(f, w.base()) + "\n";
  }
  return out;
}

inline std::string to_text(BelowSet const& w) {
  return to_text(w.base()) + "---\n" + elems_text(w);
}

inline BelowSet parse_below_set(std::string_view text) {
  auto lines = detail::split_lines(text);
  auto sep   = detail::next_separator(lines, 0);
  if (sep == lines.size()) {
    throw Error(ErrorKind::SyntaxError, "missing '---' after the base pattern");
  }
  auto y = share(detail::parse_pattern_lines(lines, 0, sep));
  return detail::parse_below_lines(lines, sep + 1, lines.size(), y);
}

inline BelowSet parse_below_set(std::string_view text, std::shared_ptr<Pattern const> y) {
  auto w = parse_below_set(text);
  if (!(w.base() == *y)) {
    throw Error(ErrorKind::BaseMismatch, "below-set over another pattern");
  }
  return BelowSet(unchecked, std::move(y), w.elems());
}

inline std::string to_text(Chain const& c) {
  std::string out = to_text(c.vertices.front().base());
  for (auto const& v : c.vertices) {
    out += "---\n" + elems_text(v);
  }
  return out;
}

inline Chain parse_chain(std::string_view text) {
  auto lines = detail::split_lines(text);
  auto sep   = detail::next_separator(lines, 0);
  if (sep == lines.size()) {
    throw Error(ErrorKind::SyntaxError, "chain needs at least one vertex");
  }
  auto  y = share(detail::parse_pattern_lines(lines, 0, sep));
  Chain c;
  while (sep < lines.size()) {
    auto next = detail::next_separator(lines, sep + 1);
    c.vertices.push_back(detail::parse_below_lines(lines, sep + 1, next, y));
    sep = next;
  }
  return c;
}

////////////////////////////////////////////////////////////////////////
// Group elements
////////////////////////////////////////////////////////////////////////

inline std::string to_text(GroupElement const& g) {
  std::string out = "s=" + std::to_string(g.colours()) + "\n";
  for (auto const& [d, r] : g.pairs()) {
    out += d.str() + " -> " + r.str() + "\n";
  }
  return out;
}

inline GroupElement parse_element(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty()) {
    throw Error(ErrorKind::SyntaxError, "empty element");
  }
  int const                        s = detail::parse_header(lines[0]);
  std::vector<std::pair<Box, Box>> pairs;
  std::vector<Box>                 dom, ran;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const& l     = lines[i];
    auto        arrow = l.text.find(" -> ");
    if (arrow == std::string::npos) {
      detail::syntax(l, 0, "expected 'dom -> ran'");
    }
    auto d = detail::parse_box_at(l, 0, std::string_view(l.text).substr(0, arrow), s);
    auto r = detail::parse_box_at(l, arrow + 4, std::string_view(l.text).substr(arrow + 4), s);
    pairs.emplace_back(d, r);
    dom.push_back(d);
    ran.push_back(r);
  }
  return GroupElement::unreduced(Pattern(s, dom), Pattern(s, ran), pairs);
}

////////////////////////////////////////////////////////////////////////
// Graphs
////////////////////////////////////////////////////////////////////////

inline std::string to_text(ColouredGraph const& g) {
  std::string out;
  for (auto const& e : g.edges) {
    out += (*g.y)[e.u].str() + " <-> " + (*g.y)[e.v].str() + " : "
           + std::to_string(e.colour) + "\n";
  }
  return out;
}

inline std::string to_dot(ColouredGraph const& g) {
  std::string out = "graph gamma {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out += "  \"" + (*g.y)[v].str() + "\";\n";
  }
  for (auto const& e : g.edges) {
    out += "  \"" + (*g.y)[e.u].str() + "\" -- \"" + (*g.y)[e.v].str()
           + "\" [label=" + std::to_string(e.colour) + "];\n";
  }
  return out + "}\n";
}

}  // namespace brinv
