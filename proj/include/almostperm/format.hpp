#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "equations.hpp"
#include "sofic.hpp"

// Text formats:
//
//   permutation   line 1: n
//                 line 2: `oneline: i1 i2 ... in` or `cycles: (a b c)(d e)`
//   tuple         line 1: n, then one image line per generator
//   labeled tuple line 1: n, then `LABEL oneline: ...` / `LABEL cycles: ...`
//   table         `a * b = c` lines and at most one `unit e` line
//
// Blank lines and `#` comments are ignored everywhere. Points are 1-based.

namespace almostperm {

enum class PermFormat { OneLine, Cycles };

/// `(1 3 2)(4 5)`; fixed points are omitted and the identity is `()`.
inline std::string cycle_string(const Permutation &f) {
  std::string out;
  for (const auto &c : cycle_decomposition(f).cycles) {
    if (c.size() < 2)
      continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline std::string image_line(const Permutation &f, PermFormat fmt) {
  if (fmt == PermFormat::Cycles)
    return "cycles: " + cycle_string(f);
  std::string out = "oneline:";
  for (Point v : f.images())
    out += " " + std::to_string(v);
  return out;
}

inline std::string render_permutation(const Permutation &f,
                                      PermFormat fmt = PermFormat::OneLine) {
  return std::to_string(f.degree()) + "\n" + image_line(f, fmt) + "\n";
}

inline std::string render_tuple(const PermTuple &t,
                                PermFormat fmt = PermFormat::OneLine) {
  std::string out = std::to_string(t.degree()) + "\n";
  for (const auto &f : t.perms())
    out += image_line(f, fmt) + "\n";
  return out;
}

inline std::string render_labeled(const Representation &phi,
                                  PermFormat fmt = PermFormat::OneLine) {
  if (phi.empty())
    throw InvalidArgument("empty representation");
  std::string out = std::to_string(phi.begin()->second.degree()) + "\n";
  for (const auto &[label, f] : phi)
    out += label + " " + image_line(f, fmt) + "\n";
  return out;
}

namespace detail {

struct NumberedLine {
  std::size_t number;
  std::string text;
};

/// Non-empty lines with comments stripped and whitespace trimmed.
inline std::vector<NumberedLine> content_lines(std::string_view text) {
  std::vector<NumberedLine> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty())
      out.push_back({number, std::string(line)});
  }
  return out;
}

inline std::size_t parse_degree(const NumberedLine &line) {
  long long n = 0;
  if (!parse_int(line.text, n) || n < 1)
    throw ParseError("expected a positive degree, got '" + line.text + "'",
                     line.number);
  return static_cast<std::size_t>(n);
}

inline Point parse_point(std::string_view tok, std::size_t line) {
  long long v = 0;
  if (!parse_int(tok, v) || v < 1 || v > UINT32_MAX)
    throw ParseError("bad point '" + std::string(tok) + "'", line);
  return static_cast<Point>(v);
}

/// Parses the body after `oneline:` or `cycles:`.
inline Permutation parse_image_line(std::string_view text, std::size_t n,
                                    std::size_t line) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("expected 'oneline:' or 'cycles:'", line);
  auto kind = trim(text.substr(0, colon));
  auto body = text.substr(colon + 1);
  try {
    if (kind == "oneline") {
      std::vector<Point> img;
      std::istringstream in{std::string(body)};
      std::string tok;
      while (in >> tok)
        img.push_back(parse_point(tok, line));
      if (img.size() != n)
        throw ParseError("expected " + std::to_string(n) + " images, got " +
                             std::to_string(img.size()),
                         line);
      return Permutation::from_images(img);
    }
    if (kind == "cycles") {
      std::vector<std::vector<Point>> cycles;
      std::string spaced;
      for (char c : body) {
        if (c == '(' || c == ')' || c == ',')
          spaced += ' ', spaced += c, spaced += ' ';
        else
          spaced += c;
      }
      std::istringstream in{spaced};
      std::string tok;
      bool open = false;
      while (in >> tok) {
        if (tok == "(") {
          if (open)
            throw ParseError("nested '('", line);
          open = true;
          cycles.emplace_back();
        } else if (tok == ")") {
          if (!open)
            throw ParseError("unmatched ')'", line);
          open = false;
        } else if (tok == ",") {
          continue;
        } else {
          if (!open)
            throw ParseError("point outside a cycle", line);
          cycles.back().push_back(parse_point(tok, line));
        }
      }
      if (open)
        throw ParseError("unterminated cycle", line);
      return from_cycles(n, cycles);
    }
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    throw ParseError(e.what(), line);
  }
  throw ParseError("unknown image format '" + std::string(kind) + "'", line);
}

} // namespace detail

inline Permutation parse_permutation(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.size() != 2)
    throw ParseError("a permutation file has a degree line and one image line");
  const auto n = detail::parse_degree(lines[0]);
  return detail::parse_image_line(lines[1].text, n, lines[1].number);
}

inline PermTuple parse_tuple(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.size() < 2)
    throw ParseError("a tuple file has a degree line and at least one image "
                     "line");
  const auto n = detail::parse_degree(lines[0]);
  std::vector<Permutation> perms;
  for (std::size_t i = 1; i < lines.size(); ++i)
    perms.push_back(detail::parse_image_line(lines[i].text, n, lines[i].number));
  return PermTuple(std::move(perms));
}

inline Representation parse_labeled(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty())
    throw ParseError("empty labeled tuple");
  const auto n = detail::parse_degree(lines[0]);
  Representation phi;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto &l = lines[i];
    auto space = l.text.find_first_of(" \t");
    if (space == std::string::npos)
      throw ParseError("expected 'LABEL oneline: ...'", l.number);
    std::string label = l.text.substr(0, space);
    if (phi.count(label))
      throw ParseError("label '" + label + "' repeated", l.number);
    phi.emplace(label, detail::parse_image_line(
                           std::string_view(l.text).substr(space + 1), n,
                           l.number));
  }
  return phi;
}

inline PartialGroupTable parse_table(std::string_view text) {
  PartialGroupTable table;
  for (const auto &l : detail::content_lines(text)) {
    std::istringstream in(l.text);
    std::vector<std::string> tok;
    for (std::string t; in >> t;)
      tok.push_back(t);
    if (tok.size() == 2 && tok[0] == "unit") {
      if (table.unit)
        throw ParseError("second 'unit' line", l.number);
      table.unit = tok[1];
      table.elements.insert(tok[1]);
    } else if (tok.size() == 5 && tok[1] == "*" && tok[3] == "=") {
      if (auto prev = table.product(tok[0], tok[2]); prev && *prev != tok[4])
        throw ParseError("conflicting product " + tok[0] + " * " + tok[2],
                         l.number);
      table.add_product(tok[0], tok[2], tok[4]);
    } else {
      throw ParseError("expected 'a * b = c' or 'unit e'", l.number);
    }
  }
  if (table.elements.empty())
    throw ParseError("empty table");
  return table;
}

inline std::string render_table(const PartialGroupTable &table) {
  std::string out;
  if (table.unit)
    out += "unit " + *table.unit + "\n";
  for (const auto &[ab, c] : table.products)
    out += ab.first + " * " + ab.second + " = " + c + "\n";
  return out;
}

} // namespace almostperm
