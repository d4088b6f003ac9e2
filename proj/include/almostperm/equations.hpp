#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace almostperm {

/// One letter x_j or x_j^{-1}; generators are numbered from 1.
struct Letter {
  std::uint32_t generator = 1;
  std::int8_t sign = 1;

  friend bool operator==(const Letter &, const Letter &) = default;
};

/// A word in the generators and their inverses, stored fully expanded so
/// that size() is the written length. The empty word is the identity.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Largest generator index used, 0 for the identity word.
  std::uint32_t max_generator() const {
    std::uint32_t m = 0;
    for (const auto &l : letters_)
      m = std::max(m, l.generator);
    return m;
  }

  friend Word operator*(const Word &a, const Word &b) {
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word &, const Word &) = default;

  /// Renders runs of equal letters with exponents, e.g. `x1^2 x2^-1`;
  /// the identity renders as `1`.
  std::string str() const {
    if (letters_.empty())
      return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i])
        ++j;
      if (i > 0)
        os << ' ';
      os << 'x' << letters_[i].generator;
      auto run = static_cast<long>(j - i) * letters_[i].sign;
      if (run != 1)
        os << '^' << run;
      i = j;
    }
    return os.str();
  }

private:
  std::vector<Letter> letters_;
};

/// Relations lhs_i = rhs_i over generators x_1..x_k.
struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(const Relation &, const Relation &) = default;
};

struct EquationSystem {
  std::uint32_t arity = 0;
  std::vector<Relation> relations;

  friend bool operator==(const EquationSystem &,
                         const EquationSystem &) = default;

  std::string str() const {
    std::string out;
    for (const auto &r : relations)
      out += r.lhs.str() + " = " + r.rhs.str() + "\n";
    return out;
  }
};

/// Permutations f_1..f_k of a common degree.
class PermTuple {
public:
  explicit PermTuple(std::vector<Permutation> perms) : perms_(std::move(perms)) {
    if (perms_.empty())
      throw InvalidArgument("a tuple needs at least one permutation");
    for (const auto &f : perms_)
      if (f.degree() != perms_.front().degree())
        throw DegreeMismatch(perms_.front().degree(), f.degree());
  }

  std::size_t degree() const { return perms_.front().degree(); }
  std::size_t size() const { return perms_.size(); }
  const Permutation &operator[](std::size_t i) const { return perms_[i]; }
  const std::vector<Permutation> &perms() const { return perms_; }

  friend bool operator==(const PermTuple &, const PermTuple &) = default;

private:
  std::vector<Permutation> perms_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline bool parse_int(std::string_view s, long long &out) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

} // namespace detail

/// Parses whitespace-separated factors `xJ` or `xJ^E` (J >= 1, E != 0).
/// Blank text and the lone token `1` denote the identity word.
inline Word parse_word(std::string_view text, std::size_t line = 0) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  bool saw_one = false;
  std::size_t tokens = 0;
  while (in >> tok) {
    ++tokens;
    if (tok == "1") {
      saw_one = true;
      continue;
    }
    if (tok.size() < 2 || tok[0] != 'x')
      throw ParseError("malformed factor '" + tok + "'", line);
    std::string_view body(tok);
    body.remove_prefix(1);
    long long exponent = 1;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      if (!detail::parse_int(body.substr(caret + 1), exponent))
        throw ParseError("malformed exponent in '" + tok + "'", line);
      if (exponent == 0)
        throw ParseError("zero exponent in '" + tok + "'", line);
      body = body.substr(0, caret);
    }
    long long j = 0;
    if (body.empty() || body.front() == '+' || body.front() == '-' ||
        !detail::parse_int(body, j))
      throw ParseError("malformed generator in '" + tok + "'", line);
    if (j < 1 || j > UINT32_MAX)
      throw ParseError("generator index must be >= 1 in '" + tok + "'", line);
    const Letter letter{static_cast<std::uint32_t>(j),
                        static_cast<std::int8_t>(exponent > 0 ? 1 : -1)};
    for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
      letters.push_back(letter);
  }
  if (saw_one && tokens > 1)
    throw ParseError("'1' must stand alone", line);
  return Word(std::move(letters));
}

/// One relation `LHS = RHS` per line; `#` starts a comment. The arity is the
/// largest generator index mentioned.
inline EquationSystem parse_system(std::string_view text) {
  EquationSystem sys;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty())
      continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("missing '='", line_no);
    if (line.find('=', eq + 1) != std::string_view::npos)
      throw ParseError("more than one '='", line_no);
    Relation r{parse_word(line.substr(0, eq), line_no),
               parse_word(line.substr(eq + 1), line_no)};
    sys.arity = std::max({sys.arity, r.lhs.max_generator(),
                          r.rhs.max_generator()});
    sys.relations.push_back(std::move(r));
  }
  if (sys.relations.empty())
    throw ParseError("no relations");
  return sys;
}

namespace detail {

/// Images of every generator and its inverse, 0-based, for pointwise walks.
class LetterTable {
public:
  explicit LetterTable(const PermTuple &t) {
    for (const auto &f : t.perms()) {
      auto fw = f.raw();
      forward_.emplace_back(fw.begin(), fw.end());
      const Permutation inv = inverse(f);
      backward_.emplace_back(inv.raw().begin(), inv.raw().end());
    }
  }

  Point step(Point a, const Letter &l) const {
    return l.sign > 0 ? forward_[l.generator - 1][a]
                      : backward_[l.generator - 1][a];
  }

  Point walk(Point a, const Word &w) const {
    for (const auto &l : w.letters())
      a = step(a, l);
    return a;
  }

private:
  std::vector<std::vector<Point>> forward_;
  std::vector<std::vector<Point>> backward_;
};

inline void check_arity(std::uint32_t needed, const PermTuple &t) {
  if (t.size() != needed)
    throw InvalidArgument("arity mismatch: system has " +
                          std::to_string(needed) + " generators, tuple has " +
                          std::to_string(t.size()));
}

} // namespace detail

/// w(f_1, ..., f_k), composing left to right.
inline Permutation evaluate(const Word &w, const PermTuple &t) {
  if (w.max_generator() > t.size())
    throw InvalidArgument("word uses x" + std::to_string(w.max_generator()) +
                          " but the tuple has " + std::to_string(t.size()) +
                          " permutations");
  detail::LetterTable table(t);
  std::vector<Point> img(t.degree());
  for (std::size_t a = 0; a < img.size(); ++a)
    img[a] = table.walk(static_cast<Point>(a), w);
  return from_zero_based(std::move(img));
}

/// h(w_i(f), u_i(f)) for each relation.
inline std::vector<Rational> relation_defects(const EquationSystem &sys,
                                              const PermTuple &t) {
  detail::check_arity(sys.arity, t);
  std::vector<Rational> out;
  for (const auto &r : sys.relations)
    out.push_back(hamming(evaluate(r.lhs, t), evaluate(r.rhs, t)));
  return out;
}

/// Smallest eps for which t is an eps-solution: the maximum relation defect.
inline Rational defect(const EquationSystem &sys, const PermTuple &t) {
  Rational worst(0);
  for (const auto &d : relation_defects(sys, t))
    worst = std::max(worst, d);
  return worst;
}

inline bool is_exact_solution(const EquationSystem &sys, const PermTuple &t) {
  return defect(sys, t) == 0;
}

} // namespace almostperm
