#pragma once

#include <optional>
#include <set>
#include <vector>

#include "equations.hpp"

namespace almostperm {

/// Sorted set of 1-based points.
using PointSet = std::vector<Point>;

/// Why a repair at a given radius was rejected.
enum class RepairFailure {
  /// A good point is mapped into the bad set, so the patched maps are not
  /// bijections.
  NotClosed,
  /// The patched maps are bijections but some relation still fails.
  StillFailing,
};

class RepairError : public Error {
public:
  RepairError(RepairFailure kind, std::size_t radius)
      : Error(std::string(kind == RepairFailure::NotClosed ? "not closed"
                                                           : "still failing") +
              " at radius " + std::to_string(radius)),
        kind_(kind), radius_(radius) {}

  RepairFailure kind() const { return kind_; }
  std::size_t radius() const { return radius_; }

private:
  RepairFailure kind_;
  std::size_t radius_;
};

/// No radius up to the limit produced an exact solution.
class Exhausted : public Error {
public:
  explicit Exhausted(std::size_t m_max)
      : Error("no repair radius up to " + std::to_string(m_max) + " succeeded"),
        m_max_(m_max) {}

  std::size_t m_max() const { return m_max_; }

private:
  std::size_t m_max_;
};

struct RepairResult {
  PermTuple repaired;
  std::size_t radius_used = 0;
  /// |M|: points where some relation fails.
  std::size_t failing_count = 0;
  /// |M*|: points within radius_used of M; these become fixed.
  std::size_t bad_count = 0;
  /// h(f_i, repaired_i) per generator.
  std::vector<Rational> distances;
  Rational max_distance;
};

namespace detail {

/// Adjacency of the edge-colored graph: every generator and its inverse.
class ColoredGraph {
public:
  explicit ColoredGraph(const PermTuple &t) : n_(t.degree()) {
    for (const auto &f : t.perms()) {
      auto fw = f.raw();
      maps_.emplace_back(fw.begin(), fw.end());
      const Permutation inv = inverse(f);
      maps_.emplace_back(inv.raw().begin(), inv.raw().end());
    }
  }

  std::size_t size() const { return n_; }

  /// Multi-source breadth-first search to depth m; marks[a] is set for every
  /// reached 0-based point.
  void ball(const std::vector<Point> &sources, std::size_t m,
            std::vector<char> &marks) const {
    std::vector<Point> frontier;
    for (Point s : sources)
      if (!marks[s]) {
        marks[s] = 1;
        frontier.push_back(s);
      }
    std::vector<Point> next;
    for (std::size_t depth = 0; depth < m && !frontier.empty(); ++depth) {
      next.clear();
      for (Point a : frontier)
        for (const auto &map : maps_) {
          Point b = map[a];
          if (!marks[b]) {
            marks[b] = 1;
            next.push_back(b);
          }
        }
      frontier.swap(next);
    }
  }

private:
  std::size_t n_;
  std::vector<std::vector<Point>> maps_;
};

inline PointSet to_points(const std::vector<char> &marks) {
  PointSet out;
  for (std::size_t i = 0; i < marks.size(); ++i)
    if (marks[i])
      out.push_back(static_cast<Point>(i + 1));
  return out;
}

inline std::vector<Point> failing_zero_based(const EquationSystem &sys,
                                             const PermTuple &t) {
  check_arity(sys.arity, t);
  LetterTable table(t);
  std::vector<Point> out;
  for (std::size_t a = 0; a < t.degree(); ++a) {
    const auto p = static_cast<Point>(a);
    for (const auto &r : sys.relations)
      if (table.walk(p, r.lhs) != table.walk(p, r.rhs)) {
        out.push_back(p);
        break;
      }
  }
  return out;
}

} // namespace detail

/// Points reachable from a in at most m steps along any f_j or f_j^{-1}.
inline PointSet neighborhood(const PermTuple &t, Point a, std::size_t m) {
  if (a < 1 || a > t.degree())
    throw InvalidArgument("point " + std::to_string(a) + " out of range");
  detail::ColoredGraph g(t);
  std::vector<char> marks(t.degree(), 0);
  g.ball({a - 1}, m, marks);
  return detail::to_points(marks);
}

/// M = {a : (a)w_i != (a)u_i for some relation i}.
inline PointSet failing_vertices(const EquationSystem &sys,
                                 const PermTuple &t) {
  PointSet out;
  for (Point a : detail::failing_zero_based(sys, t))
    out.push_back(a + 1);
  return out;
}

/// M* = union of the radius-m neighborhoods of the failing points.
inline PointSet bad_vertices(const EquationSystem &sys, const PermTuple &t,
                             std::size_t m) {
  auto failing = detail::failing_zero_based(sys, t);
  detail::ColoredGraph g(t);
  std::vector<char> marks(t.degree(), 0);
  g.ball(failing, m, marks);
  return detail::to_points(marks);
}

namespace detail {

inline RepairResult repair_with_bad_set(const EquationSystem &sys,
                                        const PermTuple &t,
                                        const std::vector<char> &bad,
                                        std::size_t failing_count,
                                        std::size_t m) {
  const std::size_t n = t.degree();
  std::vector<Permutation> patched;
  std::vector<Rational> distances;
  Rational worst(0);
  for (const auto &f : t.perms()) {
    auto img = f.raw();
    std::vector<Point> out(n);
    std::vector<char> hit(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      out[a] = bad[a] ? static_cast<Point>(a) : img[a];
      if (hit[out[a]]++)
        throw RepairError(RepairFailure::NotClosed, m);
    }
    patched.push_back(from_zero_based(std::move(out)));
    distances.push_back(hamming(f, patched.back()));
    worst = std::max(worst, distances.back());
  }
  PermTuple repaired(std::move(patched));
  if (!is_exact_solution(sys, repaired))
    throw RepairError(RepairFailure::StillFailing, m);
  std::size_t bad_count = 0;
  for (char b : bad)
    bad_count += b != 0;
  return {std::move(repaired), m, failing_count, bad_count,
          std::move(distances), worst};
}

} // namespace detail

/// Keeps f_i on good points and fixes every bad point, then validates that
/// the result is an exact solution. Throws RepairError if radius m is too
/// small.
inline RepairResult repair(const EquationSystem &sys, const PermTuple &t,
                           std::size_t m) {
  auto failing = detail::failing_zero_based(sys, t);
  detail::ColoredGraph g(t);
  std::vector<char> bad(t.degree(), 0);
  g.ball(failing, m, bad);
  return detail::repair_with_bad_set(sys, t, bad, failing.size(), m);
}

/// Tries radii 0, 1, ..., m_max and returns the first successful repair.
inline RepairResult repair_auto(const EquationSystem &sys, const PermTuple &t,
                                std::size_t m_max) {
  auto failing = detail::failing_zero_based(sys, t);
  detail::ColoredGraph g(t);
  const std::size_t n = t.degree();
  std::vector<char> bad(n, 0);
  std::size_t last_count = static_cast<std::size_t>(-1);
  for (std::size_t m = 0; m <= m_max; ++m) {
    std::fill(bad.begin(), bad.end(), 0);
    g.ball(failing, m, bad);
    std::size_t count = std::count(bad.begin(), bad.end(), 1);
    // Once the ball stops growing, larger radii give the same answer.
    if (count == last_count)
      break;
    last_count = count;
    try {
      return detail::repair_with_bad_set(sys, t, bad, failing.size(), m);
    } catch (const RepairError &) {
    }
  }
  throw Exhausted(m_max);
}

/// Size of a radius-m ball in a graph of degree 2k:
/// 1 + sum_{j=1..m} 2k (2k-1)^{j-1}.
inline Rational ball_size_bound(std::uint32_t k, std::size_t m) {
  if (k < 1)
    throw InvalidArgument("arity must be positive");
  std::int64_t total = 1, shell = 2 * static_cast<std::int64_t>(k);
  for (std::size_t j = 1; j <= m; ++j) {
    total += shell;
    shell *= 2 * static_cast<std::int64_t>(k) - 1;
  }
  return Rational(total);
}

/// The alternative estimate 1 + k((2k-1)^{m-1} - 1)/(k-1) for the same ball;
/// undefined (nullopt) for k = 1 or m = 0.
inline std::optional<Rational> ball_size_estimate_alt(std::uint32_t k,
                                                      std::size_t m) {
  if (k <= 1 || m == 0)
    return std::nullopt;
  std::int64_t pw = 1;
  for (std::size_t j = 1; j < m; ++j)
    pw *= 2 * static_cast<std::int64_t>(k) - 1;
  return Rational(1) + Rational(static_cast<std::int64_t>(k) * (pw - 1),
                                static_cast<std::int64_t>(k) - 1);
}

/// Upper bound on |M*|: |M| <= eps * r * n points fail, each contributing at
/// most a ball of radius m.
inline Rational bad_set_bound(Rational eps, std::uint32_t k, std::size_t r,
                              std::size_t m, std::size_t n) {
  return eps * Rational(static_cast<std::int64_t>(r)) *
         Rational(static_cast<std::int64_t>(n)) * ball_size_bound(k, m);
}

} // namespace almostperm
