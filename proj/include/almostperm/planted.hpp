#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "equations.hpp"

namespace almostperm {

/// A finite group given by generating permutations, acting on itself by
/// right multiplication. `copies` disjoint copies of the regular action give
/// an exact solution of any relation the generators satisfy, on
/// copies * |G| points, with every point moved by every non-identity element.
struct RegularAction {
  /// Group elements in discovery order; elements.front() is the identity.
  std::vector<Permutation> elements;
  /// right[j][i]: index of elements[i] * generator j.
  std::vector<std::vector<std::size_t>> right;

  explicit RegularAction(const std::vector<Permutation> &generators) {
    if (generators.empty())
      throw InvalidArgument("need at least one generator");
    const std::size_t d = generators.front().degree();
    std::map<Permutation, std::size_t> index;
    elements.push_back(Permutation::identity(d));
    index.emplace(elements.front(), 0);
    right.assign(generators.size(), {});
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = 0; j < generators.size(); ++j) {
        Permutation g = compose(elements[i], generators[j]);
        auto [it, inserted] = index.emplace(g, elements.size());
        if (inserted)
          elements.push_back(std::move(g));
        right[j].push_back(it->second);
      }
  }

  std::size_t order() const { return elements.size(); }

  /// Generator j acting on `copies` disjoint copies of the group.
  PermTuple tuple(std::size_t copies) const {
    const std::size_t g = order();
    std::vector<Permutation> perms;
    for (const auto &r : right) {
      std::vector<Point> img(copies * g);
      for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < g; ++i)
          img[c * g + i] = static_cast<Point>(c * g + r[i]);
      perms.push_back(from_zero_based(std::move(img)));
    }
    return PermTuple(std::move(perms));
  }

  /// Right multiplication by element e as a permutation of `copies * |G|`
  /// points.
  Permutation element_action(std::size_t e, std::size_t copies) const {
    const std::size_t g = order();
    std::vector<Point> img(copies * g);
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t i = 0; i < g; ++i) {
        Permutation prod = compose(elements[i], elements[e]);
        auto pos = std::find(elements.begin(), elements.end(), prod);
        img[c * g + i] = static_cast<Point>(c * g + (pos - elements.begin()));
      }
    return from_zero_based(std::move(img));
  }
};

/// A finite presentation bundled with generators of a group satisfying it.
struct Preset {
  std::string name;
  EquationSystem system;
  std::vector<Permutation> generators;

  /// Planted exact solution on n points; n must be a multiple of |G|.
  PermTuple planted(std::size_t n) const {
    RegularAction act(generators);
    if (n == 0 || n % act.order() != 0)
      throw InvalidArgument("preset " + name + " needs n divisible by " +
                            std::to_string(act.order()));
    return act.tuple(n / act.order());
  }
};

/// `s3`: x1^2 = x2^2 = (x1 x2)^3 = 1 with two adjacent transpositions.
/// `cyclicP` (P >= 2): x1^P = 1 with a P-cycle.
inline Preset preset(const std::string &name) {
  if (name == "s3") {
    return {name,
            parse_system("x1^2 = 1\nx2^2 = 1\nx1 x2 x1 x2 x1 x2 = 1\n"),
            {from_cycles(3, {{1, 2}}), from_cycles(3, {{2, 3}})}};
  }
  if (name.rfind("cyclic", 0) == 0 && name.size() > 6) {
    long long p = 0;
    if (detail::parse_int(std::string_view(name).substr(6), p) && p >= 2 &&
        p <= 1000) {
      std::vector<Point> cycle(static_cast<std::size_t>(p));
      std::iota(cycle.begin(), cycle.end(), Point{1});
      return {name,
              parse_system("x1^" + std::to_string(p) + " = 1\n"),
              {from_cycles(static_cast<std::size_t>(p), {cycle})}};
    }
  }
  throw InvalidArgument("unknown preset '" + name + "'");
}

/// Redirects `count` images: each step picks a generator j and distinct
/// points a, b uniformly and exchanges (a)f_j with (b)f_j.
template <class Engine>
PermTuple corrupt(const PermTuple &t, std::size_t count, Engine &gen) {
  const std::size_t n = t.degree();
  std::vector<std::vector<Point>> imgs;
  for (const auto &f : t.perms()) {
    auto r = f.raw();
    imgs.emplace_back(r.begin(), r.end());
  }
  if (n >= 2)
    for (std::size_t c = 0; c < count; ++c) {
      auto j = uniform_below(gen, imgs.size());
      auto a = uniform_below(gen, n);
      auto b = uniform_below(gen, n - 1);
      if (b >= a)
        ++b;
      std::swap(imgs[j][a], imgs[j][b]);
    }
  std::vector<Permutation> perms;
  for (auto &v : imgs)
    perms.push_back(from_zero_based(std::move(v)));
  return PermTuple(std::move(perms));
}

} // namespace almostperm
