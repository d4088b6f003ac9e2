#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "equations.hpp"

namespace almostperm {

/// Exhaustive searches are refused above these sizes unless the caller
/// raises the cap explicitly.
struct OracleCaps {
  std::size_t max_degree = 8;
  /// Degree and arity limits for nearest_exact_solution.
  std::size_t max_tuple_degree = 5;
  std::size_t max_tuple_arity = 2;
};

/// All n! permutations of degree n in lexicographic order of their image
/// sequences, starting at the identity. Single pass, single consumer.
class PermutationEnumerator {
public:
  explicit PermutationEnumerator(std::size_t n, OracleCaps caps = {})
      : images_(n) {
    if (n == 0)
      throw InvalidArgument("permutation degree must be positive");
    if (n > caps.max_degree)
      throw CapExceeded("enumeration of S_" + std::to_string(n) +
                        " exceeds cap " + std::to_string(caps.max_degree));
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// The next permutation, or nullopt once all have been produced.
  std::optional<Permutation> next() {
    if (done_)
      return std::nullopt;
    Permutation out = from_zero_based(images_);
    done_ = !std::next_permutation(images_.begin(), images_.end());
    return out;
  }

  template <class Fn> void for_each(Fn &&fn) {
    while (auto f = next())
      fn(*f);
  }

private:
  std::vector<Point> images_;
  bool done_ = false;
};

inline std::vector<Permutation> enumerate_permutations(std::size_t n,
                                                       OracleCaps caps = {}) {
  std::vector<Permutation> out;
  PermutationEnumerator(n, caps).for_each(
      [&](const Permutation &f) { out.push_back(f); });
  return out;
}

/// First x in enumeration order with x^p = f, if any.
inline std::optional<Permutation>
brute_exact_root(const Permutation &f, std::int64_t p, OracleCaps caps = {}) {
  PermutationEnumerator e(f.degree(), caps);
  while (auto x = e.next())
    if (power(*x, p) == f)
      return x;
  return std::nullopt;
}

/// An exact solution of `sys` minimising max_i h(t_i, s_i), with ties broken
/// by enumeration order, together with that minimal distance.
inline std::pair<PermTuple, Rational>
nearest_exact_solution(const EquationSystem &sys, const PermTuple &t,
                       OracleCaps caps = {}) {
  const std::size_t n = t.degree(), k = t.size();
  detail::check_arity(sys.arity, t);
  if (n > caps.max_tuple_degree || k > caps.max_tuple_arity)
    throw CapExceeded("tuple search over (S_" + std::to_string(n) + ")^" +
                      std::to_string(k) + " exceeds cap");
  OracleCaps inner = caps;
  inner.max_degree = std::max(inner.max_degree, n);
  const auto all = enumerate_permutations(n, inner);

  // Odometer over all^k; the first coordinate varies slowest.
  std::vector<std::size_t> idx(k, 0);
  std::optional<std::pair<PermTuple, Rational>> best;
  while (true) {
    std::vector<Permutation> cand;
    Rational dist(0);
    for (std::size_t i = 0; i < k; ++i) {
      cand.push_back(all[idx[i]]);
      dist = std::max(dist, hamming(t[i], cand.back()));
    }
    if (!best || dist < best->second) {
      PermTuple tuple(std::move(cand));
      if (is_exact_solution(sys, tuple))
        best.emplace(std::move(tuple), dist);
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < all.size())
        break;
      idx[pos] = 0;
      if (pos == 0)
        return *best; // the identity tuple is always a solution
    }
  }
}

} // namespace almostperm
