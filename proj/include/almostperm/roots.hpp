#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "permutation.hpp"
#include "surd.hpp"

namespace almostperm {

inline bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

/// Prime factors with multiplicity, in descending order.
inline std::vector<std::uint64_t> prime_factors_descending(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    while (p % d == 0) {
      out.push_back(d);
      p /= d;
    }
  if (p > 1)
    out.push_back(p);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace detail {

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
}

/// x in {1..r-1} with x*a = 1 (mod r); requires gcd(a, r) = 1 and r >= 2.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t r) {
  std::int64_t old_r = a % r, cur_r = r;
  std::int64_t old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    std::int64_t q = old_r / cur_r;
    std::int64_t t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1)
    throw InvalidArgument("not invertible");
  std::int64_t x = old_s % r;
  return x < 0 ? x + r : x;
}

} // namespace detail

/// Cycle-type bookkeeping of f relative to a prime p: the points on cycles of
/// length coprime to p, and for each k the number m_k of cycles of length
/// k*p together with its residue r_k = m_k mod p.
struct CycleTypeProfile {
  std::uint64_t p = 0;
  std::size_t degree = 0;
  /// Points lying on cycles whose length is coprime to p.
  std::size_t n0 = 0;
  /// k -> m_k, only for m_k != 0.
  std::map<std::size_t, std::size_t> counts;
  /// k -> r_k, same keys as `counts`.
  std::map<std::size_t, std::size_t> residues;

  /// S = {k : m_k != 0}.
  std::set<std::size_t> support() const {
    std::set<std::size_t> s;
    for (const auto &[k, m] : counts)
      s.insert(k);
    return s;
  }

  /// Number of k*p-cycles for cycle length `length` (0 unless p | length).
  std::size_t count_for_length(std::size_t length) const {
    if (length % p != 0)
      return 0;
    auto it = counts.find(length / p);
    return it == counts.end() ? 0 : it->second;
  }

  std::size_t residue_sum() const {
    std::size_t s = 0;
    for (const auto &[k, r] : residues)
      s += r;
    return s;
  }
};

inline CycleTypeProfile profile(const CycleDecomposition &d, std::uint64_t p) {
  detail::require_prime(p);
  CycleTypeProfile out;
  out.p = p;
  out.degree = d.degree;
  for (const auto &c : d.cycles) {
    if (c.size() % p == 0)
      ++out.counts[c.size() / p];
    else
      out.n0 += c.size();
  }
  for (const auto &[k, m] : out.counts)
    out.residues[k] = m % p;
  return out;
}

inline CycleTypeProfile profile(const Permutation &f, std::uint64_t p) {
  return profile(cycle_decomposition(f), p);
}

/// f has a p-th root iff for every k the number of k*p-cycles is a
/// multiple of p.
inline bool exact_root_exists(const Permutation &f, std::uint64_t p) {
  auto prof = profile(f, p);
  return prof.residue_sum() == 0;
}

namespace detail {

inline Permutation exact_root_from(const CycleDecomposition &d,
                                   std::uint64_t p) {
  const std::size_t n = d.degree;
  std::vector<Point> img(n);
  // Cycles of each k*p length, in canonical order, for grouping into blocks.
  std::map<std::size_t, std::vector<const std::vector<Point> *>> divisible;

  for (const auto &c : d.cycles) {
    const std::size_t len = c.size();
    if (len % p == 0) {
      divisible[len].push_back(&c);
      continue;
    }
    // C^alpha with alpha*p = 1 (mod len) satisfies (C^alpha)^p = C.
    std::size_t alpha =
        len == 1 ? 0
                 : static_cast<std::size_t>(inverse_mod(
                       static_cast<std::int64_t>(p % len),
                       static_cast<std::int64_t>(len)));
    for (std::size_t i = 0; i < len; ++i)
      img[c[i] - 1] = c[(i + alpha) % len] - 1;
  }

  for (const auto &[len, group] : divisible) {
    if (group.size() % p != 0)
      throw NoExactRoot("number of " + std::to_string(len) +
                        "-cycles is not divisible by " + std::to_string(p));
    // Interleave p cycles a^0..a^{p-1} of length len into one cycle of
    // length p*len whose position i*p + j holds a^j_i; its p-th power steps
    // i -> i+1 within each a^j.
    std::vector<Point> merged(p * len);
    for (std::size_t b = 0; b < group.size(); b += p) {
      for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < len; ++i)
          merged[i * p + j] = (*group[b + j])[i];
      for (std::size_t q = 0; q < merged.size(); ++q)
        img[merged[q] - 1] = merged[(q + 1) % merged.size()] - 1;
    }
  }
  return from_zero_based(std::move(img));
}

} // namespace detail

/// A permutation x with power(x, p) == f. Throws NoExactRoot when none exists.
inline Permutation exact_root(const Permutation &f, std::uint64_t p) {
  detail::require_prime(p);
  return detail::exact_root_from(cycle_decomposition(f), p);
}

/// Outcome of an approximate root computation.
struct ApproxRootResult {
  Permutation root;
  /// The permutation actually hit: power(root, p) == target exactly.
  Permutation target;
  /// h(f, target), exact.
  Rational defect;
  /// A-priori bound on the defect for this exponent and degree.
  SurdSum bound;
};

/// 2*sqrt(2)*(p-1)/sqrt(p*n), written as (p-1)*sqrt(8/(p*n)).
inline SurdSum prime_root_bound(std::uint64_t p, std::size_t n) {
  return SurdSum(Rational(static_cast<std::int64_t>(p) - 1),
                 Rational(8, static_cast<std::int64_t>(p * n)));
}

/// Approximate p-th root for prime p. For every k, the last r_k cycles of
/// length k*p (canonical order) lose their maximal point, which becomes fixed;
/// the result then satisfies the root criterion and its exact root is taken.
inline ApproxRootResult approx_root_prime(const Permutation &f,
                                          std::uint64_t p) {
  detail::require_prime(p);
  const std::size_t n = f.degree();
  CycleDecomposition d = cycle_decomposition(f);
  auto prof = profile(d, p);

  if (prof.residue_sum() != 0) {
    std::map<std::size_t, std::size_t> left = prof.residues; // keyed by k
    CycleDecomposition repaired{n, {}};
    repaired.cycles.reserve(d.cycles.size() + prof.residue_sum());
    // Walk backwards so "last r_k cycles" are the first ones met.
    std::vector<bool> shorten(d.cycles.size(), false);
    for (std::size_t i = d.cycles.size(); i-- > 0;) {
      const auto len = d.cycles[i].size();
      if (len % p != 0)
        continue;
      auto &r = left[len / p];
      if (r > 0) {
        shorten[i] = true;
        --r;
      }
    }
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
      if (!shorten[i]) {
        repaired.cycles.push_back(d.cycles[i]);
        continue;
      }
      std::vector<Point> c = d.cycles[i];
      auto max_it = std::max_element(c.begin(), c.end());
      Point dropped = *max_it;
      c.erase(max_it);
      repaired.cycles.push_back(std::move(c));
      repaired.cycles.push_back({dropped});
    }
    d = std::move(repaired);
  }

  Permutation target = from_cycles(d);
  Permutation root = detail::exact_root_from(d, p);
  Rational defect = hamming(f, target);
  return {std::move(root), std::move(target), defect, prime_root_bound(p, n)};
}

/// Approximate p-th root for any p >= 1, by chaining prime stages over the
/// prime factors of p in descending order. The reported bound accumulates as
/// sum_i (q_1 ... q_{i-1}) * bound(q_i).
inline ApproxRootResult approx_root(const Permutation &f, std::uint64_t p) {
  if (p == 0)
    throw InvalidArgument("exponent must be positive");
  if (p == 1)
    return {f, f, Rational(0), SurdSum()};

  Permutation current = f;
  SurdSum bound;
  std::uint64_t prefix = 1;
  for (auto q : prime_factors_descending(p)) {
    auto stage = approx_root_prime(current, q);
    bound = bound.plus_scaled(stage.bound,
                              Rational(static_cast<std::int64_t>(prefix)));
    prefix *= q;
    current = std::move(stage.root);
  }
  Permutation target = power(current, static_cast<std::int64_t>(p));
  Rational defect = hamming(f, target);
  return {std::move(current), std::move(target), defect, std::move(bound)};
}

} // namespace almostperm
