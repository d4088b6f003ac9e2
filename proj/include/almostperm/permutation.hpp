#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace almostperm {

/// A point of {1..n}. Points are 1-based everywhere in the public API.
using Point = std::uint32_t;

/// A permutation of {1..n}, acting on the right: `f(a)` is the image (a)f.
///
/// Composition follows the same convention, so `compose(f, g)` maps
/// a to ((a)f)g, i.e. "first f, then g".
class Permutation {
public:
  /// The identity of degree n.
  explicit Permutation(std::size_t n = 1) : images_(n) {
    if (n == 0)
      throw InvalidArgument("permutation degree must be positive");
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  static Permutation identity(std::size_t n) { return Permutation(n); }

  /// From a 1-based image sequence; throws unless it is a bijection of {1..n}.
  static Permutation from_images(std::span<const Point> images) {
    const std::size_t n = images.size();
    if (n == 0)
      throw InvalidArgument("permutation degree must be positive");
    std::vector<Point> zero(n);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Point v = images[i];
      if (v < 1 || v > n)
        throw InvalidArgument("image " + std::to_string(v) + " out of range");
      if (seen[v - 1]++)
        throw InvalidArgument("image " + std::to_string(v) + " repeated");
      zero[i] = v - 1;
    }
    return Permutation(std::move(zero), Unchecked{});
  }

  static Permutation from_images(std::initializer_list<Point> images) {
    return from_images(std::span<const Point>(images.begin(), images.size()));
  }

  std::size_t degree() const { return images_.size(); }

  /// (a)f for a 1-based point.
  Point operator()(Point a) const { return images_[a - 1] + 1; }

  /// 1-based image sequence.
  std::vector<Point> images() const {
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = images_[i] + 1;
    return out;
  }

  /// 0-based image sequence, for tight loops.
  std::span<const Point> raw() const & { return images_; }
  std::span<const Point> raw() const && = delete;

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> zero_based, Unchecked)
      : images_(std::move(zero_based)) {}

  friend Permutation compose(const Permutation &, const Permutation &);
  friend Permutation inverse(const Permutation &);
  friend Permutation power(const Permutation &, std::int64_t);
  friend Permutation from_zero_based(std::vector<Point>);

  std::vector<Point> images_;
};

/// Wraps a 0-based image vector that the caller guarantees is a bijection.
inline Permutation from_zero_based(std::vector<Point> images) {
  return Permutation(std::move(images), Permutation::Unchecked{});
}

/// a -> ((a)f)g
inline Permutation compose(const Permutation &f, const Permutation &g) {
  if (f.degree() != g.degree())
    throw DegreeMismatch(f.degree(), g.degree());
  std::vector<Point> out(f.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = g.images_[f.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation &f, const Permutation &g) {
  return compose(f, g);
}

inline Permutation inverse(const Permutation &f) {
  std::vector<Point> out(f.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[f.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

/// e-fold composition; negative exponents give powers of the inverse.
/// Runs in O(n) by rotating along each cycle.
inline Permutation power(const Permutation &f, std::int64_t e) {
  const std::size_t n = f.degree();
  std::vector<Point> out(n);
  std::vector<char> seen(n, 0);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    cycle.clear();
    for (Point a = static_cast<Point>(start); !seen[a]; a = f.images_[a]) {
      seen[a] = 1;
      cycle.push_back(a);
    }
    const auto len = static_cast<std::int64_t>(cycle.size());
    std::int64_t shift = e % len;
    if (shift < 0)
      shift += len;
    for (std::int64_t i = 0; i < len; ++i)
      out[cycle[i]] = cycle[(i + shift) % len];
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

/// Number of points where f and g disagree.
inline std::size_t disagreements(const Permutation &f, const Permutation &g) {
  if (f.degree() != g.degree())
    throw DegreeMismatch(f.degree(), g.degree());
  auto a = f.raw(), b = g.raw();
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    count += a[i] != b[i];
  return count;
}

/// Normalized Hamming distance |{a : (a)f != (a)g}| / n, exact.
inline Rational hamming(const Permutation &f, const Permutation &g) {
  return Rational(static_cast<std::int64_t>(disagreements(f, g)),
                  static_cast<std::int64_t>(f.degree()));
}

/// Canonical cycle form: each cycle starts at its minimal point, cycles are
/// ordered by minimal point, and fixed points appear as length-1 cycles.
struct CycleDecomposition {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> cycles;

  friend bool operator==(const CycleDecomposition &,
                         const CycleDecomposition &) = default;
};

inline CycleDecomposition cycle_decomposition(const Permutation &f) {
  const std::size_t n = f.degree();
  auto img = f.raw();
  CycleDecomposition out{n, {}};
  std::vector<char> seen(n, 0);
  // Scanning starts in increasing order makes each start the cycle minimum.
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    std::vector<Point> cycle;
    for (Point a = static_cast<Point>(start); !seen[a]; a = img[a]) {
      seen[a] = 1;
      cycle.push_back(a + 1);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

/// Builds the permutation of degree n with the given disjoint cycles;
/// points not mentioned are fixed.
inline Permutation from_cycles(std::size_t n,
                               const std::vector<std::vector<Point>> &cycles) {
  if (n == 0)
    throw InvalidArgument("permutation degree must be positive");
  std::vector<Point> out(n);
  std::iota(out.begin(), out.end(), Point{0});
  std::vector<char> used(n, 0);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a < 1 || a > n)
        throw InvalidArgument("point " + std::to_string(a) + " out of range");
      if (used[a - 1]++)
        throw InvalidArgument("point " + std::to_string(a) + " repeated");
      out[a - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return from_zero_based(std::move(out));
}

inline Permutation from_cycles(const CycleDecomposition &d) {
  return from_cycles(d.degree, d.cycles);
}

/// Unbiased draw from {0, ..., bound-1} using rejection on a 64-bit engine.
/// Written out rather than using std::uniform_int_distribution so that
/// sampled sequences are identical across standard library implementations.
template <class Engine>
  requires std::uniform_random_bit_generator<Engine> &&
           (Engine::min() == 0) &&
           (Engine::max() == std::numeric_limits<std::uint64_t>::max())
std::uint64_t uniform_below(Engine &gen, std::uint64_t bound) {
  if (bound <= 1)
    return 0;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % bound;
}

/// Uniform random permutation by Fisher-Yates.
template <class Engine>
Permutation random_permutation(std::size_t n, Engine &gen) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = n; i > 1; --i) {
    auto j = uniform_below(gen, i);
    std::swap(img[i - 1], img[j]);
  }
  return from_zero_based(std::move(img));
}

} // namespace almostperm
