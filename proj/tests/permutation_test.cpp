#include <gtest/gtest.h>

#include <map>
#include <random>

#include <almostperm/permutation.hpp>

#include "naive.hpp"

using namespace almostperm;

namespace {

naive::Images zero_based(const Permutation &f) {
  auto r = f.raw();
  return {r.begin(), r.end()};
}

} // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), InvalidArgument);
  EXPECT_THROW(Permutation::from_images({1, 4, 2}), InvalidArgument);
  EXPECT_THROW(Permutation(0), InvalidArgument);
}

TEST(Compose, IdentityIsNeutral) {
  auto f = from_cycles(4, {{1, 3, 4}});
  EXPECT_EQ(compose(Permutation(4), f), f);
  EXPECT_EQ(compose(f, Permutation(4)), f);
}

TEST(Compose, RightActionOrder) {
  // (1 2 3) then (1 2): 1->2->1, 2->3->3, 3->1->2, i.e. (2 3).
  auto f = from_cycles(3, {{1, 2, 3}});
  auto g = from_cycles(3, {{1, 2}});
  EXPECT_EQ(zero_based(compose(f, g)),
            naive::compose(naive::from_cycles(3, {{1, 2, 3}}),
                           naive::from_cycles(3, {{1, 2}})));
  EXPECT_EQ(compose(f, g), from_cycles(3, {{2, 3}}));
}

TEST(Compose, DegreeMismatch) {
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), DegreeMismatch);
  EXPECT_THROW(hamming(Permutation(3), Permutation(4)), DegreeMismatch);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Permutation(5)), Permutation(5));
  EXPECT_EQ(inverse(from_cycles(3, {{1, 2, 3}})), from_cycles(3, {{1, 3, 2}}));
  EXPECT_EQ(inverse(from_cycles(3, {{1, 2}})), from_cycles(3, {{1, 2}}));
  auto f = from_cycles(6, {{1, 5, 2}, {3, 6}});
  EXPECT_TRUE(compose(f, inverse(f)).is_identity());
  EXPECT_TRUE(compose(inverse(f), f).is_identity());
}

TEST(Power, Examples) {
  auto f = from_cycles(4, {{1, 2, 3, 4}});
  EXPECT_EQ(power(f, 0), Permutation(4));
  EXPECT_EQ(power(f, 1), f);
  EXPECT_EQ(power(f, 2), from_cycles(4, {{1, 3}, {2, 4}}));
  EXPECT_EQ(power(f, -1), inverse(f));
}

TEST(Power, MatchesRepeatedComposition) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = random_permutation(1 + trial % 12, gen);
    unsigned e = static_cast<unsigned>(gen() % 30);
    EXPECT_EQ(zero_based(power(f, e)), naive::power(zero_based(f), e));
    EXPECT_EQ(power(f, -static_cast<std::int64_t>(e)), inverse(power(f, e)));
  }
}

TEST(Hamming, Examples) {
  auto f = from_cycles(5, {{2, 4}});
  EXPECT_EQ(hamming(f, f), Rational(0));
  EXPECT_EQ(hamming(Permutation(5), from_cycles(5, {{1, 2}})), Rational(2, 5));
  EXPECT_EQ(hamming(from_cycles(3, {{1, 2, 3}}), from_cycles(3, {{1, 3, 2}})),
            Rational(1));
}

TEST(CycleDecomposition, Examples) {
  auto id = cycle_decomposition(Permutation(4));
  ASSERT_EQ(id.cycles.size(), 4u);
  for (const auto &c : id.cycles)
    EXPECT_EQ(c.size(), 1u);

  auto d = cycle_decomposition(Permutation::from_images({2, 3, 1, 5, 4}));
  EXPECT_EQ(d.cycles, (std::vector<std::vector<Point>>{{1, 2, 3}, {4, 5}}));

  std::vector<Point> full(9);
  std::iota(full.begin(), full.end(), Point{1});
  auto c = cycle_decomposition(from_cycles(9, {full}));
  ASSERT_EQ(c.cycles.size(), 1u);
  EXPECT_EQ(c.cycles[0], full);
}

TEST(CycleDecomposition, CanonicalStart) {
  // Written starting anywhere, canonical form starts at the minimum.
  auto d = cycle_decomposition(from_cycles(6, {{5, 2, 6}, {4, 3}}));
  EXPECT_EQ(d.cycles,
            (std::vector<std::vector<Point>>{{1}, {2, 6, 5}, {3, 4}}));
}

TEST(FromCycles, Examples) {
  EXPECT_EQ(from_cycles(3, {}), Permutation(3));
  EXPECT_EQ(from_cycles(5, {{1, 2, 3}, {4, 5}}).images(),
            (std::vector<Point>{2, 3, 1, 5, 4}));
  EXPECT_THROW(from_cycles(3, {{1, 2}, {2, 3}}), InvalidArgument);
  EXPECT_THROW(from_cycles(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(from_cycles(3, {{1, 4}}), InvalidArgument);
}

TEST(FromCycles, RoundTripsRandom) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 500; ++trial) {
    auto f = random_permutation(1 + trial % 40, gen);
    EXPECT_EQ(from_cycles(cycle_decomposition(f)), f);
  }
}

TEST(RandomPermutation, DegreeOneIsIdentity) {
  std::mt19937_64 gen(1);
  EXPECT_EQ(random_permutation(1, gen), Permutation(1));
}

TEST(RandomPermutation, DeterministicForSeed) {
  std::mt19937_64 a(42), b(42);
  EXPECT_EQ(random_permutation(100, a), random_permutation(100, b));
}

TEST(RandomPermutation, UniformOverS4) {
  constexpr int samples = 100000;
  std::mt19937_64 gen(2024);
  std::map<std::vector<Point>, int> freq;
  for (int i = 0; i < samples; ++i)
    ++freq[random_permutation(4, gen).images()];
  ASSERT_EQ(freq.size(), 24u);
  const double p = 1.0 / 24;
  const double sigma = std::sqrt(p * (1 - p) / samples);
  for (const auto &[img, count] : freq)
    EXPECT_NEAR(static_cast<double>(count) / samples, p, 3 * sigma);
}

class MetricProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(MetricProperties, AxiomsAndInvariance) {
  const std::size_t n = GetParam();
  std::mt19937_64 gen(n);
  for (int trial = 0; trial < 2000; ++trial) {
    auto f = random_permutation(n, gen), g = random_permutation(n, gen);
    auto k = random_permutation(n, gen);
    auto u = random_permutation(n, gen), v = random_permutation(n, gen);
    EXPECT_EQ(hamming(f, g) == 0, f == g);
    EXPECT_EQ(hamming(f, g), hamming(g, f));
    EXPECT_LE(hamming(f, k), hamming(f, g) + hamming(g, k));
    EXPECT_EQ(hamming(u * f * v, u * g * v), hamming(f, g));
    auto m = static_cast<std::int64_t>(1 + gen() % 20);
    EXPECT_LE(hamming(power(f, m), power(g, m)), Rational(m) * hamming(f, g));
  }
}

TEST_P(MetricProperties, ProductsAccumulateDistance) {
  const std::size_t n = GetParam();
  std::mt19937_64 gen(100 + n);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = 1 + gen() % 8;
    Permutation xs(n), ys(n);
    Rational sum(0);
    for (std::size_t i = 0; i < r; ++i) {
      auto x = random_permutation(n, gen);
      // Mix of near and far pairs.
      auto y = gen() % 2 ? compose(x, from_cycles(n, {{1, static_cast<Point>(n)}}))
                         : random_permutation(n, gen);
      xs = xs * x;
      ys = ys * y;
      sum += hamming(x, y);
    }
    EXPECT_LE(hamming(xs, ys), sum);
  }
}

INSTANTIATE_TEST_SUITE_P(Degrees, MetricProperties, ::testing::Values(5, 50));
