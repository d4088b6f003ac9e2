#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <almostperm/oracle.hpp>
#include <almostperm/planted.hpp>
#include <almostperm/stability.hpp>

using namespace almostperm;

namespace {

const EquationSystem &involution() {
  static const auto sys = parse_system("x1^2 = 1");
  return sys;
}

PermTuple single(const Permutation &f) { return PermTuple({f}); }

bool subset(const PointSet &a, const PointSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST(Neighborhood, RadiusZero) {
  auto t = single(from_cycles(6, {{1, 2, 3, 4, 5, 6}}));
  EXPECT_EQ(neighborhood(t, 4, 0), (PointSet{4}));
}

TEST(Neighborhood, IdentityHasNoEdges) {
  auto t = PermTuple({Permutation(5), Permutation(5)});
  for (Point a = 1; a <= 5; ++a)
    EXPECT_EQ(neighborhood(t, a, 7), (PointSet{a}));
}

TEST(Neighborhood, StepsBothWaysAlongCycle) {
  auto t = single(from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}}));
  EXPECT_EQ(neighborhood(t, 3, 1), (PointSet{2, 3, 4}));
  EXPECT_EQ(neighborhood(t, 1, 2), (PointSet{1, 2, 3, 6, 7}));
}

TEST(Neighborhood, PointOutOfRange) {
  auto t = single(Permutation(3));
  EXPECT_THROW(neighborhood(t, 0, 1), InvalidArgument);
  EXPECT_THROW(neighborhood(t, 4, 1), InvalidArgument);
}

TEST(FailingVertices, Examples) {
  EXPECT_TRUE(failing_vertices(involution(), single(Permutation(4))).empty());
  EXPECT_EQ(failing_vertices(involution(), single(from_cycles(3, {{1, 2, 3}}))),
            (PointSet{1, 2, 3}));
  EXPECT_TRUE(
      failing_vertices(involution(), single(from_cycles(5, {{1, 2}, {4, 5}})))
          .empty());
}

TEST(FailingVertices, SandwichesDefect) {
  auto sys = parse_system("x1^2 = 1\nx2^3 = 1\nx1 x2 = x2 x1\n");
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 40;
    PermTuple t({random_permutation(n, gen), random_permutation(n, gen)});
    auto d = defect(sys, t);
    Rational m(static_cast<std::int64_t>(failing_vertices(sys, t).size()),
               static_cast<std::int64_t>(n));
    EXPECT_LE(d, m);
    EXPECT_LE(m, Rational(3) * d);
  }
}

TEST(BadVertices, Examples) {
  EXPECT_TRUE(bad_vertices(involution(), single(Permutation(6)), 5).empty());
  EXPECT_EQ(bad_vertices(involution(), single(from_cycles(3, {{1, 2, 3}})), 1),
            (PointSet{1, 2, 3}));
  auto f = from_cycles(8, {{1, 2}, {3, 4, 5}});
  EXPECT_EQ(failing_vertices(involution(), single(f)), (PointSet{3, 4, 5}));
  EXPECT_EQ(bad_vertices(involution(), single(f), 1), (PointSet{3, 4, 5}));
}

TEST(BadVertices, MonotoneInRadius) {
  auto sys = parse_system("x1^2 = 1\nx2^2 = 1\nx1 x2 x1 x2 x1 x2 = 1\n");
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = corrupt(preset("s3").planted(120), 1 + gen() % 6, gen);
    auto failing = failing_vertices(sys, t);
    PointSet prev = bad_vertices(sys, t, 0);
    EXPECT_EQ(prev, failing);
    for (std::size_t m = 1; m < 6; ++m) {
      auto cur = bad_vertices(sys, t, m);
      EXPECT_TRUE(subset(prev, cur));
      prev = cur;
    }
  }
}

TEST(Repair, ExactSolutionUnchanged) {
  auto t = single(from_cycles(6, {{1, 2}, {3, 4}}));
  for (std::size_t m : {0, 1, 4}) {
    auto res = repair(involution(), t, m);
    EXPECT_EQ(res.repaired, t);
    EXPECT_EQ(res.max_distance, Rational(0));
    EXPECT_EQ(res.failing_count, 0u);
  }
}

TEST(Repair, FixesClosedBadCycle) {
  auto t = single(from_cycles(5, {{1, 2}, {3, 4, 5}}));
  auto res = repair(involution(), t, 1);
  EXPECT_EQ(res.repaired[0], from_cycles(5, {{1, 2}}));
  EXPECT_EQ(res.max_distance, Rational(3, 5));
  EXPECT_EQ(res.bad_count, 3u);
  EXPECT_TRUE(is_exact_solution(involution(), res.repaired));
}

TEST(Repair, WholeCycleFailingCollapsesToIdentity) {
  // Every point of a 6-cycle fails x^2 = 1, so the bad set is everything and
  // the repair is the identity even at radius 0.
  auto t = single(from_cycles(6, {{1, 2, 3, 4, 5, 6}}));
  auto res = repair(involution(), t, 0);
  EXPECT_TRUE(res.repaired[0].is_identity());
  EXPECT_EQ(res.max_distance, Rational(1));
}

TEST(Repair, NotClosedWhenRadiusTooSmall) {
  // x1 = x2 fails at 2 and 3 only; point 1 is good but maps to 2.
  auto sys = parse_system("x1 = x2");
  PermTuple t({from_cycles(3, {{1, 2, 3}}), from_cycles(3, {{1, 2}})});
  EXPECT_EQ(failing_vertices(sys, t), (PointSet{2, 3}));
  try {
    repair(sys, t, 0);
    FAIL();
  } catch (const RepairError &e) {
    EXPECT_EQ(e.kind(), RepairFailure::NotClosed);
  }
  auto res = repair(sys, t, 1);
  EXPECT_EQ(res.radius_used, 1u);
  EXPECT_TRUE(is_exact_solution(sys, res.repaired));
}

TEST(RepairAuto, ExactSolutionAtRadiusZero) {
  auto s3 = preset("s3");
  auto res = repair_auto(s3.system, s3.planted(60), 6);
  EXPECT_EQ(res.radius_used, 0u);
  EXPECT_EQ(res.max_distance, Rational(0));
}

TEST(RepairAuto, EscalatesRadius) {
  auto sys = parse_system("x1 = x2");
  PermTuple t({from_cycles(3, {{1, 2, 3}}), from_cycles(3, {{1, 2}})});
  EXPECT_EQ(repair_auto(sys, t, 5).radius_used, 1u);
  EXPECT_THROW(repair_auto(sys, t, 0), Exhausted);
}

TEST(RepairAuto, PlantedS3Corruptions) {
  auto s3 = preset("s3");
  std::mt19937_64 gen(15);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 600;
    auto t = corrupt(s3.planted(n), 1 + gen() % 30, gen);
    auto res = repair_auto(s3.system, t, 6);
    EXPECT_TRUE(is_exact_solution(s3.system, res.repaired));
    EXPECT_LE(res.failing_count, res.bad_count);
    EXPECT_LE(res.max_distance,
              Rational(static_cast<std::int64_t>(res.bad_count),
                       static_cast<std::int64_t>(n)));
    auto bound = bad_set_bound(defect(s3.system, t), 2, 3, res.radius_used, n);
    EXPECT_LE(Rational(static_cast<std::int64_t>(res.bad_count)), bound);

    // The good set is invariant under every generator.
    auto bad = bad_vertices(s3.system, t, res.radius_used);
    std::vector<char> is_bad(n + 1, 0);
    for (Point b : bad)
      is_bad[b] = 1;
    for (const auto &f : t.perms()) {
      auto finv = inverse(f);
      for (Point a = 1; a <= n; ++a)
        if (!is_bad[a]) {
          EXPECT_FALSE(is_bad[f(a)]);
          EXPECT_FALSE(is_bad[finv(a)]);
        }
    }
  }
}

TEST(RepairAuto, BaumslagSolitarAffineTupleNeedsLargeRadius) {
  // x1: t -> t+1, x2: t -> 3t/2 on Z/N exactly satisfies the relation; one
  // swapped image of x2 spreads failures that only a radius near the graph
  // diameter can enclose.
  const std::size_t N = 2003;
  std::vector<Point> x1(N), x2(N);
  const std::uint64_t half = (N + 1) / 2;
  for (std::size_t t = 0; t < N; ++t) {
    x1[t] = static_cast<Point>((t + 1) % N);
    x2[t] = static_cast<Point>((3 * half % N) * t % N);
  }
  std::swap(x2[5], x2[700]);
  PermTuple tup({from_zero_based(x1), from_zero_based(x2)});
  auto sys = parse_system("x1^3 = x2^-1 x1^2 x2");
  EXPECT_GT(defect(sys, tup), Rational(0));
  EXPECT_THROW(repair_auto(sys, tup, 3), Exhausted);
}

TEST(BadSetBound, Examples) {
  EXPECT_EQ(bad_set_bound(Rational(0), 2, 3, 4, 100), Rational(0));
  EXPECT_EQ(bad_set_bound(Rational(1, 10), 2, 3, 0, 100), Rational(30));
  EXPECT_EQ(ball_size_bound(2, 2), Rational(17));
  EXPECT_EQ(bad_set_bound(Rational(1, 10), 2, 3, 2, 100), Rational(17 * 30));
  EXPECT_EQ(ball_size_bound(1, 3), Rational(7));
  EXPECT_FALSE(ball_size_estimate_alt(1, 3).has_value());
  EXPECT_EQ(*ball_size_estimate_alt(2, 2), Rational(5));
}

TEST(BadSetBound, BallBoundDominatesActualBalls) {
  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 50 + gen() % 200;
    const std::uint32_t k = 1 + gen() % 3;
    std::vector<Permutation> ps;
    for (std::uint32_t i = 0; i < k; ++i)
      ps.push_back(random_permutation(n, gen));
    PermTuple t(ps);
    const std::size_t m = gen() % 4;
    auto ball = neighborhood(t, static_cast<Point>(1 + gen() % n), m);
    EXPECT_LE(Rational(static_cast<std::int64_t>(ball.size())),
              ball_size_bound(k, m));
  }
}

TEST(OracleSandwich, NearestSolutionNoFartherThanRepair) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &f : enumerate_permutations(n)) {
      auto t = single(f);
      auto [witness, dist] = nearest_exact_solution(involution(), t);
      auto res = repair_auto(involution(), t, 4);
      EXPECT_LE(dist, res.max_distance);
    }
}
