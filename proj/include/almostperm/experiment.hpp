#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "planted.hpp"
#include "roots.hpp"
#include "stability.hpp"

namespace almostperm {

/// Engine for one sample of one grid point. Depends only on its arguments,
/// so rows are reproducible regardless of evaluation order.
inline std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t point,
                                     std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(point),
                    static_cast<std::uint32_t>(sample),
                    static_cast<std::uint32_t>(sample >> 32)};
  return std::mt19937_64(seq);
}

/// Accepts `3`, `-2/7` and plain decimals such as `0.05` (exactly 1/20).
inline Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  long long num = 0, den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!detail::parse_int(text.substr(0, slash), num) ||
        !detail::parse_int(text.substr(slash + 1), den) || den == 0)
      throw ParseError("bad rational '" + std::string(text) + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  if (dot != std::string_view::npos) {
    auto frac = text.substr(dot + 1);
    if (frac.size() > 17)
      throw ParseError("too many decimals in '" + std::string(text) + "'");
    digits += std::string(frac);
    for (std::size_t i = 0; i < frac.size(); ++i)
      den *= 10;
  }
  if (digits.empty() || digits == "-" || digits == "+" ||
      !detail::parse_int(digits, num))
    throw ParseError("bad number '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::size_t ceil_times(const Rational &eps, std::size_t n) {
  Rational x = eps * Rational(static_cast<std::int64_t>(n));
  return static_cast<std::size_t>((x.num() + x.den() - 1) / x.den());
}

struct RootsRow {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  Rational max;
  SurdSum bound;
  bool within_bound = true;
};

inline RootsRow roots_point(std::uint64_t p, std::size_t n,
                            std::size_t samples, std::uint64_t seed,
                            std::uint64_t point) {
  RootsRow row{p, n, samples, seed, 0.0, Rational(0), {}, true};
  double total = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    auto gen = sample_engine(seed, point, s);
    auto f = random_permutation(n, gen);
    auto res = approx_root(f, p);
    total += res.defect.to_double();
    row.max = std::max(row.max, res.defect);
    row.bound = res.bound;
    row.within_bound = row.within_bound && res.defect <= res.bound;
  }
  if (samples == 0)
    row.bound = approx_root(Permutation(n), p).bound;
  row.mean = samples ? total / static_cast<double>(samples) : 0.0;
  return row;
}

inline std::vector<RootsRow> roots_experiment(std::uint64_t p,
                                              const std::vector<std::size_t> &ns,
                                              std::size_t samples,
                                              std::uint64_t seed) {
  if (ns.empty())
    throw InvalidArgument("empty n grid");
  std::vector<RootsRow> rows;
  for (std::size_t i = 0; i < ns.size(); ++i)
    rows.push_back(roots_point(p, ns[i], samples, seed, i));
  return rows;
}

inline std::string roots_csv(const std::vector<RootsRow> &rows) {
  std::string out = "p,n,samples,seed,max_exact,mean,max,bound\n";
  for (const auto &r : rows)
    out += std::to_string(r.p) + "," + std::to_string(r.n) + "," +
           std::to_string(r.samples) + "," + std::to_string(r.seed) + "," +
           r.max.str() + "," + Rational::format_decimal(r.mean, 10) + "," +
           Rational::format_decimal(r.max.to_double(), 10) + "," +
           r.bound.decimal(10) + "\n";
  return out;
}

/// One corrupted planted solution and its repair.
struct StabilityTrial {
  PermTuple corrupted;
  Rational defect;
  /// Empty when every radius up to m_max failed.
  std::optional<RepairResult> repair;
  /// bad_set_bound(defect, k, r, radius_used, n) when repair succeeded.
  Rational bound;
};

template <class Engine>
StabilityTrial stability_trial(const Preset &pre, std::size_t n,
                               std::size_t corruptions, std::size_t m_max,
                               Engine &gen) {
  auto t = corrupt(pre.planted(n), corruptions, gen);
  StabilityTrial trial{t, defect(pre.system, t), std::nullopt, Rational(0)};
  try {
    trial.repair = repair_auto(pre.system, t, m_max);
    trial.bound = bad_set_bound(trial.defect, pre.system.arity,
                                pre.system.relations.size(),
                                trial.repair->radius_used, n);
  } catch (const Exhausted &) {
  }
  return trial;
}

struct StabilityRow {
  std::string preset;
  std::size_t n = 0;
  Rational eps;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t corruptions = 0;
  std::size_t max_radius = 0;
  std::size_t exhausted = 0;
  double mean = 0;
  Rational max;
  Rational bound;
};

inline std::vector<StabilityRow>
stability_experiment(const std::string &preset_name, std::size_t n,
                     const std::vector<Rational> &eps_grid,
                     std::size_t samples, std::uint64_t seed,
                     std::size_t m_max) {
  if (eps_grid.empty())
    throw InvalidArgument("empty eps grid");
  const Preset pre = preset(preset_name);
  std::vector<StabilityRow> rows;
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    StabilityRow row;
    row.preset = preset_name;
    row.n = n;
    row.eps = eps_grid[i];
    row.samples = samples;
    row.seed = seed;
    row.corruptions = ceil_times(eps_grid[i], n);
    double total = 0;
    std::size_t ok = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      auto gen = sample_engine(seed, i, s);
      auto trial = stability_trial(pre, n, row.corruptions, m_max, gen);
      if (!trial.repair) {
        ++row.exhausted;
        continue;
      }
      ++ok;
      total += trial.repair->max_distance.to_double();
      row.max = std::max(row.max, trial.repair->max_distance);
      row.bound = std::max(row.bound,
                           trial.bound / Rational(static_cast<std::int64_t>(n)));
      row.max_radius = std::max(row.max_radius, trial.repair->radius_used);
    }
    row.mean = ok ? total / static_cast<double>(ok) : 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string stability_csv(const std::vector<StabilityRow> &rows) {
  std::string out = "preset,n,eps,samples,seed,corruptions,max_radius,"
                    "exhausted,max_exact,mean,max,bound\n";
  for (const auto &r : rows)
    out += r.preset + "," + std::to_string(r.n) + "," + r.eps.str() + "," +
           std::to_string(r.samples) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.corruptions) + "," + std::to_string(r.max_radius) +
           "," + std::to_string(r.exhausted) + "," + r.max.str() + "," +
           Rational::format_decimal(r.mean, 10) + "," +
           Rational::format_decimal(r.max.to_double(), 10) + "," +
           Rational::format_decimal(r.bound.to_double(), 10) + "\n";
  return out;
}

} // namespace almostperm
