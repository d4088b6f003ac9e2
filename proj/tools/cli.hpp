#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <almostperm/almostperm.hpp>

namespace almostperm::cli {

/// Process exit statuses.
enum Status : int {
  kOk = 0,
  kUsage = 1,
  kNoExactRoot = 2,
  kExhausted = 3,
};

namespace detail {

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string &path, const std::string &text,
                         std::ostream &out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw Error("cannot write '" + path + "'");
  f << text;
}

inline std::string exact(const Rational &r) {
  return r.str() + " (" + r.decimal() + ")";
}

inline std::string exact(const SurdSum &s) {
  return s.str() + " (" + s.decimal() + ")";
}

/// Prefixes parse errors with the file they came from.
template <class Fn> auto parse_file(const std::string &path, Fn &&parse) {
  auto text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

} // namespace detail

/// Runs the command line; all output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"Exact and approximate solutions of equations in permutations"};
  app.require_subcommand(1);

  std::string format = "oneline";
  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", format, "Output permutation format")
        ->check(CLI::IsMember({"oneline", "cycles"}));
  };

  // root exact|approx
  auto *root = app.add_subcommand("root", "p-th roots of a permutation");
  root->require_subcommand(1);
  std::uint64_t p = 0;
  std::string in_path, out_path, target_path;
  auto *root_exact = root->add_subcommand("exact", "Exact p-th root (p prime)");
  auto *root_approx =
      root->add_subcommand("approx", "Approximate p-th root (any p >= 1)");
  for (auto *cmd : {root_exact, root_approx}) {
    cmd->add_option("--p", p, "Exponent")->required();
    cmd->add_option("--in", in_path, "Permutation file")->required();
    cmd->add_option("--out", out_path, "Where to write the root (default stdout)");
    add_format(cmd);
  }
  root_approx->add_option("--out-target", target_path,
                          "Where to write the repaired target");

  // check / repair
  std::string system_path, perms_path;
  std::size_t m_max = 6;
  auto *check = app.add_subcommand("check", "Defect of a tuple on a system");
  auto *repair_cmd =
      app.add_subcommand("repair", "Repair an eps-solution into an exact one");
  for (auto *cmd : {check, repair_cmd}) {
    cmd->add_option("--system", system_path, "Relation file")->required();
    cmd->add_option("--perms", perms_path, "Tuple file")->required();
  }
  repair_cmd->add_option("--m-max", m_max, "Largest radius to try");
  repair_cmd->add_option("--out", out_path,
                         "Where to write the repaired tuple (default stdout)");
  add_format(repair_cmd);

  // experiment roots|stability
  auto *experiment =
      app.add_subcommand("experiment", "Reproducible experiments (CSV)");
  experiment->require_subcommand(1);
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<std::size_t> n_grid;
  auto *exp_roots = experiment->add_subcommand("roots", "Approximate roots");
  exp_roots->add_option("--p", p, "Exponent")->required();
  exp_roots->add_option("--n", n_grid, "Degrees (comma separated)")
      ->required()
      ->delimiter(',');
  std::size_t n_single = 0;
  std::string preset_name;
  std::vector<std::string> eps_text;
  auto *exp_stab =
      experiment->add_subcommand("stability", "Repair of corrupted solutions");
  exp_stab->add_option("--preset", preset_name, "s3 or cyclicP")->required();
  exp_stab->add_option("--n", n_single, "Degree")->required();
  exp_stab->add_option("--eps", eps_text, "Corruption rates (comma separated)")
      ->required()
      ->delimiter(',');
  exp_stab->add_option("--m-max", m_max, "Largest radius to try");
  for (auto *cmd : {exp_roots, exp_stab}) {
    cmd->add_option("--samples", samples, "Samples per grid point")->required();
    cmd->add_option("--seed", seed, "Random seed")->required();
  }

  // represent
  std::string table_path, phi_path, eps_str = "0", alpha_str = "0";
  auto *represent = app.add_subcommand(
      "represent", "Check an (F, eps, alpha)-representation");
  represent->add_option("--table", table_path, "Partial product table")
      ->required();
  represent->add_option("--phi", phi_path, "Labeled tuple file")->required();
  represent->add_option("--eps", eps_str, "Multiplicativity threshold");
  represent->add_option("--alpha", alpha_str, "Separation threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  const PermFormat fmt =
      format == "cycles" ? PermFormat::Cycles : PermFormat::OneLine;

  try {
    if (root_exact->parsed()) {
      auto f = detail::parse_file(in_path, parse_permutation);
      try {
        detail::write_output(out_path, render_permutation(exact_root(f, p), fmt),
                             out);
      } catch (const NoExactRoot &e) {
        err << "no exact root: " << e.what() << "\n";
        return kNoExactRoot;
      }
      return kOk;
    }

    if (root_approx->parsed()) {
      auto f = detail::parse_file(in_path, parse_permutation);
      auto res = approx_root(f, p);
      detail::write_output(out_path, render_permutation(res.root, fmt), out);
      if (!target_path.empty())
        detail::write_output(target_path, render_permutation(res.target, fmt),
                             out);
      out << "defect: " << detail::exact(res.defect) << "\n";
      out << "bound: " << detail::exact(res.bound) << "\n";
      return kOk;
    }

    if (check->parsed() || repair_cmd->parsed()) {
      auto sys = detail::parse_file(system_path, parse_system);
      auto t = detail::parse_file(perms_path, parse_tuple);
      auto per = relation_defects(sys, t);
      Rational eps(0);
      for (const auto &d : per)
        eps = std::max(eps, d);

      if (check->parsed()) {
        out << "defect: " << detail::exact(eps) << "\n";
        for (std::size_t i = 0; i < per.size(); ++i)
          out << "relation " << i + 1 << ": " << sys.relations[i].lhs.str()
              << " = " << sys.relations[i].rhs.str() << "  "
              << detail::exact(per[i]) << "\n";
        return kOk;
      }

      RepairResult res = repair_auto(sys, t, m_max);
      const std::size_t n = t.degree();
      const auto r = sys.relations.size();
      const auto nn = Rational(static_cast<std::int64_t>(n));
      out << "defect: " << detail::exact(eps) << "\n";
      out << "radius_used: " << res.radius_used << "\n";
      out << "failing: " << res.failing_count << " (bound eps*r*n = "
          << detail::exact(eps * Rational(static_cast<std::int64_t>(r)) * nn)
          << "; eps*k*n = "
          << detail::exact(eps * Rational(static_cast<std::int64_t>(sys.arity)) *
                           nn)
          << ")\n";
      out << "bad: " << res.bad_count << " (bound "
          << detail::exact(bad_set_bound(eps, sys.arity, r, res.radius_used, n))
          << ")\n";
      out << "ball_size: " << ball_size_bound(sys.arity, res.radius_used).str();
      if (auto alt = ball_size_estimate_alt(sys.arity, res.radius_used))
        out << " (alternative estimate " << detail::exact(*alt) << ")";
      out << "\n";
      for (std::size_t i = 0; i < res.distances.size(); ++i)
        out << "distance x" << i + 1 << ": " << detail::exact(res.distances[i])
            << "\n";
      out << "max_distance: " << detail::exact(res.max_distance) << "\n";
      detail::write_output(out_path, render_tuple(res.repaired, fmt), out);
      return kOk;
    }

    if (exp_roots->parsed()) {
      out << roots_csv(roots_experiment(p, n_grid, samples, seed));
      return kOk;
    }

    if (exp_stab->parsed()) {
      std::vector<Rational> eps_grid;
      for (const auto &e : eps_text)
        eps_grid.push_back(parse_rational(e));
      out << stability_csv(stability_experiment(preset_name, n_single, eps_grid,
                                                samples, seed, m_max));
      return kOk;
    }

    if (represent->parsed()) {
      auto table = detail::parse_file(table_path, parse_table);
      auto phi = detail::parse_file(phi_path, parse_labeled);
      const Rational eps = parse_rational(eps_str);
      const Rational alpha = parse_rational(alpha_str);
      auto rep = check_representation(table, phi);
      out << "mult_defect: " << detail::exact(rep.mult_defect) << "\n";
      out << "unit_ok: " << (rep.unit_ok ? "yes" : "no") << "\n";
      out << "separation: " << detail::exact(rep.separation) << "\n";
      out << "passes: " << (rep.passes(eps, alpha) ? "yes" : "no") << "\n";
      return kOk;
    }
  } catch (const Exhausted &e) {
    err << e.what() << "\n";
    return kExhausted;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

} // namespace almostperm::cli
