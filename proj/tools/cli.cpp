#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "collatz/core_maps.hpp"
#include "collatz/export.hpp"
#include "collatz/forests.hpp"
#include "collatz/tree_builder.hpp"
#include "collatz/verifier.hpp"

namespace collatz::cli {

namespace {

// Bad arguments detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Value positive(const std::string& flag, const std::string& text) {
  Value v;
  try {
    v = parse_value(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (v < 1) throw UsageError(flag + " must be >= 1");
  return v;
}

std::uint64_t small(const std::string& flag, const std::string& text, std::uint64_t lo,
                    std::uint64_t hi) {
  Value v;
  try {
    v = parse_value(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (v < lo || v > hi) {
    throw UsageError(flag + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::uint64_t>(v);
}

Format format_or(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (auto f = parse_format(text)) return *f;
  throw UsageError("--format must be one of text, dot, csv, json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collatz graph construction, forest decomposition and invariant verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text;
  std::string output_path;
  unsigned threads = 1;
  app.add_option("--format", format_text, "Output format: text, dot, csv or json");
  app.add_option("--output,-o", output_path, "Write output to PATH instead of stdout");
  app.add_option("--threads", threads, "Worker threads / range shards")->check(CLI::Range(1u, 1024u));

  // trajectory
  std::string traj_n;
  std::string traj_cap = std::to_string(kDefaultStepCap);
  std::string arith = "u128";
  auto* traj = app.add_subcommand("trajectory", "Forward orbit of n down to 1");
  traj->add_option("n", traj_n, "Start value")->required();
  traj->add_option("--cap", traj_cap, "Step cap");
  traj->add_option("--arith", arith, "Integer width: u128 (checked) or big")
      ->check(CLI::IsMember({"u128", "big"}));

  // decompose
  std::string dec_n;
  auto* dec = app.add_subcommand("decompose", "Write n as odd * 2^d");
  dec->add_option("n", dec_n, "Value")->required();

  // verify
  std::string v_max = "1000000";
  std::string v_levels = "40";
  std::string v_cap = std::to_string(kDefaultStepCap);
  std::string v_oracle = "20";
  std::vector<std::string> v_checks;
  unsigned shards = 0;
  auto* verify = app.add_subcommand("verify", "Run invariant checks over [1, N] and the level tree");
  verify->add_option("--max", v_max, "Range bound N");
  verify->add_option("--levels", v_levels, "Tree height H");
  verify->add_option("--cap", v_cap, "Step cap for the convergence check");
  verify->add_option("--oracle-levels", v_oracle, "Tree levels compared against the scan oracle");
  verify->add_option("--checks", v_checks, "Comma-separated subset of checks")->delimiter(',');
  verify->add_option("--shards", shards, "Range shards (defaults to --threads)")
      ->check(CLI::Range(1u, 1024u));

  // tree
  std::string t_levels = "13";
  auto* tree = app.add_subcommand("tree", "Level tree rooted at 1");
  tree->add_option("--levels", t_levels, "Tree height H");

  // forest
  std::string f_kind;
  std::string f_odd_max = "9";
  std::string f_depth_max = "4";
  std::string f_max = "40";
  auto* forest = app.add_subcommand("forest", "Grid export of the doubling (h) or branch (b) forest");
  forest->add_option("--kind", f_kind, "h or b")->required()->check(CLI::IsMember({"h", "b"}));
  forest->add_option("--odd-max", f_odd_max, "Largest odd root (kind h)");
  forest->add_option("--depth-max", f_depth_max, "Largest exponent d (kind h)");
  forest->add_option("--max", f_max, "Largest branch value (kind b)");

  // union
  std::string u_max = "40";
  bool u_boundary = false;
  auto* uni = app.add_subcommand("union", "Union graph over the window [1, N]");
  uni->add_option("--max", u_max, "Window bound N");
  uni->add_flag("--include-boundary", u_boundary, "Also emit edges leaving the window");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (*traj) {
      const Format f = format_or(format_text, Format::Text);
      const std::uint64_t cap = small("--cap", traj_cap, 1, UINT64_MAX);
      if (arith == "big") {
        BigValue n(traj_n);
        if (n < 1) throw UsageError("n must be >= 1");
        buffer << render_trajectory(big::trajectory(n, cap), f);
      } else {
        buffer << render_trajectory(trajectory(positive("n", traj_n), cap), f);
      }
    } else if (*dec) {
      const Value n = positive("n", dec_n);
      buffer << render_decomposition(n, decompose(n), format_or(format_text, Format::Text));
    } else if (*verify) {
      format_or(format_text, Format::Json);
      VerifyOptions opt;
      opt.max_n = positive("--max", v_max);
      opt.levels = static_cast<std::uint32_t>(small("--levels", v_levels, 0, 100));
      opt.step_cap = small("--cap", v_cap, 1, UINT64_MAX);
      opt.oracle_levels = static_cast<std::uint32_t>(small("--oracle-levels", v_oracle, 0, 30));
      opt.shards = shards ? shards : threads;
      if (!v_checks.empty()) {
        opt.checks.clear();
        for (const auto& c : v_checks) opt.checks.push_back(c == "tree" ? "tree_no_cycle" : c);
      }
      std::vector<CheckReport> reports;
      try {
        reports = run_all(opt);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      for (const CheckReport& r : reports) {
        buffer << to_json(r) << "\n";
        err << r.check << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
            << r.violations.size() << " violations)\n";
        if (!r.passed()) status = kExitViolation;
      }
    } else if (*tree) {
      const auto h = static_cast<std::uint32_t>(small("--levels", t_levels, 0, 100));
      buffer << render_tree(build_levels(h, threads), format_or(format_text, Format::Dot));
    } else if (*forest) {
      const Format f = format_or(format_text, Format::Dot);
      if (f_kind == "h") {
        const Value odd_max = positive("--odd-max", f_odd_max);
        const auto depth_max = static_cast<std::uint32_t>(small("--depth-max", f_depth_max, 0, 126));
        buffer << render_forest_h(odd_max, depth_max, f);
      } else {
        buffer << render_forest_b(positive("--max", f_max), f);
      }
    } else if (*uni) {
      const Value n = positive("--max", u_max);
      buffer << render_union(union_graph(n, threads), format_or(format_text, Format::Dot), u_boundary);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kExitViolation;
  } catch (const NonConvergenceError& e) {
    err << "no convergence: " << e.what() << "\n";
    return kExitViolation;
  } catch (const StructuralViolation& e) {
    err << "structural violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << output_path << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace collatz::cli
