// udisk-mis: command-line front end for the unit disk MIS toolkit.
//
// Exit codes: 0 success, 1 usage or input error, 2 differential-suite
// failure (pair-dp disagreed with brute force), 3 internal invariant
// violation, 4 `verify` found an adjacent pair.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "udmis/approximation.hpp"
#include "udmis/generate.hpp"
#include "udmis/geometry.hpp"
#include "udmis/harness.hpp"
#include "udmis/io.hpp"
#include "udmis/render.hpp"
#include "udmis/strips.hpp"

namespace {

using namespace udmis;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDiffFailure = 2;
constexpr int kInternal = 3;
constexpr int kDependent = 4;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(fmt::format("cannot write '{}'", path));
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InputError(fmt::format("cannot parse '{}' as a size", tok));
    }
  }
  return out;
}

std::vector<DiskId> parse_ids(const std::string& csv) {
  std::vector<DiskId> out;
  for (std::size_t v : parse_sizes(csv)) out.push_back(static_cast<DiskId>(v));
  return out;
}

std::string strips_json(const StripAssignment& sa) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < sa.line_count(); ++i)
    doc.push_back({{"strip", i + 1}, {"y", sa.line_ys[i]}, {"disks", sa.strips[i]}});
  return doc.dump(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum independent set on unit disk graphs"};
  app.require_subcommand(1);

  // generate
  GenParams gen;
  std::string gen_mode = "uniform", gen_out;
  double gen_min_sep = -1.0;
  auto* g = app.add_subcommand("generate", "Write a random instance");
  g->add_option("--mode", gen_mode, "uniform | clustered | stabbed")->capture_default_str();
  g->add_option("--n", gen.n, "Number of disks")->required();
  g->add_option("--radius", gen.radius, "Disk radius")->capture_default_str();
  g->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  g->add_option("--width", gen.width, "Box width (x-extent in stabbed mode)")->capture_default_str();
  g->add_option("--height", gen.height, "Box height")->capture_default_str();
  g->add_option("--min-sep", gen_min_sep, "Minimum center distance (default 1e-6 * radius)");
  g->add_option("-o,--output", gen_out, "Output file (.json or .csv)")->required();

  // solve
  std::string solve_in, solve_algo = "approx2-pairdp", solve_out;
  std::optional<double> solve_radius, solve_line;
  bool dump_strips = false;
  auto* s = app.add_subcommand("solve", "Solve an instance");
  s->add_option("-i,--input", solve_in, "Instance file")->required();
  s->add_option("--algo", solve_algo, "approx2-pairdp | approx2-paperdp | pair-dp | paper-dp | brute")
      ->capture_default_str();
  s->add_option("--radius", solve_radius, "Radius for CSV input");
  s->add_option("--line", solve_line, "Stabbing line y for pair-dp / paper-dp");
  s->add_flag("--dump-strips", dump_strips, "Print the strip decomposition as JSON");
  s->add_option("-o,--output", solve_out, "Result JSON file (default: stdout)");

  // verify
  std::string verify_in, verify_ids;
  std::optional<double> verify_radius;
  auto* v = app.add_subcommand("verify", "Check that a set of disks is independent");
  v->add_option("-i,--input", verify_in, "Instance file")->required();
  v->add_option("--ids", verify_ids, "Comma-separated disk ids")->required();
  v->add_option("--radius", verify_radius, "Radius for CSV input");

  // diff
  GenParams diff_gen;
  diff_gen.width = 3.0;
  diff_gen.height = 3.0;
  std::string diff_mode = "stabbed", diff_out, diff_replay;
  std::size_t diff_trials = 100, diff_n_min = 1;
  auto* d = app.add_subcommand("diff", "Differential test of all solvers against brute force");
  d->add_option("--mode", diff_mode, "stabbed | general")->capture_default_str();
  d->add_option("--n", diff_gen.n, "Largest instance size")->capture_default_str();
  d->add_option("--n-min", diff_n_min, "Smallest instance size")->capture_default_str();
  d->add_option("--trials", diff_trials, "Number of instances")->capture_default_str();
  d->add_option("--seed", diff_gen.seed, "First seed")->capture_default_str();
  d->add_option("--width", diff_gen.width, "Box width / x-extent")->capture_default_str();
  d->add_option("--height", diff_gen.height, "Box height (general mode)")->capture_default_str();
  d->add_option("--replay", diff_replay, "Check one instance file instead of generating");
  d->add_option("-o,--output", diff_out, "Report CSV");
  diff_gen.n = 18;

  // bench
  std::string bench_algo = "paper-dp", bench_sizes = "2000,4000,8000", bench_out;
  std::size_t bench_reps = 5;
  std::uint64_t bench_seed = 1;
  auto* b = app.add_subcommand("bench", "Time a solver on growing stabbed-line instances");
  b->add_option("--algo", bench_algo, "Solver tag")->capture_default_str();
  b->add_option("--sizes", bench_sizes, "Comma-separated increasing sizes")->capture_default_str();
  b->add_option("--reps", bench_reps, "Repetitions per size (>= 3)")->capture_default_str();
  b->add_option("--seed", bench_seed, "Base seed")->capture_default_str();
  b->add_option("-o,--output", bench_out, "Report CSV");

  // render
  std::string render_in, render_result, render_out;
  std::optional<double> render_radius;
  bool render_strips = false;
  auto* rn = app.add_subcommand("render", "Draw an instance as SVG");
  rn->add_option("-i,--input", render_in, "Instance file")->required();
  rn->add_option("--result", render_result, "Result JSON whose selection is filled");
  rn->add_option("--radius", render_radius, "Radius for CSV input");
  rn->add_flag("--strips", render_strips, "Draw the stabbing lines");
  rn->add_option("-o,--output", render_out, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*g) {
      gen.mode = parse_gen_mode(gen_mode);
      if (gen_min_sep >= 0.0) gen.min_sep = gen_min_sep;
      write_instance(gen_out, generate(gen));
      return kOk;
    }

    if (*s) {
      const Instance inst = read_instance(solve_in, solve_radius);
      const Algo algo = parse_algo(solve_algo);
      if (dump_strips) std::cout << strips_json(decompose(inst)) << '\n';
      const SolveResult res = run_algo(inst, algo, solve_line);
      if (solve_out.empty()) {
        write_result_json(std::cout, to_string(algo), res);
      } else {
        auto out = open_out(solve_out);
        write_result_json(out, to_string(algo), res);
        std::cerr << fmt::format("{}: size {}, {}\n", to_string(algo), res.size,
                                 res.verified ? "independent" : "NOT independent (unverified)");
      }
      return kOk;
    }

    if (*v) {
      const Instance inst = read_instance(verify_in, verify_radius);
      const auto ids = parse_ids(verify_ids);
      const bool ok = verify_independent(inst, ids);
      std::cout << (ok ? "independent" : "not independent") << '\n';
      return ok ? kOk : kDependent;
    }

    if (*d) {
      const DiffMode mode = parse_diff_mode(diff_mode);
      std::vector<DiffReport> reports;
      if (!diff_replay.empty()) {
        reports.push_back(diff_instance(read_instance(diff_replay), mode));
      } else {
        if (mode == DiffMode::general) diff_gen.mode = GenMode::uniform;
        reports = differential_test(diff_gen, diff_trials, mode, diff_n_min);
      }
      if (!diff_out.empty()) {
        auto out = open_out(diff_out);
        write_diff_csv(out, reports);
      } else {
        write_diff_csv(std::cout, reports);
      }
      const DiffSummary sum = summarize(reports);
      std::cerr << fmt::format(
          "trials {}: pair-dp mismatches {}, paper-dp overcounts {} (rate {:.4f}), "
          "paper-dp infeasible {}, factor-2 failures {}, mean approx2/opt {:.4f}\n",
          sum.trials, sum.pair_dp_mismatches, sum.paper_dp_overcounts, sum.overcount_rate,
          sum.paper_dp_infeasible, sum.factor2_failures, sum.mean_ratio);
      return sum.pair_dp_mismatches == 0 ? kOk : kDiffFailure;
    }

    if (*b) {
      const BenchReport rep = bench_scaling(parse_algo(bench_algo), parse_sizes(bench_sizes),
                                            bench_reps, bench_seed);
      std::cout << format_bench_table(rep);
      if (!bench_out.empty()) {
        auto out = open_out(bench_out);
        write_bench_csv(out, rep);
      }
      return kOk;
    }

    if (*rn) {
      const Instance inst = read_instance(render_in, render_radius);
      std::optional<std::vector<DiskId>> ids;
      if (!render_result.empty()) ids = read_result_ids(render_result);
      std::optional<StripAssignment> sa;
      if (render_strips) sa = decompose(inst);
      std::optional<std::span<const DiskId>> sel;
      if (ids) sel = std::span<const DiskId>(*ids);
      auto out = open_out(render_out);
      out << render_svg(inst, sel, sa ? &*sa : nullptr);
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
