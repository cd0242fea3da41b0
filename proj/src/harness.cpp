#include "udmis/harness.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "udmis/approximation.hpp"
#include "udmis/line_solvers.hpp"
#include "udmis/strips.hpp"

namespace udmis {

namespace {

std::vector<DiskId> all_ids(const Instance& inst) {
  std::vector<DiskId> ids;
  ids.reserve(inst.disks.size());
  for (const Disk& d : inst.disks) ids.push_back(d.id);
  return ids;
}

double pick_line(const Instance& inst) {
  if (std::all_of(inst.disks.begin(), inst.disks.end(),
                  [&](const Disk& d) { return stabs_line(d, 0.0, inst.radius); }))
    return 0.0;
  const auto [lo, hi] = std::minmax_element(
      inst.disks.begin(), inst.disks.end(), [](const Disk& a, const Disk& b) { return a.cy < b.cy; });
  return 0.5 * (lo->cy + hi->cy);
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

}  // namespace

Algo parse_algo(const std::string& s) {
  if (s == "approx2-pairdp" || s == "approx2") return Algo::approx2_pairdp;
  if (s == "approx2-paperdp") return Algo::approx2_paperdp;
  if (s == "pair-dp") return Algo::pair_dp;
  if (s == "paper-dp") return Algo::paper_dp;
  if (s == "brute") return Algo::brute;
  throw InputError(fmt::format(
      "unknown algorithm '{}' (expected approx2-pairdp, approx2-paperdp, pair-dp, paper-dp or brute)", s));
}

std::string to_string(Algo a) {
  switch (a) {
    case Algo::approx2_pairdp: return "approx2-pairdp";
    case Algo::approx2_paperdp: return "approx2-paperdp";
    case Algo::pair_dp: return "pair-dp";
    case Algo::paper_dp: return "paper-dp";
    case Algo::brute: return "brute";
  }
  return "unknown";
}

SolveResult run_algo(const Instance& inst, Algo algo, std::optional<double> y_line, Contact contact) {
  switch (algo) {
    case Algo::approx2_pairdp: return approx2_solve(inst, LineSolver::pair_dp, contact);
    case Algo::approx2_paperdp: return approx2_solve(inst, LineSolver::paper_dp, contact);
    case Algo::brute: return brute_force_solve(inst, contact);
    case Algo::pair_dp:
    case Algo::paper_dp: {
      const auto ids = all_ids(inst);
      const StabbedInstance si =
          split_stabbed(inst, ids, y_line ? *y_line : pick_line(inst), contact);
      return algo == Algo::pair_dp ? pair_state_dp_solve(si) : paper_dp_solve(si);
    }
  }
  throw InvariantError("unhandled algorithm");
}

Instance counterexample_cstar() {
  return Instance{{{0, -1.88, 0.50}, {1, -0.95, 0.01}, {2, -0.90, 0.50}, {3, 0.00, 0.01}}, 0.5};
}

DiffMode parse_diff_mode(const std::string& s) {
  if (s == "stabbed") return DiffMode::stabbed;
  if (s == "general") return DiffMode::general;
  throw InputError(fmt::format("unknown diff mode '{}' (expected stabbed or general)", s));
}

DiffReport diff_instance(const Instance& inst, DiffMode mode, std::uint64_t seed) {
  DiffReport rep;
  rep.seed = seed;
  rep.n = inst.disks.size();
  const SolveResult brute = brute_force_solve(inst);
  rep.brute = static_cast<int>(brute.size);
  const SolveResult approx = approx2_solve(inst, LineSolver::pair_dp);
  rep.approx2 = static_cast<int>(approx.size);
  rep.factor2_holds = approx.verified && 2 * rep.approx2 >= rep.brute;

  if (mode == DiffMode::stabbed) {
    const auto ids = all_ids(inst);
    const StabbedInstance si = split_stabbed(inst, ids, 0.0);
    const SolveResult pair = pair_state_dp_solve(si);
    const SolveResult paper = paper_dp_solve(si);
    rep.pair_dp = static_cast<int>(pair.size);
    rep.paper_dp = static_cast<int>(paper.size);
    rep.pair_dp_match = pair.size == brute.size && pair.verified;
    rep.paper_dp_overcount = paper.size > brute.size;
    rep.paper_dp_infeasible_reconstruction = !paper.verified;
    return rep;
  }

  const StripAssignment sa = decompose(inst);
  rep.pair_dp = rep.paper_dp = 0;
  rep.pair_dp_match = true;
  for (std::size_t i = 0; i < sa.line_count(); ++i) {
    const auto& ids = sa.strips[i];
    if (ids.empty()) continue;
    const StabbedInstance si = split_stabbed(inst, ids, sa.line_ys[i]);
    const SolveResult strip_brute = brute_force_solve(inst, ids);
    const SolveResult pair = pair_state_dp_solve(si);
    const SolveResult paper = paper_dp_solve(si);
    rep.pair_dp += static_cast<int>(pair.size);
    rep.paper_dp += static_cast<int>(paper.size);
    rep.pair_dp_match = rep.pair_dp_match && pair.size == strip_brute.size && pair.verified;
    rep.paper_dp_overcount = rep.paper_dp_overcount || paper.size > strip_brute.size;
    rep.paper_dp_infeasible_reconstruction = rep.paper_dp_infeasible_reconstruction || !paper.verified;
  }
  return rep;
}

std::vector<DiffReport> differential_test(const GenParams& p, std::size_t trials, DiffMode mode,
                                          std::optional<std::size_t> n_min) {
  const std::size_t cap = brute_force_cap();
  if (p.n > cap) throw InputError(fmt::format("n = {} exceeds the brute-force cap {}", p.n, cap));
  const std::size_t lo = n_min.value_or(p.n);
  if (lo > p.n) throw InputError(fmt::format("n_min {} exceeds n {}", lo, p.n));

  std::vector<DiffReport> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    GenParams q = p;
    q.seed = p.seed + t;
    if (mode == DiffMode::stabbed) q.mode = GenMode::stabbed;
    std::mt19937_64 size_rng(q.seed ^ 0xD1B54A32D192ED03ULL);
    q.n = std::uniform_int_distribution<std::size_t>(lo, p.n)(size_rng);
    out.push_back(diff_instance(generate(q), mode, q.seed));
  }
  std::sort(out.begin(), out.end(),
            [](const DiffReport& a, const DiffReport& b) { return a.seed < b.seed; });
  return out;
}

DiffSummary summarize(const std::vector<DiffReport>& reports) {
  DiffSummary s;
  s.trials = reports.size();
  double ratio_sum = 0.0;
  std::size_t ratio_count = 0;
  for (const DiffReport& r : reports) {
    s.pair_dp_mismatches += !r.pair_dp_match;
    s.paper_dp_overcounts += r.paper_dp_overcount;
    s.paper_dp_infeasible += r.paper_dp_infeasible_reconstruction;
    s.factor2_failures += !r.factor2_holds;
    if (r.brute > 0 && r.approx2 >= 0) {
      ratio_sum += static_cast<double>(r.approx2) / r.brute;
      ++ratio_count;
    }
  }
  if (s.trials) s.overcount_rate = static_cast<double>(s.paper_dp_overcounts) / s.trials;
  if (ratio_count) s.mean_ratio = ratio_sum / ratio_count;
  return s;
}

void write_diff_csv(std::ostream& out, const std::vector<DiffReport>& reports) {
  out << "seed,n,brute,pair_dp,paper_dp,approx2,pair_dp_match,paper_dp_overcount,"
         "paper_dp_infeasible_reconstruction,factor2_holds\n";
  for (const DiffReport& r : reports)
    out << fmt::format("{},{},{},{},{},{},{:d},{:d},{:d},{:d}\n", r.seed, r.n, r.brute, r.pair_dp,
                       r.paper_dp, r.approx2, r.pair_dp_match, r.paper_dp_overcount,
                       r.paper_dp_infeasible_reconstruction, r.factor2_holds);
}

std::optional<double> fit_exponent(const std::vector<BenchPoint>& points) {
  if (points.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchPoint& p : points) {
    if (p.n == 0 || !(p.median_ms > 0.0)) return std::nullopt;
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(p.median_ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (m * sxy - sx * sy) / denom;
}

BenchReport bench_scaling(Algo algo, const std::vector<std::size_t>& sizes, std::size_t reps,
                          std::uint64_t seed) {
  if (reps < 3) throw InputError(fmt::format("bench needs at least 3 repetitions, got {}", reps));
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw InputError("bench sizes must be strictly increasing");
  if (algo == Algo::brute) {
    const std::size_t cap = brute_force_cap();
    for (std::size_t n : sizes)
      if (n > cap) throw InputError(fmt::format("brute force refuses n = {} (cap {})", n, cap));
  }

  BenchReport rep;
  rep.solver = to_string(algo);
  for (std::size_t n : sizes) {
    GenParams g;
    g.mode = GenMode::stabbed;
    g.n = n;
    g.radius = 0.5;
    g.width = std::max(1.0, static_cast<double>(n) * g.radius);
    g.seed = seed + n;
    const Instance inst = generate(g);
    std::vector<double> samples;
    samples.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r) samples.push_back(run_algo(inst, algo, 0.0).elapsed.count());
    rep.points.push_back({n, median(std::move(samples)), reps});
  }
  rep.exponent = fit_exponent(rep.points);
  return rep;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "solver,n,median_ms,reps\n";
  for (const BenchPoint& p : report.points)
    out << fmt::format("{},{},{},{}\n", report.solver, p.n, p.median_ms, p.reps);
  out << fmt::format("# exponent,{}\n",
                     report.exponent ? fmt::format("{:.4f}", *report.exponent) : "undefined");
}

std::string format_bench_table(const BenchReport& report) {
  std::string s = fmt::format("{:>10} {:>14} {:>8} {:>8}\n", "n", "median_ms", "reps", "ratio");
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const BenchPoint& p = report.points[i];
    const std::string ratio =
        i == 0 ? "-" : fmt::format("{:.2f}", p.median_ms / report.points[i - 1].median_ms);
    s += fmt::format("{:>10} {:>14.3f} {:>8} {:>8}\n", p.n, p.median_ms, p.reps, ratio);
  }
  s += fmt::format("{} growth exponent: {}\n", report.solver,
                   report.exponent ? fmt::format("{:.3f}", *report.exponent) : "undefined");
  return s;
}

}  // namespace udmis
