#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udmis/generate.hpp"
#include "udmis/geometry.hpp"

namespace udmis {

enum class Algo { approx2_pairdp, approx2_paperdp, pair_dp, paper_dp, brute };

Algo parse_algo(const std::string& s);
std::string to_string(Algo a);

/// Runs one solver on a whole instance. The single-line solvers need every
/// disk to stab `y_line`; when it is not given, y = 0 is used if all disks
/// stab it, otherwise the midpoint of the center ordinates.
SolveResult run_algo(const Instance& inst, Algo algo, std::optional<double> y_line = {},
                     Contact contact = Contact::open);

/// The four-disk instance on which the RI-jump recurrence reports 3 although
/// the optimum is 2. Ids 0..3 are A, B, C, D; all stab y = 0 from above.
Instance counterexample_cstar();

enum class DiffMode { stabbed, general };

DiffMode parse_diff_mode(const std::string& s);

struct DiffReport {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  // -1 when the solver was not run.
  int brute = -1;
  int pair_dp = -1;   // general mode: sum of per-strip optima
  int paper_dp = -1;  // general mode: sum of per-strip paper-dp values
  int approx2 = -1;
  bool pair_dp_match = false;
  bool paper_dp_overcount = false;
  bool paper_dp_infeasible_reconstruction = false;
  bool factor2_holds = false;
};

/// Cross-checks all solvers on one instance. Stabbed mode treats the
/// instance as a single strip on y = 0; general mode checks every strip of
/// the decomposition against brute force and the factor-2 bound overall.
DiffReport diff_instance(const Instance& inst, DiffMode mode, std::uint64_t seed = 0);

/// `trials` instances with seeds p.seed, p.seed+1, ...; each draws n
/// uniformly from [n_min, p.n] (n_min defaults to p.n). Stabbed mode forces
/// the stabbed generator. Mismatches are recorded, never thrown. The result
/// is sorted by seed.
std::vector<DiffReport> differential_test(const GenParams& p, std::size_t trials,
                                          DiffMode mode = DiffMode::stabbed,
                                          std::optional<std::size_t> n_min = {});

struct DiffSummary {
  std::size_t trials = 0;
  std::size_t pair_dp_mismatches = 0;
  std::size_t paper_dp_overcounts = 0;
  std::size_t paper_dp_infeasible = 0;
  std::size_t factor2_failures = 0;
  double overcount_rate = 0.0;
  double mean_ratio = 0.0;  // mean approx2 / brute over trials with brute > 0
};

DiffSummary summarize(const std::vector<DiffReport>& reports);
void write_diff_csv(std::ostream& out, const std::vector<DiffReport>& reports);

struct BenchPoint {
  std::size_t n = 0;
  double median_ms = 0.0;
  std::size_t reps = 0;
};

struct BenchReport {
  std::string solver;
  std::vector<BenchPoint> points;
  std::optional<double> exponent;  // log-log least-squares slope; needs >= 2 sizes
};

/// Times `algo` on stabbed-line instances (x-extent n * r, seed fixed per n).
/// Sizes must be strictly increasing and reps >= 3. Brute force above its
/// cap is refused with InputError.
BenchReport bench_scaling(Algo algo, const std::vector<std::size_t>& sizes, std::size_t reps,
                          std::uint64_t seed = 1);

std::optional<double> fit_exponent(const std::vector<BenchPoint>& points);
void write_bench_csv(std::ostream& out, const BenchReport& report);
std::string format_bench_table(const BenchReport& report);

}  // namespace udmis
