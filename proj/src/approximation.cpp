#include "udmis/approximation.hpp"

#include <algorithm>
#include <future>
#include <unordered_set>

#include <fmt/format.h>

#include "udmis/line_solvers.hpp"

namespace udmis {

ParityUnion combine_parity(const std::vector<SolveResult>& strip_solutions, std::size_t k) {
  if (strip_solutions.size() != k)
    throw InvariantError(fmt::format("{} strip solutions for {} strips", strip_solutions.size(), k));
  ParityUnion pu;
  std::unordered_set<DiskId> seen;
  for (std::size_t i = 0; i < k; ++i) {
    auto& dst = i % 2 == 0 ? pu.s_odd : pu.s_even;
    for (DiskId id : strip_solutions[i].selected) {
      if (!seen.insert(id).second)
        throw InvariantError(fmt::format("disk {} selected in two strips", id));
      dst.push_back(id);
    }
  }
  std::sort(pu.s_odd.begin(), pu.s_odd.end());
  std::sort(pu.s_even.begin(), pu.s_even.end());
  pu.chosen = pu.s_even.size() > pu.s_odd.size() ? Parity::even : Parity::odd;
  return pu;
}

Approx2Run approx2_run(const Instance& inst, LineSolver line_solver, Contact contact,
                       bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  Approx2Run run;
  run.strips = decompose(inst);
  const std::size_t k = run.strips.line_count();

  auto solve_strip = [&](std::size_t i) {
    const auto& ids = run.strips.strips[i];
    if (ids.empty()) {
      SolveResult empty;
      empty.solver = line_solver == LineSolver::pair_dp ? SolverTag::pair_dp : SolverTag::paper_dp;
      empty.verified = true;
      return empty;
    }
    const StabbedInstance si = split_stabbed(inst, ids, run.strips.line_ys[i], contact);
    return line_solver == LineSolver::pair_dp ? pair_state_dp_solve(si) : paper_dp_solve(si);
  };

  run.per_strip.resize(k);
  if (parallel && k > 1) {
    std::vector<std::future<SolveResult>> jobs;
    jobs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) jobs.push_back(std::async(std::launch::async, solve_strip, i));
    for (std::size_t i = 0; i < k; ++i) run.per_strip[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < k; ++i) run.per_strip[i] = solve_strip(i);
  }

  run.parity = combine_parity(run.per_strip, k);
  SolveResult& res = run.result;
  res.solver = SolverTag::approx2;
  res.selected = run.parity.reported();
  res.size = res.selected.size();
  res.elapsed = std::chrono::steady_clock::now() - start;
  res.stats["strips"] = k;
  res.stats["odd_size"] = run.parity.s_odd.size();
  res.stats["even_size"] = run.parity.s_even.size();
  res.verified = verify_independent(inst, res.selected, contact);
  if (line_solver == LineSolver::pair_dp && !res.verified)
    throw InvariantError("approx2 with pair-dp produced a dependent set");
  return run;
}

}  // namespace udmis
