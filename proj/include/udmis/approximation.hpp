#pragma once

#include <vector>

#include "udmis/geometry.hpp"
#include "udmis/strips.hpp"

namespace udmis {

enum class LineSolver { pair_dp, paper_dp };

enum class Parity { odd, even };

/// Unions of per-strip solutions by strip parity. Strips count from 1, so
/// the topmost strip is odd.
struct ParityUnion {
  std::vector<DiskId> s_odd;   // sorted
  std::vector<DiskId> s_even;  // sorted
  Parity chosen = Parity::odd;

  const std::vector<DiskId>& reported() const { return chosen == Parity::odd ? s_odd : s_even; }
};

/// strip_solutions[i] must be solved over strip i alone (0-based position,
/// i.e. strip i+1). Larger union wins; ties go to odd. An id appearing in
/// two strips raises InvariantError.
ParityUnion combine_parity(const std::vector<SolveResult>& strip_solutions, std::size_t k);

struct Approx2Run {
  SolveResult result;
  StripAssignment strips;
  std::vector<SolveResult> per_strip;
  ParityUnion parity;
};

/// Factor-2 approximation: exact solve per strip, report the larger parity
/// union. With LineSolver::paper_dp the per-strip solutions may be
/// dependent, in which case result.verified is false.
Approx2Run approx2_run(const Instance& inst, LineSolver line_solver = LineSolver::pair_dp,
                       Contact contact = Contact::open, bool parallel = false);

inline SolveResult approx2_solve(const Instance& inst, LineSolver line_solver = LineSolver::pair_dp,
                                 Contact contact = Contact::open, bool parallel = false) {
  return approx2_run(inst, line_solver, contact, parallel).result;
}

}  // namespace udmis
