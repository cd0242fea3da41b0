#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "udmis/approximation.hpp"
#include "udmis/line_solvers.hpp"

using namespace udmis;

namespace {

SolveResult with_size(std::size_t n, DiskId first) {
  SolveResult r;
  for (std::size_t i = 0; i < n; ++i) r.selected.push_back(first + static_cast<DiskId>(i));
  r.size = n;
  return r;
}

}  // namespace

TEST_CASE("approx2 examples") {
  const Instance three{{{0, 0, 0}, {1, 0.5, 0}, {2, 0, -2.0}}, 0.5};
  const Approx2Run run = approx2_run(three);
  CHECK(run.strips.line_count() == 3);
  CHECK(run.strips.strips[1].empty());
  CHECK(run.parity.s_odd.size() == 2);
  CHECK(run.parity.s_even.empty());
  CHECK(run.result.size == 2);
  CHECK(run.result.verified);
  CHECK(oracle::enumerate_mis(three).size == 2);

  CHECK(approx2_solve(Instance{{{4, 1, 1}}, 0.5}).size == 1);
  CHECK(approx2_solve(Instance{{}, 0.5}).size == 0);
}

TEST_CASE("combine_parity") {
  ParityUnion pu = combine_parity({with_size(3, 0), with_size(5, 10), with_size(2, 20)}, 3);
  CHECK(pu.s_odd.size() == 5);
  CHECK(pu.s_even.size() == 5);
  CHECK(pu.chosen == Parity::odd);

  pu = combine_parity({with_size(4, 0)}, 1);
  CHECK(pu.s_odd.size() == 4);
  CHECK(pu.s_even.empty());
  CHECK(pu.chosen == Parity::odd);

  pu = combine_parity({with_size(0, 0), with_size(0, 0)}, 2);
  CHECK(pu.reported().empty());
  CHECK(pu.chosen == Parity::odd);

  pu = combine_parity({with_size(1, 0), with_size(2, 10)}, 2);
  CHECK(pu.chosen == Parity::even);

  CHECK_THROWS_AS(combine_parity({with_size(2, 0), with_size(2, 1)}, 2), InvariantError);
  CHECK_THROWS_AS(combine_parity({with_size(2, 0)}, 2), InvariantError);
}

TEST_CASE("approx2: independence, factor 2, per-strip optimality") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 16;
    const Instance inst = oracle::random_box(rng, n, 3.0, 3.0);
    const Approx2Run run = approx2_run(inst);
    const int opt = oracle::enumerate_mis(inst).size;
    REQUIRE(verify_independent(inst, run.result.selected));
    REQUIRE(verify_independent(inst, run.parity.s_odd));
    REQUIRE(verify_independent(inst, run.parity.s_even));
    REQUIRE(2 * static_cast<int>(run.result.size) >= opt);
    std::size_t per_strip_total = 0;
    for (std::size_t i = 0; i < run.strips.line_count(); ++i) {
      std::vector<Disk> strip;
      for (DiskId id : run.strips.strips[i]) strip.push_back(inst.disk(id));
      REQUIRE(static_cast<int>(run.per_strip[i].size) == oracle::enumerate_mis(strip, 0.5).size);
      per_strip_total += run.per_strip[i].size;
    }
    REQUIRE(static_cast<int>(per_strip_total) >= opt);
  }
}

TEST_CASE("approx2: parallel strips give the same answer") {
  std::mt19937_64 rng(4);
  const Instance inst = oracle::random_box(rng, 400, 12, 12);
  const SolveResult a = approx2_solve(inst, LineSolver::pair_dp, Contact::open, false);
  const SolveResult b = approx2_solve(inst, LineSolver::pair_dp, Contact::open, true);
  CHECK(a.selected == b.selected);
}

TEST_CASE("approx2 with paper-dp: verified flag tracks actual independence") {
  std::mt19937_64 rng(31);
  std::size_t dependent = 0;
  for (int t = 0; t < 300; ++t) {
    const Instance inst = oracle::random_box(rng, 4 + rng() % 14, 6.0, 2.0);
    const SolveResult r = approx2_solve(inst, LineSolver::paper_dp);
    REQUIRE(r.verified == verify_independent(inst, r.selected));
    REQUIRE(2 * static_cast<int>(r.size) >= oracle::enumerate_mis(inst).size);
    dependent += !r.verified;
  }
  MESSAGE("paper-dp pipeline returned a dependent set on ", dependent, " of 300 instances");
}
