#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include <fmt/format.h>

#include "udmis/line_solvers.hpp"

namespace udmis {

namespace {

using Mask = std::uint64_t;

struct Search {
  std::vector<Mask> nbr;  // open neighborhoods, vertices ordered by id
  Mask best_set = 0;
  int best = 0;
  std::uint64_t nodes = 0;

  void run(Mask cand, int count, Mask current) {
    ++nodes;
    if (count + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = count;
      best_set = current;
      return;
    }
    // Highest degree within the candidates; lowest id wins ties.
    int pick = -1, pick_deg = -1;
    for (Mask m = cand; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int deg = std::popcount(nbr[v] & cand);
      if (deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    if (pick_deg == 0) {  // all isolated
      run(0, count + std::popcount(cand), current | cand);
      return;
    }
    const Mask bit = Mask{1} << pick;
    run(cand & ~bit & ~nbr[pick], count + 1, current | bit);
    run(cand & ~bit, count, current);
  }
};

}  // namespace

std::size_t brute_force_cap() {
  const char* env = std::getenv("UDISK_BRUTE_CAP");
  if (env == nullptr || *env == '\0') return 40;
  std::size_t cap = 0;
  const char* end = env + std::strlen(env);
  auto [p, ec] = std::from_chars(env, end, cap);
  if (ec != std::errc{} || p != end)
    throw InputError(fmt::format("UDISK_BRUTE_CAP is not a non-negative integer: '{}'", env));
  if (cap > kBruteHardCap)
    throw InputError(fmt::format("UDISK_BRUTE_CAP={} exceeds the supported maximum of {}", cap,
                                 kBruteHardCap));
  return cap;
}

SolveResult brute_force_solve(const Instance& inst, std::span<const DiskId> ids, Contact contact,
                              std::size_t cap) {
  if (ids.size() > cap)
    throw InputError(fmt::format("brute force refuses {} disks (cap {})", ids.size(), cap));
  if (ids.size() > kBruteHardCap)
    throw InputError(fmt::format("brute force supports at most {} disks", kBruteHardCap));

  const auto start = std::chrono::steady_clock::now();
  std::vector<Disk> vs;
  vs.reserve(ids.size());
  for (DiskId id : ids) vs.push_back(inst.disk(id));
  std::sort(vs.begin(), vs.end(), [](const Disk& a, const Disk& b) { return a.id < b.id; });
  if (std::adjacent_find(vs.begin(), vs.end(),
                         [](const Disk& a, const Disk& b) { return a.id == b.id; }) != vs.end())
    throw InputError("brute force given a repeated id");

  Search s;
  s.nbr.assign(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j], inst.radius, contact)) {
        s.nbr[i] |= Mask{1} << j;
        s.nbr[j] |= Mask{1} << i;
      }
  const Mask all = vs.size() == 64 ? ~Mask{0} : (Mask{1} << vs.size()) - 1;
  s.run(all, 0, 0);

  SolveResult res;
  res.solver = SolverTag::brute;
  for (Mask m = s.best_set; m; m &= m - 1) res.selected.push_back(vs[std::countr_zero(m)].id);
  res.size = res.selected.size();
  res.elapsed = std::chrono::steady_clock::now() - start;
  res.stats["nodes"] = s.nodes;
  res.verified = verify_independent(inst, res.selected, contact);
  if (!res.verified) throw InvariantError("brute force produced a dependent set");
  return res;
}

SolveResult brute_force_solve(const Instance& inst, Contact contact) {
  std::vector<DiskId> ids;
  ids.reserve(inst.disks.size());
  for (const Disk& d : inst.disks) ids.push_back(d.id);
  return brute_force_solve(inst, ids, contact, brute_force_cap());
}

}  // namespace udmis
