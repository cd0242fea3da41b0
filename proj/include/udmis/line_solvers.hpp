#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "udmis/geometry.hpp"

namespace udmis {

/// One strip's disks, split by which side of the stabbing line their center
/// lies on and sorted by x_order_key. Positions are 1-based throughout the
/// line solvers: index 0 on either side stands for "no disk".
struct StabbedInstance {
  std::vector<Disk> above;  // cy >= y_line
  std::vector<Disk> below;  // cy <  y_line
  double y_line = 0.0;
  double radius = 0.5;
  Contact contact = Contact::open;
  // below_before[k]: number of below disks preceding above disk k (1-based,
  // slot 0 unused); above_before[l] likewise for below disk l.
  std::vector<std::uint32_t> below_before;
  std::vector<std::uint32_t> above_before;

  std::size_t n1() const { return above.size(); }
  std::size_t n2() const { return below.size(); }
  std::size_t size() const { return above.size() + below.size(); }
  const Disk& above_at(std::size_t k) const { return above[k - 1]; }
  const Disk& below_at(std::size_t l) const { return below[l - 1]; }
  bool adjacent(const Disk& a, const Disk& b) const { return udmis::adjacent(a, b, radius, contact); }
};

/// Throws InputError if a listed disk does not stab y_line.
StabbedInstance split_stabbed(const Instance& inst, std::span<const DiskId> strip_ids,
                              double y_line, Contact contact = Contact::open);

/// Rightmost-independent pointers. For the disk at 1-based position p on a
/// side, `*_to_above[p]` is the largest above index whose disk precedes it
/// and is independent of it (0 if none), `*_to_below[p]` the same for below.
struct RiTable {
  std::vector<std::uint32_t> above_to_above, above_to_below;
  std::vector<std::uint32_t> below_to_above, below_to_below;

  /// Lookup by disk id; throws InputError for ids not in the strip.
  std::uint32_t ri_above(const StabbedInstance& si, DiskId id) const;
  std::uint32_t ri_below(const StabbedInstance& si, DiskId id) const;
};

RiTable build_ri_tables(const StabbedInstance& si);

/// Storage order for an (n1+1) x (n2+1) grid of states (k, l). Each cell is
/// owned by its frontier disk, the later of above[k] and below[l] in x
/// order, and a frontier's cells are stored contiguously in sweep order, so
/// filling the grid left to right streams through memory.
class GridLayout {
 public:
  GridLayout() = default;
  explicit GridLayout(const StabbedInstance& si);

  std::size_t size() const { return size_; }
  bool frontier_is_above(std::size_t k, std::size_t l) const {
    return l == 0 ? k > 0 : (k > 0 && below_before_[k] >= l);
  }
  std::size_t operator()(std::size_t k, std::size_t l) const {
    if (k == 0 && l == 0) return 0;
    return frontier_is_above(k, l) ? above_off_[k] + l : below_off_[l] + k;
  }
  // Start of a frontier's block; cell (k, l) of above frontier k is at
  // above_block(k) + l, and likewise for below frontiers.
  std::size_t above_block(std::size_t k) const { return above_off_[k]; }
  std::size_t below_block(std::size_t l) const { return below_off_[l]; }

 private:
  std::vector<std::uint32_t> below_before_;
  std::vector<std::size_t> above_off_, below_off_;
  std::size_t size_ = 1;
};

/// V(k, l) for 0 <= k <= n1, 0 <= l <= n2, and the decision taken at each cell.
/// Each entry packs both as 2 * V + (took ? 1 : 0). Since V <= n1 + n2, the
/// entries are 16 bits wide whenever that fits and 32 bits otherwise; exactly
/// one of `narrow` and `wide` is in use.
struct DpTable {
  enum class Choice : std::uint8_t { skipped, took_disk };

  std::size_t n1 = 0, n2 = 0;
  GridLayout layout;
  std::vector<std::uint16_t> narrow;
  std::vector<std::uint32_t> wide;

  std::size_t size() const { return narrow.size() + wide.size(); }
  std::size_t cell(std::size_t k, std::size_t l) const { return layout(k, l); }
  std::uint32_t entry(std::size_t c) const { return wide.empty() ? narrow[c] : wide[c]; }
  std::int32_t value(std::size_t k, std::size_t l) const {
    return static_cast<std::int32_t>(entry(cell(k, l)) >> 1);
  }
  Choice choice(std::size_t k, std::size_t l) const {
    return entry(cell(k, l)) & 1 ? Choice::took_disk : Choice::skipped;
  }
};

/// Fills the RI-jump recurrence exactly as stated: at each cell the frontier
/// disk (the later of above[k], below[l] in x order) is either skipped or
/// taken, a take jumping to (RI^a, RI^b) of that disk. The jump target is not
/// clipped to the current subproblem.
DpTable paper_dp_table(const StabbedInstance& si, const RiTable& ri);
/// Same, refilling `t` in place and reusing its storage. `force_wide` selects
/// 32-bit entries regardless of size.
void paper_dp_fill(const StabbedInstance& si, const RiTable& ri, DpTable& t, bool force_wide = false);

/// Walks back-pointers from (n1, n2). Never emits a sentinel.
std::vector<DiskId> reconstruct_solution(const DpTable& table, const StabbedInstance& si,
                                         const RiTable& ri);

/// The RI-jump dynamic program. Its value is an upper bound on the optimum
/// but may exceed it; `verified` reports whether the reconstructed set is
/// actually independent.
SolveResult paper_dp_solve(const StabbedInstance& si);

/// Exact solver over states (last chosen above disk, last chosen below disk).
/// A disk can extend a state iff it is independent of both frontier disks.
/// Throws InvariantError if the result is not independent.
SolveResult pair_state_dp_solve(const StabbedInstance& si);

/// Upper limit on vertices for brute_force_solve: 40, or UDISK_BRUTE_CAP.
std::size_t brute_force_cap();
inline constexpr std::size_t kBruteHardCap = 64;

/// Branch and bound on the adjacency graph of `ids`. Throws InputError when
/// ids.size() exceeds `cap`.
SolveResult brute_force_solve(const Instance& inst, std::span<const DiskId> ids,
                              Contact contact = Contact::open, std::size_t cap = brute_force_cap());
SolveResult brute_force_solve(const Instance& inst, Contact contact = Contact::open);

}  // namespace udmis
