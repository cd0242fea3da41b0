#include "udmis/line_solvers.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include <fmt/format.h>

namespace udmis {

namespace {

using Clock = std::chrono::steady_clock;

enum class Side : std::uint8_t { above, below };

struct Slot {
  Side side;
  std::uint32_t pos;  // 1-based within its side
};

// Both sides interleaved in x_order_key order.
std::vector<Slot> merged_order(const StabbedInstance& si) {
  std::vector<Slot> out;
  out.reserve(si.size());
  std::size_t i = 0, j = 0;
  while (i < si.n1() || j < si.n2()) {
    const bool take_above =
        j == si.n2() || (i < si.n1() && x_less(si.above[i], si.below[j]));
    if (take_above)
      out.push_back({Side::above, static_cast<std::uint32_t>(++i)});
    else
      out.push_back({Side::below, static_cast<std::uint32_t>(++j)});
  }
  return out;
}

// Largest index in 1..limit of `side` whose disk is independent of `d`, 0 if none.
std::uint32_t scan_left(const StabbedInstance& si, const std::vector<Disk>& side,
                        std::uint32_t limit, const Disk& d) {
  for (std::uint32_t j = limit; j >= 1; --j)
    if (!si.adjacent(side[j - 1], d)) return j;
  return 0;
}

// Largest j < k such that every side disk 1..j is farther than a diameter in
// x from side disk k. Those disks are independent of k without a test.
std::vector<std::uint32_t> far_prefix(const std::vector<Disk>& side, double r) {
  const double reach_sq = (2.0 * r) * (2.0 * r);
  std::vector<std::uint32_t> far(side.size() + 1, 0);
  std::uint32_t j = 0;
  for (std::uint32_t k = 1; k <= side.size(); ++k) {
    while (j + 1 < k) {
      const double dx = side[k - 1].cx - side[j].cx;
      if (!(dx * dx > reach_sq)) break;
      ++j;
    }
    far[k] = j;
  }
  return far;
}

std::vector<DiskId> sorted_ids(std::vector<DiskId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

StabbedInstance split_stabbed(const Instance& inst, std::span<const DiskId> strip_ids,
                              double y_line, Contact contact) {
  StabbedInstance si;
  si.y_line = y_line;
  si.radius = inst.radius;
  si.contact = contact;
  std::unordered_map<DiskId, std::size_t> pos;
  pos.reserve(inst.disks.size());
  for (std::size_t i = 0; i < inst.disks.size(); ++i) pos.emplace(inst.disks[i].id, i);
  for (DiskId id : strip_ids) {
    const auto it = pos.find(id);
    if (it == pos.end()) throw InputError(fmt::format("disk {} is not in the instance", id));
    const Disk& d = inst.disks[it->second];
    if (!stabs_line(d, y_line, inst.radius))
      throw InputError(fmt::format("disk {} at y={} does not stab the line y={}", id, d.cy, y_line));
    (d.cy >= y_line ? si.above : si.below).push_back(d);
  }
  std::sort(si.above.begin(), si.above.end(), x_less);
  std::sort(si.below.begin(), si.below.end(), x_less);

  si.below_before.assign(si.n1() + 1, 0);
  si.above_before.assign(si.n2() + 1, 0);
  std::uint32_t seen_above = 0, seen_below = 0;
  for (const Slot& s : merged_order(si)) {
    if (s.side == Side::above) {
      si.below_before[s.pos] = seen_below;
      ++seen_above;
    } else {
      si.above_before[s.pos] = seen_above;
      ++seen_below;
    }
  }
  return si;
}

std::uint32_t RiTable::ri_above(const StabbedInstance& si, DiskId id) const {
  for (std::size_t k = 1; k <= si.n1(); ++k)
    if (si.above_at(k).id == id) return above_to_above[k];
  for (std::size_t l = 1; l <= si.n2(); ++l)
    if (si.below_at(l).id == id) return below_to_above[l];
  throw InputError(fmt::format("disk {} is not in this strip", id));
}

std::uint32_t RiTable::ri_below(const StabbedInstance& si, DiskId id) const {
  for (std::size_t k = 1; k <= si.n1(); ++k)
    if (si.above_at(k).id == id) return above_to_below[k];
  for (std::size_t l = 1; l <= si.n2(); ++l)
    if (si.below_at(l).id == id) return below_to_below[l];
  throw InputError(fmt::format("disk {} is not in this strip", id));
}

RiTable build_ri_tables(const StabbedInstance& si) {
  RiTable ri;
  ri.above_to_above.assign(si.n1() + 1, 0);
  ri.above_to_below.assign(si.n1() + 1, 0);
  ri.below_to_above.assign(si.n2() + 1, 0);
  ri.below_to_below.assign(si.n2() + 1, 0);
  for (std::uint32_t k = 1; k <= si.n1(); ++k) {
    const Disk& d = si.above_at(k);
    ri.above_to_above[k] = scan_left(si, si.above, k - 1, d);
    ri.above_to_below[k] = scan_left(si, si.below, si.below_before[k], d);
  }
  for (std::uint32_t l = 1; l <= si.n2(); ++l) {
    const Disk& d = si.below_at(l);
    ri.below_to_above[l] = scan_left(si, si.above, si.above_before[l], d);
    ri.below_to_below[l] = scan_left(si, si.below, l - 1, d);
  }
  return ri;
}

GridLayout::GridLayout(const StabbedInstance& si)
    : below_before_(si.below_before), above_off_(si.n1() + 1, 0), below_off_(si.n2() + 1, 0) {
  std::size_t cursor = 1;  // (0, 0) sits at 0
  for (const Slot& s : merged_order(si)) {
    if (s.side == Side::above) {
      above_off_[s.pos] = cursor;
      cursor += si.below_before[s.pos] + 1;
    } else {
      below_off_[s.pos] = cursor;
      cursor += si.above_before[s.pos] + 1;
    }
  }
  size_ = cursor;
}

DpTable paper_dp_table(const StabbedInstance& si, const RiTable& ri) {
  DpTable t;
  paper_dp_fill(si, ri, t);
  return t;
}

namespace {

template <class Entry>
void fill_table(const StabbedInstance& si, const RiTable& ri, const GridLayout& g, Entry* e) {
  auto value = [&](std::size_t k, std::size_t l) { return static_cast<std::int32_t>(e[g(k, l)] >> 1); };
  // Within a block, the skip predecessors that share the previous frontier's
  // block are read as a contiguous run; the rest go through the layout.
  auto fill = [&](std::size_t dst, std::size_t len, std::size_t src, std::size_t run, std::int32_t take,
                  auto&& skip_at) {
    for (std::size_t i = 0; i < len; ++i) {
      const std::int32_t skip = i < run ? static_cast<std::int32_t>(e[src + i] >> 1) : skip_at(i);
      e[dst + i] = static_cast<Entry>(take > skip ? 2 * take + 1 : 2 * skip);
    }
  };
  e[0] = 0;
  // Every dependency of a cell has a frontier strictly earlier in x order, so
  // sweeping frontier disks left to right fills the table in a valid order.
  for (const Slot& s : merged_order(si)) {
    if (s.side == Side::above) {
      const std::size_t k = s.pos;
      const std::int32_t take = value(ri.above_to_above[k], ri.above_to_below[k]) + 1;
      // Cells (k-1, l) with l <= below_before[k-1] live in block k-1.
      const std::size_t run = k > 1 ? si.below_before[k - 1] + 1 : 0;
      fill(g.above_block(k), si.below_before[k] + 1, k > 1 ? g.above_block(k - 1) : 0, run, take,
           [&](std::size_t l) { return value(k - 1, l); });
    } else {
      const std::size_t l = s.pos;
      const std::int32_t take = value(ri.below_to_above[l], ri.below_to_below[l]) + 1;
      const std::size_t run = l > 1 ? si.above_before[l - 1] + 1 : 0;
      fill(g.below_block(l), si.above_before[l] + 1, l > 1 ? g.below_block(l - 1) : 0, run, take,
           [&](std::size_t k) { return value(k, l - 1); });
    }
  }
}

}  // namespace

void paper_dp_fill(const StabbedInstance& si, const RiTable& ri, DpTable& t, bool force_wide) {
  t.n1 = si.n1();
  t.n2 = si.n2();
  t.layout = GridLayout(si);
  // Every cell is written by fill_table, so stale contents are harmless.
  if (!force_wide && 2 * si.size() + 1 <= std::numeric_limits<std::uint16_t>::max()) {
    t.wide = {};
    t.narrow.resize(t.layout.size());
    fill_table(si, ri, t.layout, t.narrow.data());
  } else {
    t.narrow = {};
    t.wide.resize(t.layout.size());
    fill_table(si, ri, t.layout, t.wide.data());
  }
}

std::vector<DiskId> reconstruct_solution(const DpTable& table, const StabbedInstance& si,
                                         const RiTable& ri) {
  std::vector<DiskId> out;
  std::size_t k = table.n1, l = table.n2;
  while (k > 0 || l > 0) {
    const bool frontier_above = table.layout.frontier_is_above(k, l);
    const bool took = table.choice(k, l) == DpTable::Choice::took_disk;
    if (frontier_above) {
      if (took) {
        out.push_back(si.above_at(k).id);
        std::tie(k, l) = std::pair<std::size_t, std::size_t>{ri.above_to_above[k], ri.above_to_below[k]};
      } else {
        --k;
      }
    } else {
      if (took) {
        out.push_back(si.below_at(l).id);
        std::tie(k, l) = std::pair<std::size_t, std::size_t>{ri.below_to_above[l], ri.below_to_below[l]};
      } else {
        --l;
      }
    }
  }
  return sorted_ids(std::move(out));
}

SolveResult paper_dp_solve(const StabbedInstance& si) {
  const auto start = Clock::now();
  const RiTable ri = build_ri_tables(si);
  // Reused across calls on a thread: the table is the dominant allocation, and
  // a fresh one per solve costs a page fault per 4 KiB once it is mmap-sized.
  thread_local DpTable table;
  paper_dp_fill(si, ri, table);
  SolveResult res;
  res.solver = SolverTag::paper_dp;
  res.selected = reconstruct_solution(table, si, ri);
  res.elapsed = Clock::now() - start;

  res.size = res.selected.size();
  if (res.size != static_cast<std::size_t>(table.value(table.n1, table.n2)))
    throw InvariantError("paper-dp reconstruction disagrees with V(n1, n2)");
  res.stats["cells"] = table.size();
  res.stats["n1"] = si.n1();
  res.stats["n2"] = si.n2();

  Instance strip{{}, si.radius};
  strip.disks.reserve(si.size());
  strip.disks.insert(strip.disks.end(), si.above.begin(), si.above.end());
  strip.disks.insert(strip.disks.end(), si.below.begin(), si.below.end());
  res.verified = verify_independent(strip, res.selected, si.contact);
  return res;
}

SolveResult pair_state_dp_solve(const StabbedInstance& si) {
  const auto start = Clock::now();
  const GridLayout at(si);
  constexpr std::int32_t kNone = -1;

  // best[a][b]: largest independent set whose rightmost above disk is a and
  // rightmost below disk is b (0 = none on that side).
  std::vector<std::int32_t> best(at.size(), kNone);
  // Prefix maxima of best along a (fixed b) and along b (fixed a).
  std::vector<std::int32_t> pre_a(best.size(), kNone), pre_b(best.size(), kNone);

  best[0] = pre_a[0] = pre_b[0] = 0;
  const auto far_a = far_prefix(si.above, si.radius);
  const auto far_b = far_prefix(si.below, si.radius);
  std::uint64_t window_tests = 0;

  // The first cell in sweep order to reach the maximum is reported.
  std::size_t top_a = 0, top_b = 0;
  std::int32_t top = 0;
  auto finish_cell = [&](std::size_t a, std::size_t b, std::int32_t v) {
    const std::size_t c = at(a, b);
    best[c] = v;
    if (v > top) {
      top = v;
      top_a = a;
      top_b = b;
    }
    pre_a[c] = a == 0 ? v : std::max(pre_a[at(a - 1, b)], v);
    pre_b[c] = b == 0 ? v : std::max(pre_b[at(a, b - 1)], v);
  };

  for (const Slot& s : merged_order(si)) {
    if (s.side == Side::above) {
      const std::size_t k = s.pos;
      const Disk& d = si.above_at(k);
      for (std::size_t b = 0; b <= si.below_before[k]; ++b) {
        std::int32_t v = kNone;
        if (b == 0 || !si.adjacent(d, si.below_at(b))) {
          std::int32_t prev = pre_a[at(far_a[k], b)];
          for (std::size_t a = far_a[k] + 1; a < k; ++a) {
            ++window_tests;
            if (best[at(a, b)] > prev && !si.adjacent(si.above_at(a), d)) prev = best[at(a, b)];
          }
          if (prev != kNone) v = prev + 1;
        }
        finish_cell(k, b, v);
      }
    } else {
      const std::size_t l = s.pos;
      const Disk& d = si.below_at(l);
      for (std::size_t a = 0; a <= si.above_before[l]; ++a) {
        std::int32_t v = kNone;
        if (a == 0 || !si.adjacent(d, si.above_at(a))) {
          std::int32_t prev = pre_b[at(a, far_b[l])];
          for (std::size_t b = far_b[l] + 1; b < l; ++b) {
            ++window_tests;
            if (best[at(a, b)] > prev && !si.adjacent(si.below_at(b), d)) prev = best[at(a, b)];
          }
          if (prev != kNone) v = prev + 1;
        }
        finish_cell(a, l, v);
      }
    }
  }

  std::size_t a = top_a, b = top_b;
  std::vector<DiskId> chosen;
  while (a > 0 || b > 0) {
    const std::int32_t want = best[at(a, b)] - 1;
    if (at.frontier_is_above(a, b)) {
      const Disk& d = si.above_at(a);
      chosen.push_back(d.id);
      std::size_t p = a - 1;
      while (p > 0 && !(best[at(p, b)] == want && !si.adjacent(si.above_at(p), d))) --p;
      a = p;
    } else {
      const Disk& d = si.below_at(b);
      chosen.push_back(d.id);
      std::size_t p = b - 1;
      while (p > 0 && !(best[at(a, p)] == want && !si.adjacent(si.below_at(p), d))) --p;
      b = p;
    }
    if (best[at(a, b)] != want)
      throw InvariantError("pair-dp back-pointer walk lost the optimum");
  }

  SolveResult res;
  res.solver = SolverTag::pair_dp;
  res.selected = sorted_ids(std::move(chosen));
  res.size = res.selected.size();
  res.elapsed = Clock::now() - start;
  res.stats["cells"] = best.size();
  res.stats["window_tests"] = window_tests;

  Instance strip{{}, si.radius};
  strip.disks.reserve(si.size());
  strip.disks.insert(strip.disks.end(), si.above.begin(), si.above.end());
  strip.disks.insert(strip.disks.end(), si.below.begin(), si.below.end());
  if (!verify_independent(strip, res.selected, si.contact))
    throw InvariantError("pair-dp produced a dependent set");
  res.verified = true;
  return res;
}

}  // namespace udmis
