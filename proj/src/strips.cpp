#include "udmis/strips.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

namespace udmis {

namespace {

double line_y(double top, double step, std::size_t i) { return top - step * static_cast<double>(i); }

std::size_t nearest_line(const Disk& d, double top, double r) {
  const double step = 2.0 * r;
  const double t = (top - d.cy) / step;
  // ceil(t - 1/2) rounds half-way positions toward the upper line.
  auto idx = static_cast<std::ptrdiff_t>(std::ceil(t - 0.5));
  idx = std::max<std::ptrdiff_t>(idx, 0);
  // Rounding in t can land one line off; settle on a line the disk stabs.
  for (std::ptrdiff_t probe : {idx, idx - 1, idx + 1}) {
    if (probe < 0) continue;
    if (stabs_line(d, line_y(top, step, static_cast<std::size_t>(probe)), r))
      return static_cast<std::size_t>(probe);
  }
  throw InvariantError(fmt::format("disk {} stabs no strip line", d.id));
}

}  // namespace

StripAssignment decompose(const Instance& inst) {
  StripAssignment sa;
  if (inst.disks.empty()) return sa;

  const double r = inst.radius;
  const double top =
      std::max_element(inst.disks.begin(), inst.disks.end(),
                       [](const Disk& a, const Disk& b) { return a.cy < b.cy; })
          ->cy;

  std::vector<std::size_t> idx(inst.disks.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < inst.disks.size(); ++i) {
    idx[i] = nearest_line(inst.disks[i], top, r);
    k = std::max(k, idx[i] + 1);
  }

  sa.line_ys.reserve(k);
  for (std::size_t i = 0; i < k; ++i) sa.line_ys.push_back(line_y(top, 2.0 * r, i));
  sa.strips.resize(k);
  sa.assignment.reserve(inst.disks.size());
  for (std::size_t i = 0; i < inst.disks.size(); ++i) {
    sa.strips[idx[i]].push_back(inst.disks[i].id);
    sa.assignment.emplace(inst.disks[i].id, idx[i]);
  }
  return sa;
}

bool check_observation1(const StripAssignment& sa, const Instance& inst, Contact contact) {
  const auto& ds = inst.disks;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::size_t si = sa.assignment.at(ds[i].id);
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      const std::size_t sj = sa.assignment.at(ds[j].id);
      const std::size_t gap = si > sj ? si - sj : sj - si;
      if (gap > 1 && adjacent(ds[i], ds[j], inst.radius, contact)) return false;
    }
  }
  return true;
}

}  // namespace udmis
