#include "udmis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

namespace udmis {

std::size_t Instance::index_of(DiskId id) const {
  auto it = std::find_if(disks.begin(), disks.end(), [id](const Disk& d) { return d.id == id; });
  if (it == disks.end()) throw InputError(fmt::format("unknown disk id {}", id));
  return static_cast<std::size_t>(it - disks.begin());
}

bool Instance::contains(DiskId id) const {
  return std::any_of(disks.begin(), disks.end(), [id](const Disk& d) { return d.id == id; });
}

void Instance::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InputError(fmt::format("radius must be positive and finite, got {}", radius));
  std::unordered_set<DiskId> seen;
  seen.reserve(disks.size());
  for (const Disk& d : disks) {
    if (!std::isfinite(d.cx) || !std::isfinite(d.cy))
      throw InputError(fmt::format("disk {} has a non-finite coordinate", d.id));
    if (!seen.insert(d.id).second) throw InputError(fmt::format("duplicate disk id {}", d.id));
  }
}

double dist_sq(const Disk& a, const Disk& b) {
  const double dx = a.cx - b.cx;
  const double dy = a.cy - b.cy;
  return dx * dx + dy * dy;
}

bool adjacent(const Disk& a, const Disk& b, double r, Contact contact) {
  if (a.id == b.id) throw InputError(fmt::format("adjacency of disk {} with itself", a.id));
  const double diameter_sq = (2.0 * r) * (2.0 * r);
  const double d2 = dist_sq(a, b);
  return contact == Contact::open ? d2 < diameter_sq : d2 <= diameter_sq;
}

bool stabs_line(const Disk& d, double y_line, double r) { return std::abs(d.cy - y_line) <= r; }

bool verify_independent(const Instance& inst, std::span<const DiskId> ids, Contact contact) {
  std::unordered_map<DiskId, std::size_t> where;
  where.reserve(inst.disks.size());
  for (std::size_t i = 0; i < inst.disks.size(); ++i) where.emplace(inst.disks[i].id, i);

  std::vector<const Disk*> chosen;
  chosen.reserve(ids.size());
  for (DiskId id : ids) {
    auto it = where.find(id);
    if (it == where.end()) throw InputError(fmt::format("unknown disk id {}", id));
    chosen.push_back(&inst.disks[it->second]);
  }
  // Sweep in x so only pairs closer than a diameter horizontally are tested.
  std::sort(chosen.begin(), chosen.end(),
            [](const Disk* a, const Disk* b) { return x_less(*a, *b); });
  const double reach_sq = (2.0 * inst.radius) * (2.0 * inst.radius);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      const double dx = chosen[j]->cx - chosen[i]->cx;
      if (dx * dx > reach_sq) break;
      if (chosen[i]->id == chosen[j]->id) return false;  // a repeated id is not a set
      if (adjacent(*chosen[i], *chosen[j], inst.radius, contact)) return false;
    }
  }
  return true;
}

Instance scale(const Instance& inst, double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw InputError(fmt::format("scale factor must be positive, got {}", c));
  Instance out = inst;
  out.radius *= c;
  for (Disk& d : out.disks) {
    d.cx *= c;
    d.cy *= c;
  }
  return out;
}

std::vector<std::vector<bool>> adjacency_matrix(const Instance& inst, Contact contact) {
  const std::size_t n = inst.disks.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m[i][j] = m[j][i] = adjacent(inst.disks[i], inst.disks[j], inst.radius, contact);
  return m;
}

std::string to_string(SolverTag tag) {
  switch (tag) {
    case SolverTag::paper_dp: return "paper-dp";
    case SolverTag::pair_dp: return "pair-dp";
    case SolverTag::brute: return "brute";
    case SolverTag::approx2: return "approx2";
  }
  return "unknown";
}

}  // namespace udmis
