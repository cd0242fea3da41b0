#include "udmis/generate.hpp"

#include <cmath>
#include <random>
#include <unordered_map>
#include <vector>

#include <fmt/format.h>

namespace udmis {

namespace {

constexpr int kMaxTries = 1000;

// Hash grid with cell size min_sep; a conflicting center lies in the 3x3 block.
class SeparationGrid {
 public:
  explicit SeparationGrid(double sep) : sep_(sep), sep_sq_(sep * sep) {}

  bool accepts(double x, double y) const {
    if (sep_ <= 0.0) return true;
    const auto [cx, cy] = cell(x, y);
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const auto& [px, py] : it->second) {
          const double ddx = px - x, ddy = py - y;
          if (ddx * ddx + ddy * ddy < sep_sq_) return false;
        }
      }
    return true;
  }

  void insert(double x, double y) {
    if (sep_ <= 0.0) return;
    const auto [cx, cy] = cell(x, y);
    cells_[key(cx, cy)].emplace_back(x, y);
  }

 private:
  std::pair<std::int64_t, std::int64_t> cell(double x, double y) const {
    return {static_cast<std::int64_t>(std::floor(x / sep_)),
            static_cast<std::int64_t>(std::floor(y / sep_))};
  }
  static std::uint64_t key(std::int64_t a, std::int64_t b) {
    return (static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ULL) ^ static_cast<std::uint64_t>(b);
  }

  double sep_, sep_sq_;
  // Keys may collide; entries are still compared by true distance.
  std::unordered_map<std::uint64_t, std::vector<std::pair<double, double>>> cells_;
};

}  // namespace

GenMode parse_gen_mode(const std::string& s) {
  if (s == "uniform") return GenMode::uniform;
  if (s == "clustered") return GenMode::clustered;
  if (s == "stabbed" || s == "stabbed-line") return GenMode::stabbed;
  throw InputError(fmt::format("unknown generator mode '{}'", s));
}

std::string to_string(GenMode m) {
  switch (m) {
    case GenMode::uniform: return "uniform";
    case GenMode::clustered: return "clustered";
    case GenMode::stabbed: return "stabbed";
  }
  return "unknown";
}

Instance generate(const GenParams& p) {
  if (!(p.radius > 0.0) || !std::isfinite(p.radius)) throw InputError("radius must be positive");
  if (!(p.width > 0.0) || !std::isfinite(p.width)) throw InputError("width must be positive");
  if (p.mode != GenMode::stabbed && (!(p.height > 0.0) || !std::isfinite(p.height)))
    throw InputError("height must be positive");
  const double sep = p.effective_min_sep();
  if (!(sep >= 0.0) || !std::isfinite(sep)) throw InputError("min_sep must be non-negative");

  std::mt19937_64 rng(p.seed);
  const double r = p.radius;
  Instance inst;
  inst.radius = r;
  inst.disks.reserve(p.n);

  std::uniform_real_distribution<double> ux(0.0, p.width), uy(0.0, p.height), ustab(-r, r);

  std::vector<std::pair<double, double>> hubs;
  std::normal_distribution<double> offset(0.0, p.cluster_sigma.value_or(2.0 * r));
  if (p.mode == GenMode::clustered) {
    const std::size_t c = p.clusters ? p.clusters : std::max<std::size_t>(1, p.n / 8);
    for (std::size_t i = 0; i < c; ++i) {
      const double hx = ux(rng);
      hubs.emplace_back(hx, uy(rng));
    }
  }
  std::uniform_int_distribution<std::size_t> pick_hub(0, hubs.empty() ? 0 : hubs.size() - 1);

  SeparationGrid grid(sep);
  for (std::size_t i = 0; i < p.n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxTries && !placed; ++attempt) {
      double x = 0.0, y = 0.0;
      switch (p.mode) {
        case GenMode::uniform:
          x = ux(rng);
          y = uy(rng);
          break;
        case GenMode::stabbed:
          x = ux(rng);
          y = ustab(rng);
          break;
        case GenMode::clustered: {
          const auto& [hx, hy] = hubs[pick_hub(rng)];
          x = hx + offset(rng);
          y = hy + offset(rng);
          break;
        }
      }
      if (grid.accepts(x, y)) {
        grid.insert(x, y);
        inst.disks.push_back({static_cast<DiskId>(i), x, y});
        placed = true;
      }
    }
    if (!placed)
      throw InputError(fmt::format("cannot place disk {} at min_sep {} after {} tries", i, sep,
                                   kMaxTries));
  }
  return inst;
}

}  // namespace udmis
