#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "udmis/geometry.hpp"

namespace udmis {

enum class GenMode { uniform, clustered, stabbed };

GenMode parse_gen_mode(const std::string& s);
std::string to_string(GenMode m);

struct GenParams {
  GenMode mode = GenMode::uniform;
  std::size_t n = 0;
  double width = 10.0;   // box width, or x-extent in stabbed mode
  double height = 10.0;  // ignored in stabbed mode
  double radius = 0.5;
  std::uint64_t seed = 1;
  std::optional<double> min_sep;  // defaults to 1e-6 * radius
  std::size_t clusters = 0;       // 0: one cluster per 8 disks
  std::optional<double> cluster_sigma;  // defaults to 2 * radius

  double effective_min_sep() const { return min_sep.value_or(1e-6 * radius); }
};

/// Deterministic for fixed parameters. Stabbed mode places centers with
/// x in [0, width] and y in [-r, r], so every disk stabs y = 0. A center
/// closer than min_sep to an earlier one is resampled; InputError after
/// repeated failures.
Instance generate(const GenParams& p);

}  // namespace udmis
