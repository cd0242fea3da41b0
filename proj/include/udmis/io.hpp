#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udmis/geometry.hpp"

namespace udmis {

// JSON: {"radius": r, "disks": [{"id": i, "x": x, "y": y}, ...]}. Missing ids
// become the disk's position in the list.
Instance read_instance_json(std::istream& in);
void write_instance_json(std::ostream& out, const Instance& inst);

// CSV: one "x,y" per line. Blank lines and lines starting with '#' are
// skipped; ids count data lines from 0. The radius is not stored.
Instance read_instance_csv(std::istream& in, double radius);
void write_instance_csv(std::ostream& out, const Instance& inst);

/// Dispatches on extension: ".csv" is CSV (needs `radius`), anything else JSON.
Instance read_instance(const std::filesystem::path& path, std::optional<double> radius = {});
void write_instance(const std::filesystem::path& path, const Instance& inst);

void write_result_json(std::ostream& out, const std::string& algo, const SolveResult& res);
/// The "selected" array of a result file.
std::vector<DiskId> read_result_ids(const std::filesystem::path& path);

}  // namespace udmis
