#pragma once

#include <unordered_map>
#include <vector>

#include "udmis/geometry.hpp"

namespace udmis {

/// Horizontal stabbing lines one diameter apart, top to bottom, with every
/// disk assigned to exactly one of them. Strip index 0 is the topmost line.
struct StripAssignment {
  std::vector<double> line_ys;              // strictly decreasing
  std::vector<std::vector<DiskId>> strips;  // strips[i] holds the disks of line i, input order
  std::unordered_map<DiskId, std::size_t> assignment;

  std::size_t line_count() const { return line_ys.size(); }
};

/// Lines start at the highest center and step down by 2r. Each disk goes to
/// its nearest line; a disk midway between two lines goes to the upper one.
/// Empty strips are kept so that strip parity follows geometry.
StripAssignment decompose(const Instance& inst);

/// Pairwise scan: no adjacent pair sits in strips more than one apart.
bool check_observation1(const StripAssignment& sa, const Instance& inst,
                        Contact contact = Contact::open);

}  // namespace udmis
