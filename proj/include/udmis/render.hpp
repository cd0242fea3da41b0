#pragma once

#include <optional>
#include <span>
#include <string>

#include "udmis/geometry.hpp"
#include "udmis/strips.hpp"

namespace udmis {

/// Static SVG: one circle per disk at true scale (y up), selected disks
/// filled, stabbing lines dashed when given. Throws InputError if a selected
/// id is not in the instance.
std::string render_svg(const Instance& inst, std::optional<std::span<const DiskId>> selected = {},
                       const StripAssignment* strips = nullptr);

}  // namespace udmis
