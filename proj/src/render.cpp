#include "udmis/render.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

namespace udmis {

std::string render_svg(const Instance& inst, std::optional<std::span<const DiskId>> selected,
                       const StripAssignment* strips) {
  std::unordered_set<DiskId> chosen;
  if (selected) {
    for (DiskId id : *selected) {
      if (!inst.contains(id)) throw InputError(fmt::format("result selects unknown disk {}", id));
      chosen.insert(id);
    }
  }

  const double r = inst.radius;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!inst.disks.empty()) {
    x0 = y0 = std::numeric_limits<double>::infinity();
    x1 = y1 = -x0;
    for (const Disk& d : inst.disks) {
      x0 = std::min(x0, d.cx - r);
      x1 = std::max(x1, d.cx + r);
      y0 = std::min(y0, d.cy - r);
      y1 = std::max(y1, d.cy + r);
    }
    const double pad = 0.5 * r;
    x0 -= pad;
    x1 += pad;
    y0 -= pad;
    y1 += pad;
  }
  const double w = x1 - x0, h = y1 - y0;
  const double stroke = r > 0 ? r / 20.0 : 0.01;

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"800\" "
      "height=\"{}\">\n",
      x0, -y1, w, h, static_cast<int>(800.0 * h / w + 0.5));
  svg += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", x0, -y1, w, h);

  if (strips) {
    for (double ly : strips->line_ys)
      svg += fmt::format(
          "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-width=\"{}\" "
          "stroke-dasharray=\"{} {}\"/>\n",
          x0, -ly, x1, -ly, stroke, 4 * stroke, 2 * stroke);
  }
  for (const Disk& d : inst.disks) {
    const bool on = chosen.count(d.id) != 0;
    svg += fmt::format(
        "<circle id=\"d{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" fill-opacity=\"{}\" "
        "stroke=\"black\" stroke-width=\"{}\"/>\n",
        d.id, d.cx, -d.cy, r, on ? "steelblue" : "none", on ? "0.6" : "1", stroke);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace udmis
