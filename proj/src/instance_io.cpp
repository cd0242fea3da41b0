#include "udmis/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace udmis {

namespace {

using json = nlohmann::ordered_json;

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string position_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
  const auto nl = text.rfind('\n', byte == 0 ? 0 : byte - 1);
  const std::size_t col = nl == std::string::npos ? byte : byte - nl - 1;
  return fmt::format("line {}, column {}", line, col);
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(fmt::format("{}: expected a number", where));
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(fmt::format("{}: not finite", where));
  return v;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view s, std::size_t line) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw InputError(fmt::format("line {}: cannot parse '{}' as a number", line, s));
  if (!std::isfinite(v)) throw InputError(fmt::format("line {}: non-finite coordinate", line));
  return v;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
  return in;
}

bool is_csv(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv";
}

}  // namespace

Instance read_instance_json(std::istream& in) {
  const std::string text = slurp(in);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("malformed JSON at {}: {}", position_of(text, e.byte), e.what()));
  }
  if (!doc.is_object()) throw InputError("instance JSON must be an object");
  if (!doc.contains("radius")) throw InputError("instance JSON lacks \"radius\"");
  if (!doc.contains("disks") || !doc["disks"].is_array())
    throw InputError("instance JSON lacks a \"disks\" array");

  Instance inst;
  inst.radius = finite_number(doc["radius"], "radius");
  const json& disks = doc["disks"];
  inst.disks.reserve(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const json& d = disks[i];
    const std::string where = fmt::format("disks[{}]", i);
    if (!d.is_object()) throw InputError(where + ": expected an object");
    if (!d.contains("x") || !d.contains("y")) throw InputError(where + ": needs \"x\" and \"y\"");
    Disk disk;
    disk.id = static_cast<DiskId>(i);
    if (d.contains("id")) {
      const json& id = d["id"];
      if (!id.is_number_integer() || id.get<std::int64_t>() < 0 ||
          id.get<std::int64_t>() > std::numeric_limits<DiskId>::max())
        throw InputError(where + ".id: expected a non-negative integer");
      disk.id = static_cast<DiskId>(id.get<std::int64_t>());
    }
    disk.cx = finite_number(d["x"], where + ".x");
    disk.cy = finite_number(d["y"], where + ".y");
    inst.disks.push_back(disk);
  }
  inst.validate();
  return inst;
}

void write_instance_json(std::ostream& out, const Instance& inst) {
  json doc;
  doc["radius"] = inst.radius;
  json disks = json::array();
  for (const Disk& d : inst.disks) disks.push_back({{"id", d.id}, {"x", d.cx}, {"y", d.cy}});
  doc["disks"] = std::move(disks);
  out << doc.dump(1) << '\n';
}

Instance read_instance_csv(std::istream& in, double radius) {
  Instance inst;
  inst.radius = radius;
  std::string raw;
  std::size_t line = 0;
  DiskId next = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto comma = s.find(',');
    if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos)
      throw InputError(fmt::format("line {}: expected \"x,y\"", line));
    inst.disks.push_back({next++, parse_double(s.substr(0, comma), line),
                          parse_double(s.substr(comma + 1), line)});
  }
  inst.validate();
  return inst;
}

void write_instance_csv(std::ostream& out, const Instance& inst) {
  for (const Disk& d : inst.disks) out << fmt::format("{},{}\n", d.cx, d.cy);
}

Instance read_instance(const std::filesystem::path& path, std::optional<double> radius) {
  auto in = open_in(path);
  if (is_csv(path)) {
    if (!radius)
      throw InputError(fmt::format(
          "'{}' is CSV and carries no radius; pass it with --radius R", path.string()));
    return read_instance_csv(in, *radius);
  }
  return read_instance_json(in);
}

void write_instance(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(fmt::format("cannot write '{}'", path.string()));
  if (is_csv(path))
    write_instance_csv(out, inst);
  else
    write_instance_json(out, inst);
}

void write_result_json(std::ostream& out, const std::string& algo, const SolveResult& res) {
  json doc;
  doc["algo"] = algo;
  doc["size"] = res.size;
  doc["selected"] = res.selected;
  doc["elapsed_ms"] = res.elapsed.count();
  doc["verified_independent"] = res.verified;
  out << doc.dump(1) << '\n';
}

std::vector<DiskId> read_result_ids(const std::filesystem::path& path) {
  auto in = open_in(path);
  const std::string text = slurp(in);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("malformed result JSON at {}: {}", position_of(text, e.byte), e.what()));
  }
  if (!doc.is_object() || !doc.contains("selected") || !doc["selected"].is_array())
    throw InputError("result JSON lacks a \"selected\" array");
  std::vector<DiskId> ids;
  for (const json& v : doc["selected"]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw InputError("result JSON \"selected\" must hold non-negative integers");
    ids.push_back(static_cast<DiskId>(v.get<std::int64_t>()));
  }
  return ids;
}

}  // namespace udmis
