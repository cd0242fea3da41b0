#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace udmis {

using DiskId = std::uint32_t;

/// Malformed or out-of-contract user input (bad file, unknown id, bad flag).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant. Seeing one means a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Disk {
  DiskId id = 0;
  double cx = 0.0;
  double cy = 0.0;

  friend bool operator==(const Disk&, const Disk&) = default;
};

/// Equal-radius disks; the implicit vertex set of a unit disk graph.
struct Instance {
  std::vector<Disk> disks;
  double radius = 0.5;

  /// Position of `id` in `disks`. Throws InputError for unknown ids.
  std::size_t index_of(DiskId id) const;
  const Disk& disk(DiskId id) const { return disks[index_of(id)]; }
  bool contains(DiskId id) const;

  /// Throws InputError if the radius is not positive, a coordinate is not
  /// finite, or two disks share an id.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Whether two disks at exactly one diameter apart are adjacent.
/// Open: tangent disks are independent (default). Closed: tangent disks touch.
enum class Contact { open, closed };

double dist_sq(const Disk& a, const Disk& b);

/// Edge test of the unit disk graph. Throws InputError when both arguments
/// carry the same id.
bool adjacent(const Disk& a, const Disk& b, double r, Contact contact = Contact::open);

/// Closed test: a disk tangent to the line stabs it.
bool stabs_line(const Disk& d, double y_line, double r);

/// True iff no two of `ids` are adjacent. Throws InputError on unknown ids.
bool verify_independent(const Instance& inst, std::span<const DiskId> ids,
                        Contact contact = Contact::open);

/// Total order on disks: by x, then y, then id.
inline auto x_order_key(const Disk& d) { return std::tuple{d.cx, d.cy, d.id}; }
inline bool x_less(const Disk& a, const Disk& b) { return x_order_key(a) < x_order_key(b); }

Instance scale(const Instance& inst, double c);

/// Dense n x n adjacency matrix in `disks` order.
std::vector<std::vector<bool>> adjacency_matrix(const Instance& inst,
                                                Contact contact = Contact::open);

enum class SolverTag { paper_dp, pair_dp, brute, approx2 };

std::string to_string(SolverTag tag);

struct SolveResult {
  std::vector<DiskId> selected;  // sorted ascending
  std::size_t size = 0;
  SolverTag solver = SolverTag::pair_dp;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::map<std::string, std::uint64_t> stats;
  // False when the selected set failed (or skipped) the independence check.
  bool verified = false;
};

}  // namespace udmis
