#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "udmis/strips.hpp"

using namespace udmis;

namespace {

Instance from_ys(std::initializer_list<double> ys, double r = 0.5) {
  Instance inst{{}, r};
  DiskId id = 0;
  for (double y : ys) {
    inst.disks.push_back({id, static_cast<double>(id), y});
    ++id;
  }
  return inst;
}

void check_partition(const StripAssignment& sa, const Instance& inst) {
  std::size_t total = 0;
  for (const auto& s : sa.strips) total += s.size();
  REQUIRE(total == inst.disks.size());
  REQUIRE(sa.assignment.size() == inst.disks.size());
  for (std::size_t i = 0; i < sa.strips.size(); ++i)
    for (DiskId id : sa.strips[i]) REQUIRE(sa.assignment.at(id) == i);
  for (const Disk& d : inst.disks)
    REQUIRE(stabs_line(d, sa.line_ys[sa.assignment.at(d.id)], inst.radius));
  for (std::size_t i = 1; i < sa.line_ys.size(); ++i) REQUIRE(sa.line_ys[i] < sa.line_ys[i - 1]);
}

}  // namespace

TEST_CASE("decompose: three lines, nearest assignment") {
  const Instance inst = from_ys({0.4, -0.3, -1.7});
  const StripAssignment sa = decompose(inst);
  REQUIRE(sa.line_count() == 3);
  CHECK(sa.line_ys[0] == doctest::Approx(0.4));
  CHECK(sa.line_ys[1] == doctest::Approx(-0.6));
  CHECK(sa.line_ys[2] == doctest::Approx(-1.6));
  CHECK(sa.assignment.at(0) == 0);
  CHECK(sa.assignment.at(1) == 1);
  CHECK(sa.assignment.at(2) == 2);
  check_partition(sa, inst);
}

TEST_CASE("decompose: single disk and empty instance") {
  const StripAssignment one = decompose(from_ys({2.5}));
  REQUIRE(one.line_count() == 1);
  CHECK(one.line_ys[0] == 2.5);
  CHECK(one.assignment.at(0) == 0);

  const StripAssignment none = decompose(Instance{{}, 0.5});
  CHECK(none.line_count() == 0);
  CHECK(none.strips.empty());
}

TEST_CASE("decompose: midway center goes to the upper line") {
  const Instance inst = from_ys({1.0, 0.5});  // 0.5 = L1 - r
  const StripAssignment sa = decompose(inst);
  CHECK(sa.assignment.at(1) == 0);
  CHECK(sa.line_count() == 1);
}

TEST_CASE("decompose: empty strips are kept") {
  const Instance inst = from_ys({0.0, -3.0});
  const StripAssignment sa = decompose(inst);
  REQUIRE(sa.line_count() == 4);
  CHECK(sa.strips[1].empty());
  CHECK(sa.strips[2].empty());
  CHECK(sa.assignment.at(1) == 3);
}

TEST_CASE("decompose: lowest center beyond the last whole step still stabs a line") {
  // Range 1.6 with r = 0.5 needs a third line at -2.0 for the center at -1.6.
  const Instance inst = from_ys({0.0, -1.6});
  const StripAssignment sa = decompose(inst);
  CHECK(sa.line_count() == 3);
  check_partition(sa, inst);
}

TEST_CASE("decompose: partition, stabbing and determinism on random data") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const double r = 0.1 + 2.0 * std::uniform_real_distribution<double>(0, 1)(rng);
    const Instance inst = oracle::random_box(rng, 300, 40 * r, 40 * r, r);
    const StripAssignment sa = decompose(inst);
    check_partition(sa, inst);
    const StripAssignment again = decompose(inst);
    CHECK(again.strips == sa.strips);
    CHECK(again.line_ys == sa.line_ys);
  }
}

TEST_CASE("check_observation1") {
  const Instance two = Instance{{{0, 0, 0}, {1, 0, -2.0}}, 0.5};
  const StripAssignment sa = decompose(two);
  CHECK(sa.assignment.at(1) == 2);
  CHECK(check_observation1(sa, two));

  const Instance flat = from_ys({0.1, 0.2, -0.1});
  CHECK(check_observation1(decompose(flat), flat));

  std::mt19937_64 rng(99);
  const Instance big = oracle::random_box(rng, 1000, 20, 20);
  CHECK(check_observation1(decompose(big), big));

  // A hand-built assignment that violates the property is caught.
  StripAssignment bad;
  bad.line_ys = {0.0, -1.0, -2.0};
  bad.strips = {{0}, {}, {1}};
  bad.assignment = {{0, 0}, {1, 2}};
  const Instance close{{{0, 0, 0}, {1, 0.5, 0}}, 0.5};
  CHECK_FALSE(check_observation1(bad, close));
}
