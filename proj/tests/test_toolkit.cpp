#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "udmis/generate.hpp"
#include "udmis/harness.hpp"
#include "udmis/io.hpp"
#include "udmis/line_solvers.hpp"
#include "udmis/render.hpp"

using namespace udmis;

namespace {

std::string json_of(const Instance& inst) {
  std::ostringstream os;
  write_instance_json(os, inst);
  return os.str();
}

Instance parse_json(const std::string& s) {
  std::istringstream is(s);
  return read_instance_json(is);
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("generate: empty, deterministic, stabbed") {
  GenParams p;
  p.n = 0;
  CHECK(generate(p).disks.empty());

  p.n = 50;
  p.seed = 9;
  CHECK(json_of(generate(p)) == json_of(generate(p)));
  GenParams q = p;
  q.seed = 10;
  CHECK(json_of(generate(q)) != json_of(generate(p)));

  for (GenMode m : {GenMode::uniform, GenMode::clustered, GenMode::stabbed}) {
    p.mode = m;
    const Instance inst = generate(p);
    CHECK(inst.disks.size() == 50);
    CHECK_NOTHROW(inst.validate());
    if (m == GenMode::stabbed)
      for (const Disk& d : inst.disks) CHECK(stabs_line(d, 0.0, p.radius));
  }
}

TEST_CASE("generate: min_sep is enforced or refused") {
  GenParams p;
  p.n = 100;
  p.width = p.height = 10;
  p.min_sep = 0.5;
  const Instance inst = generate(p);
  for (std::size_t i = 0; i < inst.disks.size(); ++i)
    for (std::size_t j = i + 1; j < inst.disks.size(); ++j)
      REQUIRE(dist_sq(inst.disks[i], inst.disks[j]) >= 0.25);

  p.width = p.height = 1;
  p.min_sep = 0.9;
  CHECK_THROWS_AS(generate(p), InputError);

  GenParams bad;
  bad.radius = 0;
  CHECK_THROWS_AS(generate(bad), InputError);
  CHECK_THROWS_AS(parse_gen_mode("hex"), InputError);
}

TEST_CASE("instance JSON round trip and auto ids") {
  GenParams p;
  p.n = 30;
  p.mode = GenMode::clustered;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    const Instance inst = generate(p);
    REQUIRE(parse_json(json_of(inst)) == inst);
  }
  const Instance auto_ids = parse_json(R"({"radius": 1, "disks": [{"x": 0, "y": 0}, {"x": 3, "y": 1.5}]})");
  CHECK(auto_ids.disks[1].id == 1);
  CHECK(auto_ids.disks[1].cy == 1.5);
}

TEST_CASE("instance JSON errors") {
  CHECK_THROWS_AS(parse_json(R"({"radius": 1, "disks": [{"id": 1, "x": 0, "y": 0}, {"id": 1, "x": 2, "y": 0}]})"),
                  InputError);
  CHECK_THROWS_AS(parse_json(R"({"radius": -1, "disks": []})"), InputError);
  CHECK_THROWS_AS(parse_json(R"({"disks": []})"), InputError);
  CHECK_THROWS_AS(parse_json(R"({"radius": 1, "disks": [{"x": "a", "y": 0}]})"), InputError);
  CHECK_THROWS_AS(parse_json(R"({"radius": 1, "disks": [{"id": -3, "x": 0, "y": 0}]})"), InputError);
  try {
    parse_json("{\"radius\": 1,\n \"disks\": [ oops ]}");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("instance CSV") {
  std::istringstream is("# centers\n0,0\n\n1.5, -2\n+3,4e-1\n");
  const Instance inst = read_instance_csv(is, 0.5);
  REQUIRE(inst.disks.size() == 3);
  CHECK(inst.disks[1] == Disk{1, 1.5, -2.0});
  CHECK(inst.disks[2].cy == 0.4);

  std::ostringstream os;
  write_instance_csv(os, inst);
  std::istringstream back(os.str());
  CHECK(read_instance_csv(back, 0.5) == inst);

  std::istringstream bad("0,0\n1;2\n");
  try {
    read_instance_csv(bad, 0.5);
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream nonfinite("nan,0\n");
  CHECK_THROWS_AS(read_instance_csv(nonfinite, 0.5), InputError);

  const auto dir = std::filesystem::temp_directory_path() / "udmis_csv_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "pts.csv";
  write_instance(path, inst);
  CHECK_THROWS_WITH_AS(read_instance(path), doctest::Contains("--radius"), InputError);
  CHECK(read_instance(path, 0.5) == inst);
  std::filesystem::remove_all(dir);
}

TEST_CASE("result JSON") {
  SolveResult r;
  r.selected = {1, 4, 9};
  r.size = 3;
  r.verified = true;
  const auto dir = std::filesystem::temp_directory_path() / "udmis_result_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "r.json";
  {
    std::ofstream out(path);
    write_result_json(out, "brute", r);
  }
  CHECK(read_result_ids(path) == r.selected);
  std::ifstream in(path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  CHECK(text.find("\"verified_independent\": true") != std::string::npos);
  CHECK(text.find("\"elapsed_ms\"") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("differential_test") {
  GenParams p;
  p.n = 12;
  p.width = 6;
  p.seed = 100;
  CHECK(differential_test(p, 0).empty());

  const auto reps = differential_test(p, 60, DiffMode::stabbed, 1);
  REQUIRE(reps.size() == 60);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(reps[i].seed == 100 + i);
    CHECK(reps[i].pair_dp_match);
    CHECK(reps[i].paper_dp >= reps[i].brute);
    CHECK(reps[i].factor2_holds);
    CHECK(reps[i].n >= 1);
    CHECK(reps[i].n <= 12);
  }

  p.width = p.height = 3;
  p.mode = GenMode::uniform;
  for (const DiffReport& r : differential_test(p, 30, DiffMode::general, 1)) {
    CHECK(r.pair_dp_match);
    CHECK(r.factor2_holds);
    CHECK(r.pair_dp >= r.brute);
  }

  const DiffReport c = diff_instance(counterexample_cstar(), DiffMode::stabbed);
  CHECK(c.paper_dp == 3);
  CHECK(c.brute == 2);
  CHECK(c.paper_dp_overcount);
  CHECK(c.paper_dp_infeasible_reconstruction);
  CHECK(c.pair_dp_match);

  p.n = 41;
  CHECK_THROWS_AS(differential_test(p, 1), InputError);

  std::ostringstream os;
  write_diff_csv(os, {c});
  CHECK(os.str().find("seed,n,brute,pair_dp,paper_dp,approx2") == 0);
  CHECK(os.str().find("0,4,2,2,3,") != std::string::npos);
}

TEST_CASE("bench_scaling") {
  const BenchReport one = bench_scaling(Algo::pair_dp, {50}, 3);
  CHECK(one.points.size() == 1);
  CHECK_FALSE(one.exponent.has_value());

  CHECK_THROWS_AS(bench_scaling(Algo::brute, {10, 41}, 3), InputError);
  CHECK_THROWS_AS(bench_scaling(Algo::paper_dp, {100, 100}, 3), InputError);
  CHECK_THROWS_AS(bench_scaling(Algo::paper_dp, {100}, 2), InputError);

  const BenchReport grow = bench_scaling(Algo::paper_dp, {250, 1000, 4000}, 3);
  REQUIRE(grow.points.size() == 3);
  CHECK(grow.exponent.has_value());
  for (std::size_t i = 1; i < grow.points.size(); ++i)
    CHECK(grow.points[i].median_ms >= grow.points[i - 1].median_ms);

  std::ostringstream os;
  write_bench_csv(os, grow);
  CHECK(os.str().find("solver,n,median_ms,reps") == 0);
  CHECK(format_bench_table(one).find("undefined") != std::string::npos);
}

TEST_CASE("fit_exponent recovers a known power law") {
  std::vector<BenchPoint> pts;
  for (std::size_t n : {10, 20, 40, 80}) pts.push_back({n, 3.0 * static_cast<double>(n * n), 3});
  REQUIRE(fit_exponent(pts).has_value());
  CHECK(*fit_exponent(pts) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("render_svg") {
  const std::string empty = render_svg(Instance{{}, 0.5});
  CHECK(empty.find("<svg") == 0);
  CHECK(count(empty, "<circle") == 0);

  const Instance one{{{3, 1, 1}}, 0.5};
  const std::vector<DiskId> sel{3};
  const std::string s1 = render_svg(one, std::span<const DiskId>(sel));
  CHECK(count(s1, "<circle") == 1);
  CHECK(count(s1, "fill=\"steelblue\"") == 1);

  const Instance cstar = counterexample_cstar();
  const SolveResult brute = brute_force_solve(cstar);
  const StripAssignment sa = decompose(cstar);
  const std::string s4 = render_svg(cstar, std::span<const DiskId>(brute.selected), &sa);
  CHECK(count(s4, "<circle") == 4);
  CHECK(count(s4, "fill=\"steelblue\"") == 2);
  CHECK(count(s4, "fill=\"none\"") == 2);
  CHECK(count(s4, "stroke-dasharray") == sa.line_count());
  CHECK(s4 == render_svg(cstar, std::span<const DiskId>(brute.selected), &sa));

  const std::vector<DiskId> unknown{99};
  CHECK_THROWS_AS(render_svg(one, std::span<const DiskId>(unknown)), InputError);
}

TEST_CASE("run_algo and parse_algo") {
  CHECK(parse_algo("approx2-pairdp") == Algo::approx2_pairdp);
  CHECK(parse_algo("paper-dp") == Algo::paper_dp);
  CHECK_THROWS_AS(parse_algo("greedy"), InputError);
  for (Algo a : {Algo::approx2_pairdp, Algo::approx2_paperdp, Algo::pair_dp, Algo::paper_dp, Algo::brute})
    CHECK(parse_algo(to_string(a)) == a);

  const Instance cstar = counterexample_cstar();
  CHECK(run_algo(cstar, Algo::paper_dp).size == 3);
  CHECK(run_algo(cstar, Algo::pair_dp).size == 2);
  CHECK(run_algo(cstar, Algo::brute).size == 2);

  const Instance tall{{{0, 0, 0}, {1, 0, 5}}, 0.5};
  CHECK_THROWS_AS(run_algo(tall, Algo::pair_dp), InputError);
  // Strips 1 and 6 have opposite parity, so only one disk is reported.
  CHECK(run_algo(tall, Algo::approx2_pairdp).size == 1);
}
