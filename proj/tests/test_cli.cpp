#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "reference_values.hpp"
#include "robinwall/errors.hpp"
#include "robinwall/sweep.hpp"
#include "robinwall/units.hpp"

using namespace robinwall;

namespace {

std::size_t column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

double number(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

std::string csv_of(const SweepRequest& req) {
  std::ostringstream out;
  write_csv(run_sweep(req).table, out);
  return out.str();
}

}  // namespace

TEST_CASE("field grids") {
  const FieldGrid g = FieldGrid::parse("0.01:100:5:log");
  const auto v = g.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == doctest::Approx(0.01));
  CHECK(v[2] == doctest::Approx(1.0));
  CHECK(v.back() == doctest::Approx(100.0));
  const auto lin = FieldGrid::parse("1:3:3").values();
  CHECK(lin[1] == doctest::Approx(2.0));
  CHECK(FieldGrid::single(2.5).values() == std::vector<double>{2.5});
  CHECK_THROWS_AS(FieldGrid::parse("0:1:3"), DomainError);
  CHECK_THROWS_AS(FieldGrid::parse("1:2:1"), DomainError);
  CHECK_THROWS_AS(FieldGrid::parse("1:2"), DomainError);
  CHECK_THROWS_AS(FieldGrid::parse("1:2:3:cubic"), DomainError);
}

TEST_CASE("level lists and names") {
  CHECK(parse_levels("3") == std::vector<int>{3});
  CHECK(parse_levels("0..2,7") == std::vector<int>{0, 1, 2, 7});
  CHECK(parse_levels("0,2,5") == std::vector<int>{0, 2, 5});
  CHECK_THROWS_AS(parse_levels("2..1"), DomainError);
  CHECK_THROWS_AS(parse_levels("x"), DomainError);
  CHECK(parse_quantity("cgl") == Quantity::cgl);
  CHECK(to_string(Quantity::momentum_density) == "momentum_density");
  CHECK_THROWS_AS(parse_quantity("entropies"), DomainError);
  CHECK(parse_output_format("json") == OutputFormat::json);
}

TEST_CASE("config overrides") {
  ToleranceConfig cfg;
  std::istringstream in("# tighter\nabs_tol = 1e-12\nrel_tol=1e-11\n\nk_tail_switch=300 # K\n");
  apply_config(cfg, in);
  CHECK(cfg.abs_tol == 1e-12);
  CHECK(cfg.rel_tol == 1e-11);
  CHECK(cfg.k_tail_switch == 300.0);
  std::istringstream bad("tolerance=1\n");
  CHECK_THROWS_AS(apply_config(cfg, bad), DomainError);
  std::istringstream junk("abs_tol=abc\n");
  CHECK_THROWS_AS(apply_config(cfg, junk), DomainError);
}

TEST_CASE("energy sweep is ordered and monotone") {
  SweepRequest req;
  req.bc = Boundary::robin_minus;
  req.n_list = {0, 1, 2};
  req.field_grid = FieldGrid::parse("0.01:100:9:log");
  const SweepResult r = run_sweep(req);
  CHECK(r.failures == 0);
  const Table& t = r.table;
  CHECK(t.columns == std::vector<std::string>{"bc", "n", "field", "E", "status"});
  REQUIRE(t.rows.size() == 27);
  const auto e = column(t, "E");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(std::get<std::string>(t.rows[i][0]) == "robin-");
    CHECK(number(t.rows[i][1]) == static_cast<double>(i % 3));
    if (i % 3 > 0) CHECK(number(t.rows[i][e]) > number(t.rows[i - 1][e]));
    if (i >= 3) CHECK(number(t.rows[i][e]) > number(t.rows[i - 3][e]));
  }
}

TEST_CASE("entropy sweep at the crossing field") {
  SweepRequest req;
  req.n_list = {0, 1};
  req.field_grid = FieldGrid::single(1.45);
  req.quantities = {Quantity::entropy};
  const Table t = run_sweep(req).table;
  const auto st = column(t, "S_t");
  CHECK(std::abs(number(t.rows[0][st]) - number(t.rows[1][st])) < 0.02);
}

TEST_CASE("complexity sweep reproduces the Dirichlet and Neumann table") {
  for (Boundary bc : {Boundary::dirichlet, Boundary::neumann}) {
    SweepRequest req;
    req.bc = bc;
    req.n_list = parse_levels("0..5");
    req.field_grid = FieldGrid::single(1.0);
    req.quantities = {Quantity::cgl};
    const Table t = run_sweep(req).table;
    const auto& ref = bc == Boundary::dirichlet ? kTableDirichlet : kTableNeumann;
    const auto c0 = column(t, "CGL_x");
    for (std::size_t n = 0; n < 6; ++n) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::abs(number(t.rows[n][c0 + j]) - ref[n][j]) < 5e-4);
      }
    }
  }
}

TEST_CASE("failed rows are reported, not dropped") {
  SweepRequest req;
  req.bc = Boundary::robin_minus;
  req.n_list = {0, 1};
  req.field_grid = FieldGrid::single(0.0);
  const SweepResult r = run_sweep(req);
  CHECK(r.failures == 1);
  REQUIRE(r.table.rows.size() == 2);
  CHECK(std::get<std::string>(r.table.rows[0].back()) == "ok");
  CHECK(std::get<std::string>(r.table.rows[1].back()).rfind("error: ", 0) == 0);
  CHECK(std::isnan(number(r.table.rows[1][column(r.table, "E")])));
}

TEST_CASE("sweeps are deterministic across runs and thread counts") {
  SweepRequest req;
  req.bc = Boundary::robin_plus;
  req.n_list = {0, 1, 2};
  req.field_grid = FieldGrid::parse("0.5:5:4");
  req.quantities = {Quantity::energy, Quantity::entropy, Quantity::fisher,
                    Quantity::dipole_matrix};
  req.threads = 1;
  const std::string a = csv_of(req);
  req.threads = 4;
  const std::string b = csv_of(req);
  const std::string c = csv_of(req);
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("csv and json writers") {
  Table t;
  t.columns = {"bc", "n", "x", "status"};
  t.rows.push_back({std::string("robin-"), std::int64_t{2}, 0.1,
                    std::string("error: a, \"b\"")});
  t.rows.push_back({std::string("robin-"), std::int64_t{3},
                    std::numeric_limits<double>::quiet_NaN(), std::string("ok")});
  std::ostringstream csv;
  write_csv(t, csv);
  CHECK(csv.str() ==
        "bc,n,x,status\n"
        "robin-,2,0.10000000000000001,\"error: a, \"\"b\"\"\"\n"
        "robin-,3,nan,ok\n");
  std::ostringstream js;
  write_json(t, js);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["schema"] == "robinwall/1");
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["n"] == 2);
  CHECK(doc["rows"][0]["x"].get<double>() == 0.1);
  CHECK(doc["rows"][1]["x"].is_null());
}

TEST_CASE("unit conversion") {
  UnitScale s;
  CHECK(convert_units(s, UnitDirection::to_physical, 1.0, UnitKind::length) == 1e-9);
  CHECK(convert_units(s, UnitDirection::to_physical, 1.0, UnitKind::field) ==
        doctest::Approx(3.8100e7).epsilon(1e-4));
  for (UnitKind k : {UnitKind::length, UnitKind::energy, UnitKind::field, UnitKind::dipole}) {
    const double phys = convert_units(s, UnitDirection::to_physical, 0.37, k);
    CHECK(convert_units(s, UnitDirection::to_dimensionless, phys, k) ==
          doctest::Approx(0.37).epsilon(1e-12));
  }
  UnitScale unit;
  unit.lambda_abs = 1.0;
  unit.mass = constants::hbar * constants::hbar / 2.0;
  CHECK(convert_units(unit, UnitDirection::to_physical, 1.0, UnitKind::length) == 1.0);
  CHECK(unit.energy_unit() == doctest::Approx(1.0).epsilon(1e-12));

  UnitScale d;
  d.bc = Boundary::dirichlet;
  CHECK_THROWS_AS(convert_units(d, UnitDirection::to_physical, 1.0, UnitKind::energy),
                  DomainError);
  d.compton = true;
  const double mc2 = constants::electron_mass * constants::speed_of_light *
                     constants::speed_of_light;
  CHECK(d.length_unit() ==
        doctest::Approx(constants::hbar / (constants::electron_mass * constants::speed_of_light)));
  CHECK(d.energy_unit() == doctest::Approx(mc2 / 2.0));

  UnitScale g;
  g.gravity = true;
  g.mass = constants::neutron_mass;
  g.lambda_abs = 1e-6;
  CHECK(g.field_unit() ==
        doctest::Approx(constants::hbar * constants::hbar /
                        (2.0 * g.mass * g.mass * 1e-18)));
  CHECK(parse_unit_kind("dipole") == UnitKind::dipole);
  UnitScale bad;
  bad.mass = -1.0;
  CHECK_THROWS_AS(convert_units(bad, UnitDirection::to_physical, 1.0, UnitKind::length),
                  DomainError);
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(100, 0);
  parallel_for(100, 7, [&](int i) { hits[static_cast<std::size_t>(i)] += 1; });
  for (int h : hits) CHECK(h == 1);
}
