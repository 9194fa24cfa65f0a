// robinwall: spectra, dipoles and information measures of a quantum wall
// with Robin, Dirichlet or Neumann boundary in a uniform field.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "robinwall/errors.hpp"
#include "robinwall/infomeasures.hpp"
#include "robinwall/observables.hpp"
#include "robinwall/oracle.hpp"
#include "robinwall/states.hpp"
#include "robinwall/sweep.hpp"
#include "robinwall/units.hpp"

using namespace robinwall;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string bc = "robin-";
  std::string levels = "0";
  double field = 1.0;
  std::string field_range;
  std::string out = "csv";
  std::string config;
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  double tail_k = 0.0;
  int threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool levels = true,
                bool fields = true) {
  cmd->add_option("--bc", c.bc, "dirichlet | neumann | robin+ | robin-")
      ->capture_default_str();
  if (levels) {
    cmd->add_option("--n", c.levels, "levels: 3, 0,2,5 or 0..4")
        ->capture_default_str();
  }
  if (fields) {
    auto* f = cmd->add_option("--field", c.field, "dimensionless field")
                  ->capture_default_str();
    cmd->add_option("--field-range", c.field_range, "a:b:count[:log]")
        ->excludes(f);
  }
  cmd->add_option("--out", c.out, "csv | json")->capture_default_str();
  cmd->add_option("--config", c.config, "key=value tolerance file");
  cmd->add_option("--tol-abs", c.tol_abs, "absolute quadrature tolerance");
  cmd->add_option("--tol-rel", c.tol_rel, "relative quadrature tolerance");
  cmd->add_option("--tail-k", c.tail_k, "momentum tail switch K");
  cmd->add_option("--threads", c.threads, "worker threads (0 = all cores)");
}

template <class F>
auto usage(F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

ToleranceConfig tolerances(const Common& c) {
  ToleranceConfig cfg;
  if (!c.config.empty()) {
    std::ifstream in(c.config);
    if (!in) throw UsageError("cannot read config file " + c.config);
    usage([&] { apply_config(cfg, in); });
  }
  if (c.tol_abs > 0.0) cfg.abs_tol = c.tol_abs;
  if (c.tol_rel > 0.0) cfg.rel_tol = c.tol_rel;
  if (c.tail_k > 0.0) {
    cfg.k_tail_switch = c.tail_k;
    cfg.k_tail_switch_dirichlet = c.tail_k;
  }
  usage([&] { cfg.validate(); });
  return cfg;
}

SweepRequest request(const Common& c) {
  SweepRequest req;
  usage([&] {
    req.bc = parse_boundary(c.bc);
    req.n_list = parse_levels(c.levels);
    req.field_grid = c.field_range.empty() ? FieldGrid::single(c.field)
                                           : FieldGrid::parse(c.field_range);
    if (c.field_range.empty() && !(c.field >= 0.0)) {
      throw DomainError("--field must be non-negative");
    }
    return 0;
  });
  req.tolerances = tolerances(c);
  req.threads = c.threads;
  return req;
}

OutputFormat format(const Common& c) {
  return usage([&] { return parse_output_format(c.out); });
}

int emit(const Table& t, const Common& c, int failures = 0) {
  write_table(t, format(c), std::cout);
  return failures > 0 ? kExitFailure : 0;
}

int emit_sweep(const SweepRequest& req, const Common& c) {
  const OutputFormat fmt = format(c);
  const SweepResult r = run_sweep(req);
  write_table(r.table, fmt, std::cout);
  for (const auto& row : r.table.rows) {
    const auto& status = std::get<std::string>(row.back());
    if (status != "ok") std::cerr << status << '\n';
  }
  return r.failures > 0 ? kExitFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of a Robin/Dirichlet/Neumann wall in a uniform field"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "robinwall 1.0.0");

  Common common;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "energies E_n(field)");
  add_common(spectrum_cmd, common);
  bool with_oracle = false;
  spectrum_cmd->add_flag("--oracle", with_oracle,
                         "add the finite-difference oracle column");

  auto* state_cmd =
      app.add_subcommand("state", "psi(x), rho(x) or gamma(k) profile of one level");
  add_common(state_cmd, common, true, false);
  state_cmd->add_option("--field", common.field, "dimensionless field")
      ->capture_default_str();
  std::string space = "x";
  int points = 201;
  double k_max = 10.0;
  state_cmd->add_option("--space", space, "x (position) or k (momentum)")
      ->capture_default_str();
  state_cmd->add_option("--points", points, "samples")->capture_default_str();
  state_cmd->add_option("--k-max", k_max, "momentum window [0, k_max]")
      ->capture_default_str();

  auto* pol_cmd = app.add_subcommand("polarization", "<x> and dipole moments");
  add_common(pol_cmd, common);
  int matrix = 0;
  pol_cmd->add_option("--matrix", matrix, "also emit row n of the N x N matrix");

  auto* measures_cmd =
      app.add_subcommand("measures", "entropy, Fisher, Onicescu, CGL");
  add_common(measures_cmd, common);
  std::string quantity_list = "entropy,fisher,onicescu,cgl";
  measures_cmd->add_option("--quantities", quantity_list, "comma list")
      ->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "arbitrary quantity sweep");
  add_common(sweep_cmd, common);
  std::string sweep_quantities = "energy";
  sweep_cmd
      ->add_option("--quantities", sweep_quantities,
                   "energy,polarization,entropy,fisher,onicescu,cgl,"
                   "wavefunction,momentum_density,dipole_matrix")
      ->capture_default_str();
  sweep_cmd->add_option("--matrix", matrix, "dipole matrix dimension");
  sweep_cmd->add_flag("--oracle", with_oracle, "oracle column for energies");

  auto* crossing_cmd = app.add_subcommand(
      "crossing", "field where S_t of robin- levels 0 and 1 cross");
  add_common(crossing_cmd, common, false, false);

  auto* fishermax_cmd = app.add_subcommand(
      "fishermax", "maximum and limits of I_x I_k for a robin- level");
  add_common(fishermax_cmd, common, true, false);

  auto* table_cmd =
      app.add_subcommand("cgl-table", "Dirichlet/Neumann CGL complexities, n = 0..5");
  add_common(table_cmd, common, false, true);
  int table_levels = 6;
  table_cmd->add_option("--levels", table_levels, "number of levels")
      ->capture_default_str();

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "solver energies against the finite-difference oracle");
  add_common(oracle_cmd, common);
  int grid_points = 4000;
  oracle_cmd->add_option("--grid", grid_points, "grid points")
      ->capture_default_str();

  auto* units_cmd = app.add_subcommand("units", "convert to/from physical units");
  double lambda = 1e-9;
  double mass = constants::electron_mass;
  std::string kind = "field";
  std::string direction = "to-physical";
  double value = 1.0;
  bool gravity = false;
  bool compton = false;
  std::string units_bc = "robin-";
  std::string units_out = "csv";
  units_cmd->add_option("--lambda", lambda, "|Lambda| in metres")
      ->capture_default_str();
  units_cmd->add_option("--mass", mass, "particle mass in kg")
      ->capture_default_str();
  units_cmd->add_option("--kind", kind, "length | energy | field | dipole")
      ->capture_default_str();
  units_cmd->add_option("--direction", direction, "to-physical | to-dimensionless")
      ->capture_default_str();
  units_cmd->add_option("--value", value, "value to convert")->capture_default_str();
  units_cmd->add_flag("--gravity", gravity, "m g x potential instead of e F x");
  units_cmd->add_flag("--compton", compton, "lengths in hbar/(m c)");
  units_cmd->add_option("--bc", units_bc, "wall type")->capture_default_str();
  units_cmd->add_option("--out", units_out, "csv | json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum_cmd) {
      SweepRequest req = request(common);
      req.quantities = {Quantity::energy};
      req.oracle = with_oracle;
      return emit_sweep(req, common);
    }
    if (*pol_cmd || *measures_cmd || *sweep_cmd) {
      SweepRequest req = request(common);
      if (*pol_cmd) {
        req.quantities = {Quantity::energy, Quantity::polarization};
        if (matrix > 0) {
          req.quantities.push_back(Quantity::dipole_matrix);
          req.matrix_dimension = matrix;
        }
      } else {
        const std::string list = *measures_cmd ? quantity_list : sweep_quantities;
        req.quantities.clear();
        usage([&] {
          std::stringstream in(list);
          std::string item;
          while (std::getline(in, item, ',')) {
            req.quantities.push_back(parse_quantity(item));
          }
          return 0;
        });
        if (matrix > 0) req.matrix_dimension = matrix;
        req.oracle = with_oracle;
      }
      if (req.matrix_dimension < 2) throw UsageError("--matrix must be >= 2");
      return emit_sweep(req, common);
    }
    if (*state_cmd) {
      const SweepRequest req = request(common);
      if (req.n_list.size() != 1) throw UsageError("state takes a single --n");
      if (points < 2) throw UsageError("--points must be >= 2");
      if (space != "x" && space != "k") throw UsageError("--space must be x or k");
      const StateFunctions sf =
          build_state(energy(req.bc, req.n_list[0], common.field), req.tolerances);
      Table t;
      const std::string bc(to_string(req.bc));
      if (space == "x") {
        t.columns = {"bc", "n", "field", "x", "psi", "rho"};
        for (int i = 0; i < points; ++i) {
          const double x = sf.x_cut() * static_cast<double>(points - 1 - i) / (points - 1) + 0.0;
          const double p = sf.psi(x);
          t.rows.push_back({bc, std::int64_t{req.n_list[0]}, common.field, x, p, p * p});
        }
      } else {
        t.columns = {"bc", "n", "field", "k", "gamma"};
        for (int i = 0; i < points; ++i) {
          const double k = k_max * static_cast<double>(i) / (points - 1);
          t.rows.push_back({bc, std::int64_t{req.n_list[0]}, common.field, k, sf.gamma(k)});
        }
      }
      return emit(t, common);
    }
    if (*crossing_cmd) {
      const ToleranceConfig cfg = tolerances(common);
      Table t{{"quantity", "field"}, {{std::string("entropy_crossing"), entropy_crossing(cfg)}}};
      return emit(t, common);
    }
    if (*fishermax_cmd) {
      const ToleranceConfig cfg = tolerances(common);
      if (fishermax_cmd->count("--n") == 0) common.levels = "1";
      const auto levels = usage([&] { return parse_levels(common.levels); });
      Table t{{"bc", "n", "field_at_max", "max_value", "bracket_lo", "bracket_hi",
               "zero_field_limit", "large_field_limit"},
              {}};
      for (int n : levels) {
        const FisherMaximum m = usage([&] { return fisher_product_maximum(n, cfg); });
        const FisherLimits l = fisher_product_limits(n, cfg);
        t.rows.push_back({std::string("robin-"), std::int64_t{n}, m.field, m.value,
                          m.bracket.first, m.bracket.second, l.zero_field,
                          l.large_field});
      }
      return emit(t, common);
    }
    if (*table_cmd) {
      const ToleranceConfig cfg = tolerances(common);
      if (table_levels < 1) throw UsageError("--levels must be >= 1");
      Table t{{"bc", "n", "field", "CGL_x", "CGL_k", "CGL_product", "C_n", "status"}, {}};
      int failures = 0;
      for (Boundary bc : {Boundary::dirichlet, Boundary::neumann}) {
        for (int n = 0; n < table_levels; ++n) {
          std::vector<Cell> row{std::string(to_string(bc)), std::int64_t{n}, common.field};
          try {
            const StateFunctions sf = build_state(energy(bc, n, common.field), cfg);
            const InfoRecord r = info_record(sf, cfg);
            const double c_n = r.I_k * std::pow(common.field, 2.0 / 3.0);
            row.insert(row.end(), {r.CGL_x, r.CGL_k, r.CGL_product, c_n, std::string("ok")});
          } catch (const std::exception& e) {
            ++failures;
            const double nan = std::nan("");
            row.insert(row.end(), {nan, nan, nan, nan, std::string("error: ") + e.what()});
          }
          t.rows.push_back(std::move(row));
        }
      }
      return emit(t, common, failures);
    }
    if (*oracle_cmd) {
      const SweepRequest req = request(common);
      if (grid_points < 3) throw UsageError("--grid must be >= 3");
      int max_n = 0;
      for (int n : req.n_list) max_n = std::max(max_n, n);
      Table t{{"bc", "n", "field", "E", "E_oracle", "rel_diff", "status"}, {}};
      int failures = 0;
      for (double field : req.field_grid.values()) {
        const auto grid = usage([&] { return default_grid(field, max_n + 1, grid_points); });
        const auto fd = fd_energies(req.bc, field, max_n + 1, grid);
        for (int n : req.n_list) {
          const double e = energy(req.bc, n, field).energy;
          const double rel = std::abs(fd[n] - e) / std::max(1.0, std::abs(e));
          const bool ok = rel <= 1e-4;
          if (!ok) ++failures;
          t.rows.push_back({std::string(to_string(req.bc)), std::int64_t{n}, field, e,
                            fd[n], rel, std::string(ok ? "ok" : "error: above 1e-4")});
        }
      }
      return emit(t, common, failures);
    }
    if (*units_cmd) {
      UnitScale scale;
      UnitKind k{};
      UnitDirection dir{};
      OutputFormat fmt{};
      usage([&] {
        scale.lambda_abs = lambda;
        scale.mass = mass;
        scale.gravity = gravity;
        scale.compton = compton;
        scale.bc = parse_boundary(units_bc);
        k = parse_unit_kind(kind);
        if (direction == "to-physical") {
          dir = UnitDirection::to_physical;
        } else if (direction == "to-dimensionless") {
          dir = UnitDirection::to_dimensionless;
        } else {
          throw DomainError("--direction must be to-physical or to-dimensionless");
        }
        fmt = parse_output_format(units_out);
        return 0;
      });
      const double converted =
          usage([&] { return convert_units(scale, dir, value, k); });
      Table t{{"kind", "direction", "value", "converted"},
              {{kind, direction, value, converted}}};
      write_table(t, fmt, std::cout);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
