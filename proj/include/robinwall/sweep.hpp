#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "robinwall/quadrature.hpp"
#include "robinwall/spectrum.hpp"

namespace robinwall {

enum class Quantity {
  energy,
  polarization,
  entropy,
  fisher,
  onicescu,
  cgl,
  wavefunction,
  momentum_density,
  dipole_matrix
};

Quantity parse_quantity(std::string_view name);
std::string_view to_string(Quantity q);

/// Field values of a sweep; `count == 1` is a single field.
struct FieldGrid {
  bool log = false;
  double start = 1.0;
  double stop = 1.0;
  int count = 1;

  static FieldGrid single(double field);
  /// "a:b:count" or "a:b:count:log".
  static FieldGrid parse(const std::string& spec);
  std::vector<double> values() const;
};

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(std::string_view name);

struct SweepRequest {
  Boundary bc = Boundary::robin_minus;
  std::vector<int> n_list{0};
  FieldGrid field_grid;
  std::vector<Quantity> quantities{Quantity::energy};
  ToleranceConfig tolerances;
  /// Add the finite-difference oracle energy next to E.
  bool oracle = false;
  /// Size of the dipole matrix for Quantity::dipole_matrix.
  int matrix_dimension = 4;
  /// Worker threads; 0 picks hardware concurrency.
  int threads = 0;
};

/// Output-agnostic table; one of its cells is a double, integer or string.
using Cell = std::variant<double, std::int64_t, std::string>;
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct SweepResult {
  Table table;
  int failures = 0;
};

/// One row per (field, n), fields outer, in request order. Failed rows keep
/// NaN values and carry the error in the trailing `status` column.
SweepResult run_sweep(const SweepRequest& req);

/// Quantity columns contributed to the sweep table, in order.
std::vector<std::string> quantity_columns(const SweepRequest& req);

/// Header row, then one line per row; doubles with 17 significant digits.
void write_csv(const Table& table, std::ostream& out);
/// {"schema":"robinwall/1","rows":[{column: value, ...}, ...]}; NaN -> null.
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, OutputFormat format, std::ostream& out);

/// key=value overrides (abs_tol, rel_tol, max_subdivisions,
/// x_cut_threshold, k_tail_switch, k_tail_switch_dirichlet); '#' starts a
/// comment. Unknown keys throw DomainError.
void apply_config(ToleranceConfig& cfg, std::istream& in);

/// "3", "0,2,5", "0..4" or a mix such as "0..2,7".
std::vector<int> parse_levels(const std::string& spec);

/// Calls `fn(i)` for i in [0, count) on `threads` workers (0 = hardware).
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace robinwall
