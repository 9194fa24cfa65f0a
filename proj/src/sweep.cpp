#include "robinwall/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "robinwall/errors.hpp"
#include "robinwall/infomeasures.hpp"
#include "robinwall/observables.hpp"
#include "robinwall/oracle.hpp"
#include "robinwall/states.hpp"

namespace robinwall {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double parse_double(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw DomainError(std::string(what) + ": '" + text + "' is not a number");
  }
  return v;
}

int parse_int(const std::string& text, const char* what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw DomainError(std::string(what) + ": '" + text +
                      "' is not an integer");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

// Fill `values` (already sized to the quantity columns) for one (n, field).
void compute_row(const SweepRequest& req, int n, double field,
                 std::vector<double>& values) {
  const BoundState st = energy(req.bc, n, field);
  std::size_t col = 0;
  const auto put = [&](double v) { values[col++] = v; };
  std::optional<StateFunctions> sf;
  std::optional<InfoRecord> info;
  const auto state = [&]() -> const StateFunctions& {
    if (!sf) sf = build_state(st, req.tolerances);
    return *sf;
  };
  const auto measures = [&]() -> const InfoRecord& {
    if (!info) info = info_record(state(), req.tolerances);
    return *info;
  };
  for (Quantity q : req.quantities) {
    switch (q) {
      case Quantity::energy:
        put(st.energy);
        if (req.oracle) {
          put(fd_energies(req.bc, field, n + 1, default_grid(field, n + 1))[n]);
        }
        break;
      case Quantity::polarization: {
        const PolarizationRecord p = polarization(st, req.tolerances);
        put(p.mean_x);
        put(p.P);
        break;
      }
      case Quantity::entropy:
        put(measures().S_x);
        put(measures().S_k);
        put(measures().S_t);
        break;
      case Quantity::fisher:
        put(measures().I_x);
        put(measures().I_k);
        put(measures().fisher_product);
        break;
      case Quantity::onicescu:
        put(measures().O_x);
        put(measures().O_k);
        put(measures().onicescu_product);
        break;
      case Quantity::cgl:
        put(measures().CGL_x);
        put(measures().CGL_k);
        put(measures().CGL_product);
        break;
      case Quantity::wavefunction:
        put(state().psi(0.0));
        put(state().dpsi(0.0));
        put(state().x_cut());
        break;
      case Quantity::momentum_density:
        put(momentum_density_peak(state()));
        put(state().k_series());
        break;
      case Quantity::dipole_matrix: {
        const int N = std::max(req.matrix_dimension, n + 1);
        const DipoleMatrix M = dipole_matrix(req.bc, field, N, req.tolerances);
        for (int m = 0; m < req.matrix_dimension; ++m) put(M.at(n, m));
        break;
      }
    }
  }
}

}  // namespace

Quantity parse_quantity(std::string_view name) {
  static const std::pair<std::string_view, Quantity> kNames[] = {
      {"energy", Quantity::energy},
      {"polarization", Quantity::polarization},
      {"entropy", Quantity::entropy},
      {"fisher", Quantity::fisher},
      {"onicescu", Quantity::onicescu},
      {"cgl", Quantity::cgl},
      {"wavefunction", Quantity::wavefunction},
      {"momentum_density", Quantity::momentum_density},
      {"dipole_matrix", Quantity::dipole_matrix}};
  for (const auto& [key, q] : kNames) {
    if (key == name) return q;
  }
  throw DomainError("unknown quantity '" + std::string(name) + "'");
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::energy:
      return "energy";
    case Quantity::polarization:
      return "polarization";
    case Quantity::entropy:
      return "entropy";
    case Quantity::fisher:
      return "fisher";
    case Quantity::onicescu:
      return "onicescu";
    case Quantity::cgl:
      return "cgl";
    case Quantity::wavefunction:
      return "wavefunction";
    case Quantity::momentum_density:
      return "momentum_density";
    case Quantity::dipole_matrix:
      return "dipole_matrix";
  }
  return "?";
}

FieldGrid FieldGrid::single(double field) { return {false, field, field, 1}; }

FieldGrid FieldGrid::parse(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 3 || parts.size() > 4) {
    throw DomainError("field range must look like a:b:count[:log]");
  }
  FieldGrid g;
  g.start = parse_double(parts[0], "field range start");
  g.stop = parse_double(parts[1], "field range stop");
  g.count = parse_int(parts[2], "field range count");
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.log = true;
    } else if (parts[3] != "lin" && parts[3] != "linear") {
      throw DomainError("field range spacing must be 'log' or 'lin'");
    }
  }
  if (!(g.start > 0.0) || !(g.stop > 0.0)) {
    throw DomainError("field range endpoints must be positive");
  }
  if (g.count < 2) throw DomainError("field range needs count >= 2");
  return g;
}

std::vector<double> FieldGrid::values() const {
  if (count == 1) return {start};
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    v[i] = log ? start * std::pow(stop / start, t)
               : start + t * (stop - start);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw DomainError("output format must be csv or json");
}

std::vector<std::string> quantity_columns(const SweepRequest& req) {
  std::vector<std::string> cols;
  for (Quantity q : req.quantities) {
    switch (q) {
      case Quantity::energy:
        cols.push_back("E");
        if (req.oracle) cols.push_back("E_oracle");
        break;
      case Quantity::polarization:
        cols.insert(cols.end(), {"mean_x", "P"});
        break;
      case Quantity::entropy:
        cols.insert(cols.end(), {"S_x", "S_k", "S_t"});
        break;
      case Quantity::fisher:
        cols.insert(cols.end(), {"I_x", "I_k", "I_xI_k"});
        break;
      case Quantity::onicescu:
        cols.insert(cols.end(), {"O_x", "O_k", "O_xO_k"});
        break;
      case Quantity::cgl:
        cols.insert(cols.end(), {"CGL_x", "CGL_k", "CGL_product"});
        break;
      case Quantity::wavefunction:
        cols.insert(cols.end(), {"psi0", "dpsi0", "x_cut"});
        break;
      case Quantity::momentum_density:
        cols.insert(cols.end(), {"gamma0", "k_series"});
        break;
      case Quantity::dipole_matrix:
        for (int m = 0; m < req.matrix_dimension; ++m) {
          cols.push_back("P_m" + std::to_string(m));
        }
        break;
    }
  }
  return cols;
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

SweepResult run_sweep(const SweepRequest& req) {
  req.tolerances.validate();
  if (req.n_list.empty()) throw DomainError("sweep: no levels requested");
  if (req.quantities.empty()) throw DomainError("sweep: no quantities requested");
  for (int n : req.n_list) {
    if (n < 0) throw DomainError("sweep: levels must be non-negative");
  }
  if (req.matrix_dimension < 2) {
    throw DomainError("sweep: dipole matrix dimension must be >= 2");
  }
  const auto cols = quantity_columns(req);
  const auto fields = req.field_grid.values();
  const int per_field = static_cast<int>(req.n_list.size());
  const int total = static_cast<int>(fields.size()) * per_field;

  std::vector<std::vector<double>> values(total,
                                          std::vector<double>(cols.size(), kNaN));
  std::vector<std::string> status(total, "ok");
  parallel_for(total, req.threads, [&](int i) {
    const int n = req.n_list[static_cast<std::size_t>(i % per_field)];
    const double field = fields[static_cast<std::size_t>(i / per_field)];
    try {
      compute_row(req, n, field, values[i]);
    } catch (const std::exception& e) {
      std::fill(values[i].begin(), values[i].end(), kNaN);
      status[i] = std::string("error: ") + e.what();
    }
  });

  SweepResult out;
  out.table.columns = {"bc", "n", "field"};
  out.table.columns.insert(out.table.columns.end(), cols.begin(), cols.end());
  out.table.columns.push_back("status");
  for (int i = 0; i < total; ++i) {
    std::vector<Cell> row;
    row.emplace_back(std::string(to_string(req.bc)));
    row.emplace_back(static_cast<std::int64_t>(req.n_list[i % per_field]));
    row.emplace_back(fields[i / per_field]);
    for (double v : values[i]) row.emplace_back(v);
    row.emplace_back(status[i]);
    if (status[i] != "ok") ++out.failures;
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << csv_escape(table.columns[c]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_double(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
              out << v;
            } else {
              out << csv_escape(v);
            }
          },
          row[c]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = "robinwall/1";
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) {
                obj[table.columns[c]] = v;
              } else {
                obj[table.columns[c]] = nullptr;
              }
            } else {
              obj[table.columns[c]] = v;
            }
          },
          row[c]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(1) << '\n';
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
}

void apply_config(ToleranceConfig& cfg, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(lineno) +
                        ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "abs_tol") {
      cfg.abs_tol = parse_double(value, "abs_tol");
    } else if (key == "rel_tol") {
      cfg.rel_tol = parse_double(value, "rel_tol");
    } else if (key == "max_subdivisions") {
      cfg.max_subdivisions = parse_int(value, "max_subdivisions");
    } else if (key == "x_cut_threshold") {
      cfg.x_cut_threshold = parse_double(value, "x_cut_threshold");
    } else if (key == "k_tail_switch") {
      cfg.k_tail_switch = parse_double(value, "k_tail_switch");
    } else if (key == "k_tail_switch_dirichlet") {
      cfg.k_tail_switch_dirichlet = parse_double(value, "k_tail_switch_dirichlet");
    } else {
      throw DomainError("config line " + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
}

std::vector<int> parse_levels(const std::string& spec) {
  std::vector<int> out;
  for (const auto& raw : split(spec, ',')) {
    const std::string item = trim(raw);
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item, "level"));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots), "level range");
    const int hi = parse_int(item.substr(dots + 2), "level range");
    if (hi < lo) throw DomainError("level range '" + item + "' is empty");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw DomainError("no levels given");
  for (int n : out) {
    if (n < 0) throw DomainError("levels must be non-negative");
  }
  return out;
}

}  // namespace robinwall
