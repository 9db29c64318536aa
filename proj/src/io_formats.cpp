#include "iquant/io_formats.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "iquant/errors.hpp"

namespace iquant {

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::pair<int, int> line_col_at(const std::string& text, size_t byte_index) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte_index && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Best-effort source location for a semantic error: the first occurrence of
// the quoted key, falling back to the start of the document.
[[noreturn]] void fail_at_key(const std::string& text, const std::string& key,
                              const std::string& msg) {
  const size_t pos = text.find("\"" + key + "\"");
  const auto [line, col] = pos == std::string::npos
                               ? std::pair<int, int>{1, 1}
                               : line_col_at(text, pos);
  throw ParseError(msg, line, col);
}

std::vector<std::pair<const char*, double>> group_items(const CoefficientGroups2Q& g) {
  return {{"cc", g.cc},       {"ss", g.ss},       {"sc", g.sc},
          {"cs", g.cs},       {"a_cos", g.a_cos}, {"a_sin", g.a_sin},
          {"b_cos", g.b_cos}, {"b_sin", g.b_sin}};
}

std::vector<std::pair<const char*, double>> group_items(const CoefficientGroups3Q& g) {
  return {{"t_ccc", g.t_ccc}, {"t_ccs", g.t_ccs}, {"t_csc", g.t_csc},
          {"t_scc", g.t_scc}, {"t_ssc", g.t_ssc}, {"t_css", g.t_css},
          {"t_sss", g.t_sss}, {"t_scs", g.t_scs}, {"ab_cc", g.ab_cc},
          {"ab_cs", g.ab_cs}, {"ab_sc", g.ab_sc}, {"ab_ss", g.ab_ss},
          {"ac_cc", g.ac_cc}, {"ac_cs", g.ac_cs}, {"ac_sc", g.ac_sc},
          {"ac_ss", g.ac_ss}, {"bc_cc", g.bc_cc}, {"bc_cs", g.bc_cs},
          {"bc_sc", g.bc_sc}, {"bc_ss", g.bc_ss}, {"a_cos", g.a_cos},
          {"a_sin", g.a_sin}, {"b_cos", g.b_cos}, {"b_sin", g.b_sin},
          {"c_cos", g.c_cos}, {"c_sin", g.c_sin}};
}

void text_group_lines(std::string& out,
                      const std::vector<std::pair<const char*, double>>& items) {
  for (const auto& [name, value] : items) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %-6s %s\n", name, g12(value).c_str());
    out += buf;
  }
}

void text_mode_line(std::string& out, const ModeImbalance& mi) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-6s %-22s %-22s %s\n", mi.label.c_str(),
                g12(mi.two_particle_sq).c_str(), g12(mi.single_product_sq).c_str(),
                g12(mi.imbalance).c_str());
  out += buf;
}

std::string json_groups(const std::vector<std::pair<const char*, double>>& items) {
  std::string out = "{";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + std::string(items[i].first) + "\": " + g17(items[i].second);
  }
  out += "}";
  return out;
}

std::string json_mode(const ModeImbalance& mi) {
  return "{\"label\": \"" + json_escape(mi.label) +
         "\", \"two_particle_sq\": " + g17(mi.two_particle_sq) +
         ", \"single_product_sq\": " + g17(mi.single_product_sq) +
         ", \"imbalance\": " + g17(mi.imbalance) + "}";
}

template <typename Modes>
void json_mode_array(std::string& out, const char* key, const Modes& modes) {
  out += "  \"" + std::string(key) + "\": [\n";
  for (size_t i = 0; i < modes.size(); ++i) {
    out += "    " + json_mode(modes[i]);
    if (i + 1 < modes.size()) out += ",";
    out += "\n";
  }
  out += "  ]";
}

std::string json_deviation_row(const GroupDeviation& d) {
  return "{\"label\": \"" + json_escape(d.label) +
         "\", \"closed_form\": " + g17(d.closed_form) +
         ", \"extracted\": " + g17(d.extracted) +
         ", \"deviation\": " + g17(d.deviation) + "}";
}

}  // namespace

DensityMatrix parse_state_text(const std::string& text,
                               std::vector<std::string>* warnings,
                               const ValidationTolerances& tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const size_t pos = e.byte > 0 ? static_cast<size_t>(e.byte) - 1 : 0;
    const auto [line, col] = line_col_at(text, pos);
    throw ParseError(std::string("state file is not valid JSON: ") + e.what(), line, col);
  }
  if (!j.is_object())
    throw ParseError("state file: top level must be a JSON object", 1, 1);

  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "format_version" && key != "dim" && key != "matrix")
      fail_at_key(text, key, "state file: unknown key \"" + key + "\"");
  }
  for (const char* key : {"format_version", "dim", "matrix"})
    if (!j.contains(key))
      throw ParseError("state file: missing required key \"" + std::string(key) + "\"",
                       1, 1);

  if (!j["format_version"].is_string())
    fail_at_key(text, "format_version", "state file: format_version must be a string");
  const std::string version = j["format_version"].get<std::string>();
  if (version != "1.0")
    fail_at_key(text, "format_version",
                "state file: unsupported format_version \"" + version +
                    "\" (expected \"1.0\")");

  if (!j["dim"].is_number_integer())
    fail_at_key(text, "dim", "state file: dim must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim != 4 && dim != 8)
    throw DimUnsupported("state file: dim " + std::to_string(dim) +
                         " is not supported (supported dims: 4 for two qubits, "
                         "8 for three qubits)");

  const nlohmann::json& mat = j["matrix"];
  if (!mat.is_array() || static_cast<int>(mat.size()) != dim)
    fail_at_key(text, "matrix",
                "state file: matrix must be an array of " + std::to_string(dim) +
                    " rows");
  Eigen::MatrixXcd raw(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const nlohmann::json& row = mat[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail_at_key(text, "matrix",
                  "state file: matrix row " + std::to_string(r + 1) + " must have " +
                      std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c) {
      const nlohmann::json& e = row[static_cast<size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        fail_at_key(text, "matrix",
                    "state file: matrix entry (" + std::to_string(r + 1) + ", " +
                        std::to_string(c + 1) + ") must be a [re, im] pair");
      raw(r, c) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
    }
  }

  double herm_dev = 0.0;
  DensityMatrix m = density_from_entries(raw, &herm_dev);
  if (herm_dev > 0.0 && warnings) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "matrix was not exactly Hermitian (max deviation %.3g); "
                  "symmetrized",
                  herm_dev);
    warnings->push_back(buf);
  }
  enforce_valid(m, tol);
  return m;
}

DensityMatrix read_state(const std::string& path, std::vector<std::string>* warnings,
                         const ValidationTolerances& tol) {
  return parse_state_text(read_text_file(path), warnings, tol);
}

std::string state_to_text(const DensityMatrix& m) {
  const int d = m.dim();
  std::string out = "{\n  \"format_version\": \"1.0\",\n  \"dim\": ";
  out += std::to_string(d);
  out += ",\n  \"matrix\": [\n";
  for (int r = 0; r < d; ++r) {
    out += "    [";
    for (int c = 0; c < d; ++c) {
      const std::complex<double> v = m.entries(r, c);
      out += "[" + g17(v.real()) + ", " + g17(v.imag()) + "]";
      if (c + 1 < d) out += ", ";
    }
    out += "]";
    if (r + 1 < d) out += ",";
    out += "\n";
  }
  out += "  ]\n}\n";
  return out;
}

void write_state(const DensityMatrix& m, const std::string& path) {
  write_text_file(state_to_text(m), path);
}

std::string report_text(const I2Result& r) {
  std::string out = "system: 2 qubits\n\ncoefficient groups:\n";
  text_group_lines(out, group_items(r.groups));
  out += "\nmodes (two-particle^2, single-product^2, imbalance):\n";
  for (const ModeImbalance& mi : r.modes) text_mode_line(out, mi);
  out += "\ni2 = " + g12(r.total) + "\n";
  return out;
}

std::string report_text(const I3Result& r) {
  std::string out = "system: 3 qubits\n\ncoefficient groups:\n";
  text_group_lines(out, group_items(r.groups));
  out += "\nGHZ-class triple modes (triple^2, reproducible^2, imbalance):\n";
  for (const ModeImbalance& mi : r.ghz_modes) text_mode_line(out, mi);
  out += "\nW-class pair modes (pair^2, single-product^2, imbalance):\n";
  for (const ModeImbalance& mi : r.w_modes) text_mode_line(out, mi);
  out += "\npair sums: AB " + g12(r.pair_sum_ab) + "  AC " + g12(r.pair_sum_ac) +
         "  BC " + g12(r.pair_sum_bc) + "\n";
  out += "i_ghz = " + g12(r.i_ghz) + "\n";
  out += "i_w   = " + g12(r.i_w) + "\n";
  out += "i3    = " + g12(r.total) + "\n";
  return out;
}

std::string report_text(const OracleReport& r) {
  std::string out = "oracle cross-validation (dim " + std::to_string(r.dim) + ")\n\n";
  out += "coefficient groups (closed form, extracted, |deviation|):\n";
  for (const GroupDeviation& d : r.groups) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-6s %-22s %-22s %s\n", d.label.c_str(),
                  g12(d.closed_form).c_str(), g12(d.extracted).c_str(),
                  g12(d.deviation).c_str());
    out += buf;
  }
  out += "\nassembled quantifiers:\n";
  for (const GroupDeviation& d : r.totals) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-6s %-22s %-22s %s\n", d.label.c_str(),
                  g12(d.closed_form).c_str(), g12(d.extracted).c_str(),
                  g12(d.deviation).c_str());
    out += buf;
  }
  out += "\nmax group deviation: " + g12(r.max_group_deviation) + "\n";
  out += "max total deviation: " + g12(r.max_total_deviation) + "\n";
  out += "max deviation:       " + g12(r.max_deviation) + "\n";
  return out;
}

std::string report_structured(const I2Result& r) {
  std::string out = "{\n  \"system\": \"2q\",\n  \"groups\": ";
  out += json_groups(group_items(r.groups));
  out += ",\n";
  json_mode_array(out, "modes", r.modes);
  out += ",\n  \"i2\": " + g17(r.total) + "\n}\n";
  return out;
}

std::string report_structured(const I3Result& r) {
  std::string out = "{\n  \"system\": \"3q\",\n  \"groups\": ";
  out += json_groups(group_items(r.groups));
  out += ",\n";
  json_mode_array(out, "ghz_modes", r.ghz_modes);
  out += ",\n";
  json_mode_array(out, "w_modes", r.w_modes);
  out += ",\n  \"pair_sums\": {\"ab\": " + g17(r.pair_sum_ab) +
         ", \"ac\": " + g17(r.pair_sum_ac) + ", \"bc\": " + g17(r.pair_sum_bc) + "}";
  out += ",\n  \"i_ghz\": " + g17(r.i_ghz);
  out += ",\n  \"i_w\": " + g17(r.i_w);
  out += ",\n  \"i3\": " + g17(r.total) + "\n}\n";
  return out;
}

std::string report_structured(const OracleReport& r) {
  std::string out = "{\n  \"dim\": " + std::to_string(r.dim) + ",\n";
  out += "  \"groups\": [\n";
  for (size_t i = 0; i < r.groups.size(); ++i) {
    out += "    " + json_deviation_row(r.groups[i]);
    if (i + 1 < r.groups.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n  \"totals\": [\n";
  for (size_t i = 0; i < r.totals.size(); ++i) {
    out += "    " + json_deviation_row(r.totals[i]);
    if (i + 1 < r.totals.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n  \"max_group_deviation\": " + g17(r.max_group_deviation);
  out += ",\n  \"max_total_deviation\": " + g17(r.max_total_deviation);
  out += ",\n  \"max_deviation\": " + g17(r.max_deviation) + "\n}\n";
  return out;
}

std::string csv_table(const std::string& header,
                      const std::vector<std::vector<double>>& rows) {
  std::string out = header + "\n";
  for (const std::vector<double>& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += g17(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string grid_csv(const GridDensity& g) {
  std::string out;
  for (size_t a = 0; a < g.axis_names.size(); ++a) {
    if (a) out += ",";
    out += g.axis_names[a];
  }
  out += ",density\n";
  const size_t naxes = g.axes.size();
  for (size_t flat = 0; flat < g.values.size(); ++flat) {
    // Row-major: the last axis varies fastest.
    size_t rem = flat;
    std::vector<size_t> idx(naxes, 0);
    for (size_t a = naxes; a-- > 0;) {
      idx[a] = rem % g.axes[a].size();
      rem /= g.axes[a].size();
    }
    for (size_t a = 0; a < naxes; ++a) out += g17(g.axes[a][idx[a]]) + ",";
    out += g17(g.values[flat]) + "\n";
  }
  return out;
}

void write_text_file(const std::string& content, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

}  // namespace iquant
