#include "matchinfo/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace matchinfo {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path, "cannot open for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError(path, "cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw FileError(path, "write failed");
}

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Whole-line integer list; anything else is an error.
std::vector<long long> parse_ints(const std::string& line, const std::string& where) {
  std::istringstream ss(line);
  std::vector<long long> values;
  long long v;
  while (ss >> v) values.push_back(v);
  ss.clear();
  std::string rest;
  if (ss >> rest) throw std::runtime_error(where + ": unexpected token '" + rest + "'");
  return values;
}

template <class Fn>
void for_each_data_line(std::istream& in, const std::string& source, Fn&& fn) {
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (skippable(line)) continue;
    fn(line, source + ":" + std::to_string(lineno));
  }
}

}  // namespace

Graph parse_edge_list(std::istream& in, const std::string& source) {
  long long declared = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  long long max_vertex = -1;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string where = source + ":" + std::to_string(lineno);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto pos = line.find("n=");
      if (declared < 0 && edges.empty() && pos != std::string::npos) {
        const auto values = parse_ints(line.substr(pos + 2), where);
        if (values.size() != 1 || values[0] < 0) {
          throw std::runtime_error(where + ": malformed header");
        }
        declared = values[0];
      }
      continue;
    }
    const auto values = parse_ints(line, where);
    if (values.size() != 2) throw std::runtime_error(where + ": expected 'u v'");
    const long long u = values[0], v = values[1];
    if (u < 0 || v < 0) throw std::runtime_error(where + ": negative vertex");
    if (declared >= 0 && (u >= declared || v >= declared)) {
      throw std::runtime_error(where + ": vertex outside [0, n)");
    }
    if (u == v) throw std::runtime_error(where + ": self-loop on " + std::to_string(u));
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) {
      throw std::runtime_error(where + ": duplicate edge " + std::to_string(u) + " " +
                               std::to_string(v));
    }
    edges.push_back(key);
    max_vertex = std::max({max_vertex, u, v});
  }
  const long long n = declared >= 0 ? declared : max_vertex + 1;
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  try {
    return parse_edge_list(in, path.string());
  } catch (const FileError&) {
    throw;
  } catch (const std::exception& e) {
    throw FileError(path, e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out = open_out(path);
  write_edge_list(out, g);
  finish(out, path);
}

Permutation read_permutation(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<int> mapping;
  try {
    for_each_data_line(in, path.string(), [&](const std::string& line, const std::string& where) {
      const auto values = parse_ints(line, where);
      if (values.size() != 1) throw std::runtime_error(where + ": expected one integer");
      mapping.push_back(static_cast<int>(values[0]));
    });
    return Permutation(std::move(mapping));
  } catch (const std::exception& e) {
    throw FileError(path, e.what());
  }
}

void write_permutation(const std::filesystem::path& path, const Permutation& phi) {
  std::ofstream out = open_out(path);
  for (int v : phi.mapping()) out << v << '\n';
  finish(out, path);
}

SeedSet read_seeds(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  SeedSet seeds;
  try {
    for_each_data_line(in, path.string(), [&](const std::string& line, const std::string& where) {
      const auto values = parse_ints(line, where);
      if (values.size() != 2) throw std::runtime_error(where + ": expected 'u v'");
      seeds.pairs.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    });
  } catch (const std::exception& e) {
    throw FileError(path, e.what());
  }
  return seeds;
}

void write_seeds(const std::filesystem::path& path, const SeedSet& seeds) {
  std::ofstream out = open_out(path);
  for (const auto& [u, v] : seeds.pairs) out << u << ' ' << v << '\n';
  finish(out, path);
}

std::vector<int> read_labels(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<int> labels;
  try {
    for_each_data_line(in, path.string(), [&](const std::string& line, const std::string& where) {
      const auto values = parse_ints(line, where);
      if (values.size() != 1) throw std::runtime_error(where + ": expected one integer");
      labels.push_back(static_cast<int>(values[0]));
    });
  } catch (const std::exception& e) {
    throw FileError(path, e.what());
  }
  return labels;
}

void write_labels(const std::filesystem::path& path, const std::vector<int>& labels) {
  std::ofstream out = open_out(path);
  for (int v : labels) out << v << '\n';
  finish(out, path);
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ',';
      out << format_real(m(r, c));
    }
    out << '\n';
  }
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
  std::ofstream out = open_out(path);
  write_matrix_csv(out, m);
  finish(out, path);
}

Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw FileError(path, "bad number '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw FileError(path, "ragged rows");
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void Table::add_column(std::string name, bool is_numeric) {
  columns.push_back(std::move(name));
  numeric.push_back(is_numeric);
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  // ordered_json keeps the column order in every object.
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c < t.numeric.size() && t.numeric[c]) {
        // Non-finite values have no JSON number form and stay strings.
        auto parsed = nlohmann::ordered_json::parse(row[c], nullptr, false);
        obj[t.columns[c]] = parsed.is_discarded() ? nlohmann::ordered_json(row[c]) : parsed;
      } else {
        obj[t.columns[c]] = row[c];
      }
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

void write_table(const std::filesystem::path& path, const Table& t, const std::string& format) {
  std::ofstream out = open_out(path);
  if (format == "json") {
    write_json(out, t);
  } else if (format == "csv") {
    write_csv(out, t);
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  finish(out, path);
}

}  // namespace matchinfo
