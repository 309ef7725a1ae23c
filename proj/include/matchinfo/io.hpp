#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "matchinfo/graph.hpp"
#include "matchinfo/matching.hpp"

namespace matchinfo {

/// File-level failure that names the offending path.
class FileError : public std::runtime_error {
 public:
  FileError(const std::filesystem::path& path, const std::string& what)
      : std::runtime_error(path.string() + ": " + what), path_(path) {}
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// The file could not be opened at all.
class MissingFileError : public FileError {
 public:
  using FileError::FileError;
};

// Edge lists: optional "# n=<int>" header, then "u v" per line, 0-based.
// Without a header n is one more than the largest endpoint. Other lines
// starting with '#' and blank lines are skipped. Duplicate edges (in either
// orientation) and self-loops are errors. parse_edge_list throws
// std::runtime_error tagged "<source>:<line>"; the path readers rethrow as
// FileError.
Graph parse_edge_list(std::istream& in, const std::string& source = "<stream>");
Graph read_edge_list(const std::filesystem::path& path);
/// Always writes the header, then edges u < v in row-major order.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Line i holds φ(i).
Permutation read_permutation(const std::filesystem::path& path);
void write_permutation(const std::filesystem::path& path, const Permutation& phi);

/// Lines "u v": vertex u of the first graph corresponds to v of the second.
SeedSet read_seeds(const std::filesystem::path& path);
void write_seeds(const std::filesystem::path& path, const SeedSet& seeds);

/// One integer label per line.
std::vector<int> read_labels(const std::filesystem::path& path);
void write_labels(const std::filesystem::path& path, const std::vector<int>& labels);

/// Comma-separated rows, 17 significant digits, no header.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);
void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);

/// "%.17g".
std::string format_real(double x);

/// A rectangular table of preformatted cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Columns whose cells are written as JSON numbers rather than strings.
  std::vector<bool> numeric;

  void add_column(std::string name, bool is_numeric);
};

void write_csv(std::ostream& out, const Table& t);
/// Array of objects, one per row, keys in column order.
void write_json(std::ostream& out, const Table& t);
void write_table(const std::filesystem::path& path, const Table& t, const std::string& format);

}  // namespace matchinfo
