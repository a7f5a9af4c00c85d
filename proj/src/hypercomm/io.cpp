#include "hypercomm/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hypercomm/error.hpp"

namespace hypercomm {

Labels read_labels(std::istream& in) {
  Labels labels;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream ls(line);
    long long value = 0;
    if (!(ls >> value))
      fail(Status::parse_error,
           "labels line " + std::to_string(line_no) + ": expected an integer");
    require(value >= 1, Status::invalid_argument,
            "labels line " + std::to_string(line_no) + ": label must be >= 1");
    labels.push_back(static_cast<std::uint32_t>(value));
  }
  require(!labels.empty(), Status::parse_error, "label file is empty");
  return labels;
}

Labels read_labels_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Status::io_error, "cannot open '" + path + "'");
  return read_labels(in);
}

void write_labels(const Labels& labels, std::ostream& out) {
  for (auto label : labels) out << label << '\n';
}

void write_labels_file(const Labels& labels, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), Status::io_error, "cannot open '" + path + "' for writing");
  write_labels(labels, out);
  out.flush();
  require(out.good(), Status::io_error, "write to '" + path + "' failed");
}

Mat read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::uint64_t line_no = 0;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      std::string cell = line.substr(pos, comma - pos);
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        fail(Status::parse_error, "csv line " + std::to_string(line_no) +
                                      ": bad number '" + cell + "'");
      }
      pos = comma + 1;
      if (comma == line.size()) break;
    }
    if (cols == 0) cols = row.size();
    require(row.size() == cols, Status::parse_error,
            "csv line " + std::to_string(line_no) + ": ragged row");
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), Status::parse_error, "csv file is empty");
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

Mat read_matrix_csv_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Status::io_error, "cannot open '" + path + "'");
  return read_matrix_csv(in);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_matrix_csv(const Mat& m, std::ostream& out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_csv_file(const Mat& m, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), Status::io_error, "cannot open '" + path + "' for writing");
  write_matrix_csv(m, out);
  out.flush();
  require(out.good(), Status::io_error, "write to '" + path + "' failed");
}

}  // namespace hypercomm
