#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace hypercomm {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Labels = std::vector<std::uint32_t>;  // 1-based community labels

// Label file: one integer per line, line i = label of vertex i.
Labels read_labels(std::istream& in);
Labels read_labels_file(const std::string& path);
void write_labels(const Labels& labels, std::ostream& out);
void write_labels_file(const Labels& labels, const std::string& path);

// Dense CSV matrix, full decimal precision, one row per line.
Mat read_matrix_csv(std::istream& in);
Mat read_matrix_csv_file(const std::string& path);
void write_matrix_csv(const Mat& m, std::ostream& out);
void write_matrix_csv_file(const Mat& m, const std::string& path);

std::string format_double(double value);  // >= 15 significant digits

}  // namespace hypercomm
