#pragma once
// Serialization helpers: spectra as one-column CSV (header `lambda`) or JSON
// arrays, matrices/vectors as headerless CSV.  All floating-point output uses
// 17 significant digits so emit/parse round-trips are bitwise exact.

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "shiftlab/spectrum.hpp"

namespace shiftlab {

// %.17g rendering (shortest form that round-trips IEEE doubles).
std::string format_double(double v);

void write_spectrum_csv(const Spectrum& spectrum, const std::string& path);
Spectrum read_spectrum_csv(const std::string& path);

void write_matrix_csv(const Eigen::MatrixXd& m, const std::string& path);
Eigen::MatrixXd read_matrix_csv(const std::string& path);

void write_vector_csv(const Eigen::VectorXd& v, const std::string& path);
Eigen::VectorXd read_vector_csv(const std::string& path);

// Whole-file helpers used by tests and the CLI.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace shiftlab
