#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace grassflow {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;

// Thrown when an argument violates a documented precondition (sizes, ranges).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a value lies outside the mathematical domain of an operation
// (e.g. a vector that must be block-off-diagonal but is not).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown by file loading when a stored field violates a type invariant.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed input files.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double frob(const Mat& m) { return m.norm(); }

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace grassflow
