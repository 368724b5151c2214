#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mfdkf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: config files, CLI overrides, out-of-range parameters.
struct ConfigError : Error {
    using Error::Error;
};

// Structurally valid input that cannot be acted on, e.g. a missing
// neighbor observation or mismatched dimensions at runtime.
struct DataError : Error {
    using Error::Error;
};

// Numerical breakdown that survived the built-in recovery attempts
// (singular innovation covariance after ridge retries, EM collapse
// after the restart budget, non-finite state).
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace mfdkf
