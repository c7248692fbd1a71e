#ifndef LOSMIX_ERRORS_HPP
#define LOSMIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace losmix {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A distribution parameter is outside its legal range (sigma <= 0, p outside (0,1), ...).
struct ParameterDomainError : Error {
    using Error::Error;
};

/// An observation violates the data contract (y <= 0, non-finite, ...).
struct DataDomainError : Error {
    using Error::Error;
};

/// A record or configuration does not conform to the declared feature schema.
struct SchemaError : Error {
    using Error::Error;
};

/// Dimension mismatch between coefficient vectors and design matrix columns.
struct ShapeError : Error {
    using Error::Error;
};

/// A truncated series exceeded its term cap before reaching the requested mass.
struct TruncationError : Error {
    TruncationError(const std::string& msg, double mass)
        : Error(msg), accumulated_mass(mass) {}
    double accumulated_mass;
};

/// Degenerate input to a fitting routine (zero variance, all-equal data).
struct DegenerateFitError : Error {
    using Error::Error;
};

/// An EM component received (numerically) zero total weight.
struct ComponentStarvationError : Error {
    using Error::Error;
};

/// A model handed to a consumer violates its own contract (non-monotone CDF, ...).
struct ModelValidityError : Error {
    using Error::Error;
};

/// Bad run configuration (missing paths, contradictory options).
struct ConfigError : Error {
    using Error::Error;
};

/// Fitting could not start (non-finite likelihood at the initial point).
struct InitError : Error {
    using Error::Error;
};

/// Filesystem failure, reported with path context.
struct IoError : Error {
    using Error::Error;
};

}  // namespace losmix

#endif
