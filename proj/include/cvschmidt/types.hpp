#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace cvschmidt {

using Complex = std::complex<double>;

/// Raised when a computation produces or encounters non-finite / degenerate
/// numbers (as opposed to malformed input, which raises std::invalid_argument).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A 1D interval, possibly with infinite endpoints.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double x) const { return x >= lo && x <= hi; }
    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }

    static Interval real_line() { return {}; }
    static Interval half_line() { return {0.0, std::numeric_limits<double>::infinity()}; }
};

}  // namespace cvschmidt
