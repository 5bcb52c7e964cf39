#pragma once

#include <stdexcept>
#include <string>

namespace puc {

// Error taxonomy shared by the library and the command line tool.  The kind
// drives the process exit code (config -> 2, parse -> 3, numeric -> 4); see
// the README for the full contract.
enum class ErrorKind { config, parse, numeric };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

// Invalid request: bad parameter values, mismatched dimensions, unknown names.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(ErrorKind::config, msg) {}
};

// Malformed input data (CSV syntax, non-numeric cells, ragged rows).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(ErrorKind::parse, msg) {}
};

// Numerical failure: domain violations, degenerate data, non-finite values.
struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(ErrorKind::numeric, msg) {}
};

// Adaptive integration ran out of subdivisions; carries the best estimate so
// callers can report how far the computation got.
struct QuadratureError : NumericError {
    QuadratureError(const std::string& msg, double partial_estimate, int panels_used)
        : NumericError(msg), partial(partial_estimate), panels(panels_used) {}

    double partial;
    int panels;
};

}  // namespace puc
