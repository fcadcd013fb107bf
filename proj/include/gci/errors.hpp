#ifndef GCI_ERRORS_HPP
#define GCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gci {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape/size mismatch between inputs.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Precondition violation on values or configuration.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Singular systems, non-finite intermediates, degenerate designs.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Configuration that the procedure cannot serve (e.g. no known reference CDF).
class UnsupportedConfigError : public Error {
public:
    using Error::Error;
};

// CSV parse failure; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

}  // namespace gci

#endif
