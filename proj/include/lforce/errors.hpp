#pragma once

#include <stdexcept>
#include <string>

namespace lforce {

// Rejected parameters: bad family sizes, out-of-range vertices, mismatched
// universes, invalid leak budgets.
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input text. Carries a 1-based line number when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A covering instance where some fort cannot reach its multiplicity even if
// every eligible vertex were chosen. Names the offending fort.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, int fort_index)
        : std::runtime_error(what), fort_index_(fort_index) {}
    int fort_index() const { return fort_index_; }

private:
    int fort_index_;
};

// Work refused because the input exceeds a configured size cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lforce
