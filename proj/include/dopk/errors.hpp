#ifndef DOPK_ERRORS_HPP
#define DOPK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dopk {

// Grid construction rejected two equal points.
class duplicate_point_error : public std::invalid_argument {
public:
    explicit duplicate_point_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// A lower-parameter Pochhammer vanished inside the summation range of a
// terminating hypergeometric series.
class denominator_zero_error : public std::domain_error {
public:
    explicit denominator_zero_error(const std::string& what)
        : std::domain_error(what) {}
};

// A Gamma-function argument in a transformation prefactor hit a
// non-positive integer.
class gamma_pole_error : public std::domain_error {
public:
    explicit gamma_pole_error(const std::string& what)
        : std::domain_error(what) {}
};

// Subset enumeration would exceed the configured budget.
class budget_exceeded_error : public std::runtime_error {
public:
    explicit budget_exceeded_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Malformed textual input (rational literals, grid/weight files).
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace dopk

#endif // DOPK_ERRORS_HPP
