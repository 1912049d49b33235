#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlab {

// Caller broke a documented precondition.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct NonFiniteInput : std::runtime_error {
    std::size_t index;
    NonFiniteInput(std::size_t i, const std::string& where)
        : std::runtime_error(where + ": non-finite sample at index " + std::to_string(i)), index(i) {}
};

struct AxisSingularity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Delta = 1 + phi_r^2 - phi_t^2 fell below the floor (or went non-finite).
struct TimelikeViolation : std::runtime_error {
    std::size_t node;
    double delta;
    TimelikeViolation(std::size_t n, double d)
        : std::runtime_error("time-like violation at node " + std::to_string(n) +
                             " (Delta = " + std::to_string(d) + ")"),
          node(n), delta(d) {}
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InadmissiblePair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mlab
