#pragma once

#include <stdexcept>
#include <string>

namespace blockshift {

// Violated caller contract (bad input). The CLI maps this to exit code 1.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Violated internal invariant (a bug, never bad input). CLI exit code 2.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw precondition_error(message);
}

inline void ensure(bool condition, const std::string& message) {
    if (!condition) throw invariant_error(message);
}

// Euclidean remainder in {0, .., m-1}.
inline int mod(int value, int m) {
    int r = value % m;
    return r < 0 ? r + m : r;
}

// Floor division (rounds towards minus infinity).
inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace blockshift
