#pragma once

#include <stdexcept>
#include <string>

namespace combid {

// Malformed or inconsistent input: bad literal, dimension mismatch,
// mixed ring modes, cyclic graph where a DAG is required, and so on.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The two operands of a ring operation live in different rings.
class mode_mismatch : public input_error {
public:
    mode_mismatch() : input_error("ring mode mismatch: rational and polynomial weights cannot be mixed") {}
    explicit mode_mismatch(const std::string &what) : input_error(what) {}
};

class singular_matrix : public input_error {
public:
    singular_matrix() : input_error("SINGULAR: coefficient matrix has zero determinant") {}
};

// Enumeration or size limit hit. Factorial and exponential enumerations fail
// loudly instead of running away.
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace combid
