#pragma once

#include <stdexcept>
#include <string>

namespace qsl {

// Error taxonomy used across the toolkit:
//   domain_error     -- a value violates an operation's precondition
//   capability_error -- the request is beyond a configured bound (size caps)
//   parse_error      -- malformed external input; carries the byte offset
//   numeric_error    -- an iterative solver missed its tolerance; carries the
//                       best iterate so callers can inspect how close it got

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

struct numeric_error : std::runtime_error {
    numeric_error(const std::string& what, double best_value, double residual)
        : std::runtime_error(what), best_value(best_value), residual(residual) {}
    double best_value;
    double residual;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qsl
