#pragma once

#include <stdexcept>
#include <string>

namespace cpw {

// Unknown vertex/edge identifier, malformed identifier, or a relation set
// that names a sink.
class IdentifierError : public std::runtime_error {
public:
    explicit IdentifierError(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition does not hold (non-hereditary quotient set,
// mismatched contexts, family violating required relations, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed its configured cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Expression syntax error, with a byte offset into the input.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Malformed input file (graph JSON, matrix family JSON).
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cpw
