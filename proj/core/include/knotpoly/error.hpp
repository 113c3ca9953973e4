#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotpoly {

/// Malformed text input (polynomials, PD codes). Carries a character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Structurally invalid diagram, or an operation applied outside its domain.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The skein recursion expanded more nodes than the context allows.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace knotpoly
