#pragma once

#include <stdexcept>
#include <string>

namespace isharp {

// Bad mathematical input: a slope outside an operation's domain, a
// precondition that does not hold, a missing table key.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text: knot, slope, manifold or record syntax.
class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t pos)
        : DomainError(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Stored data that fails a bound or a cross-check.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two deduction steps that disagree.
class InconsistencyError : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

}  // namespace isharp
