#pragma once

#include <stdexcept>
#include <string>

namespace hirz {

// Bad input or a violated precondition. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The input is well formed but the computation cannot proceed (irrational
// points, tangential contact, ...). The CLI maps this to exit code 2.
class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

class SurfaceMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NoIntegralMember : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class HypothesisNotMet : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t pos)
        : ValidationError(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class NotUnibranch : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class IrrationalInfinitelyNearPoint : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class IrrationalIntersectionPoint : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class TangentialContact : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class TriplePoint : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class SharedComponent : public ComputationError {
public:
    using ComputationError::ComputationError;
};

}  // namespace hirz
