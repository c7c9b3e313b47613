#pragma once

#include <stdexcept>
#include <string>

namespace picite {

// Input data or arguments violate a documented contract (bad counts,
// malformed files, inconsistent parameters).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A lookup by id (author, paper) had no match.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// Caller passed values that contradict each other; indicates a bug on the
// calling side rather than bad input data.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace picite
