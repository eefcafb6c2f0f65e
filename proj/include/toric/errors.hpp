#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Caller passed arguments that violate an operation's contract.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Mathematically undefined request (e.g. inverse of zero).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Request exceeds the library's desk-scale resource guards.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toric
