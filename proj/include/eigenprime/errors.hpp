#pragma once

#include <stdexcept>
#include <string>

namespace eigenprime {

/// Raised when an argument exceeds a table limit, an overflow guard or a
/// brute-force budget.
class capacity_error : public std::length_error {
public:
    explicit capacity_error(const std::string& what) : std::length_error(what) {}
};

/// Raised when an argument is outside the mathematical domain of an
/// operation (non-coprime residue class, point not on the surface, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace eigenprime
