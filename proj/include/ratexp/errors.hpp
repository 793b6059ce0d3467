#pragma once

#include <stdexcept>
#include <string>

namespace ratexp {

// Input outside the mathematical domain of an operation (log of a ball
// touching zero, invalid (s, t) pair, empty sweep range, ...).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Adaptive precision hit its cap without reaching a decision.
class precision_exhausted : public std::runtime_error {
 public:
  explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// An exact identity the library relies on failed to hold.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ratexp
