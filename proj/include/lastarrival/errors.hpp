#pragma once

#include <stdexcept>
#include <string>

namespace lastarrival {

// Bad inputs or out-of-contract calls. CLI maps these to exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// x*exp(-x) = theta has no solution (theta > 1/e).
class NoSolutionError : public DomainError {
 public:
  explicit NoSolutionError(const std::string& what) : DomainError(what) {}
};

// A threshold recursion produced a decreasing step at index n.
class MonotonicityError : public DomainError {
 public:
  MonotonicityError(const std::string& what, int index)
      : DomainError(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// A recursion denominator became non-positive at index n (losing spiral).
class RecursionFailure : public DomainError {
 public:
  RecursionFailure(const std::string& what, int index)
      : DomainError(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// Strategy construction could not reach a harmonic splice point.
class ConstructionError : public DomainError {
 public:
  explicit ConstructionError(const std::string& what) : DomainError(what) {}
};

// Internal consistency violation. CLI maps these to exit code 4.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lastarrival
