#pragma once

#include <stdexcept>
#include <string>

namespace plancherel {

// Bad argument or value outside the domain of a formula.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size or precision cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Valid input that this build does not handle (e.g. non-prime fields).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computation routes disagreed or an invariant broke. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace plancherel
