#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

/// Malformed or inconsistent user input (bad labels, bad files, bad graphs).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A search or enumeration ran past its budget. `partial` is the amount of
/// work (elements, words) produced before giving up.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t partial)
      : std::runtime_error(what), partial_(partial) {}

  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

}  // namespace raag
