#pragma once

#include <stdexcept>
#include <string>

namespace bmlab {

/// A derived object failed a structural assertion. Indicates a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Requested object is outside the implemented catalog.
class UnsupportedError : public std::invalid_argument {
 public:
  explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bmlab
