#pragma once

#include <stdexcept>
#include <string>

namespace grpd {

/// Bad parameters or a violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation refused to start because it would exceed a size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cap on the number of group elements / basis morphisms enumerated.
inline constexpr long long kDefaultCap = 1'000'000;

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

inline void require_cap(long long size, long long cap, const std::string& what) {
  if (size > cap) {
    throw ResourceError(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace grpd
