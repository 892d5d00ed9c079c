#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffsubsum {

/// An exhaustive computation would exceed its configured work limit.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::uint64_t guard)
      : std::runtime_error(what + " (guard " + std::to_string(guard) + ")"), guard_(guard) {}
  std::uint64_t guard() const { return guard_; }

 private:
  std::uint64_t guard_;
};

/// A formula produced a value that violates an exact-arithmetic invariant,
/// e.g. a division by q with nonzero remainder.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ffsubsum
