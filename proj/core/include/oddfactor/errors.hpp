#pragma once

#include <stdexcept>
#include <string>

namespace oddfactor {

// Raised when an input exceeds an enumeration or search cap.  The caps turn
// exponential blow-ups into explicit failures; callers may raise them
// deliberately (SearchCaps, or OVERRIDE_CAPS in the CLI).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when conditioned random generation exhausts its retry budget.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a checked mathematical invariant fails.  Every throw of this
// type is a reportable event: either a bug in this library or a genuine
// counterexample to a published inequality.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oddfactor
