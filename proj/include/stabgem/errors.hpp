#pragma once

#include <stdexcept>
#include <string>

namespace stabgem {

/* Error taxonomy, mapped to CLI exit codes by the frontend:
 *   input/config/capability problems -> exit 2
 *   certificate or construction failures -> exit 3
 */

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// Malformed files, bad operator strings, inconsistent groups, bad regions.
struct InputError : Error {
  using Error::Error;
};

// Parameters that cannot describe a valid object (odd lattice dims, square
// bigger than the layout, overlapping patches, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Request exceeds a hard resource limit (dense oracle size caps).
struct CapabilityError : Error {
  using Error::Error;
};

// A synthesis step failed a verification check; message names the step.
struct ConstructionError : Error {
  using Error::Error;
};

// Driver preconditions for a certificate are not met (d too small, no
// feasible mesh, empty patch partition).
struct FeasibilityError : Error {
  using Error::Error;
};

// A certificate was assembled but an asserted bound or witness failed.
struct CertificateError : Error {
  using Error::Error;
};

}  // namespace stabgem
