#pragma once

#include <stdexcept>
#include <string>

namespace tsgreen {

// Every throwing path in the library uses one of these. The CLI maps them to
// structured JSON on stderr and a nonzero exit code.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

struct BadInput : Error {
  explicit BadInput(const std::string& msg) : Error("bad_input", msg) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error("cap_exceeded", msg) {}
};

// Raised when decompose() cannot certify a complete decomposition within its
// budget. Callers must treat this as "unknown", never as "indecomposable".
struct DecompositionFailed : Error {
  explicit DecompositionFailed(const std::string& msg) : Error("decomposition_failed", msg) {}
};

// Raised when two independent criteria that must agree (e.g. Hermite-form
// membership vs Smith-form fullness) disagree; indicates an internal bug, so
// it is never caught inside the library.
struct InternalCheckFailed : Error {
  explicit InternalCheckFailed(const std::string& msg) : Error("internal_check_failed", msg) {}
};

// A catalog entry where the primordiality verdict and the Dress classification
// disagree. The CLI exits with code 2 on this.
struct TheoremViolation : Error {
  explicit TheoremViolation(const std::string& msg) : Error("theorem_violation", msg) {}
};

}  // namespace tsgreen
