#pragma once

#include <stdexcept>

namespace lapbound {

// Input file or configuration could not be parsed or validated.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested dimension has no faces, so the quantity is vacuous.
struct VacuousDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotASubcomplex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction would materialize more faces than the configured budget.
struct FaceBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix exceeds the dense-computation caps.
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lapbound
