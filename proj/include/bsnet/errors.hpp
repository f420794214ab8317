#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsnet {

// Base class for every error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter outside the supported domain (n < 3, width > 63, ...).
struct domain_error : error {
  using error::error;
};

// Mismatched widths or sizes (incomparable codes, net vs configuration, ...).
struct dimension_error : error {
  using error::error;
};

// Malformed textual or JSON input.
struct parse_error : error {
  using error::error;
};

// A state violates a constraint it is required to satisfy (invalid initial
// state, word outside the proven domain of a relation, ...).
struct constraint_error : error {
  using error::error;
};

// detect_orbit exhausted its step budget without finding a repeat.
struct orbit_limit_error : error {
  std::size_t steps;
  explicit orbit_limit_error(std::size_t steps_taken)
      : error("no state repeat within " + std::to_string(steps_taken) +
              " steps"),
        steps(steps_taken) {}
};

// sequence_period could not confirm any eventual period in the given trace.
struct evidence_error : error {
  using error::error;
};

}  // namespace bsnet
