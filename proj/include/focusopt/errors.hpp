#pragma once

#include <stdexcept>
#include <string>

namespace focusopt {

/// A requested tolerance could not be certified.  Thrown instead of
/// returning a silently inaccurate value.
class accuracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root bracket does not contain a sign change.
class bracket_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative eigensolver exhausted its iteration budget.  Usually a
/// symptom of spectral near-degeneracy; callers may fall back to the
/// dense solver.
class iteration_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace focusopt
