#pragma once

#include <stdexcept>
#include <string>

namespace tzhu {

// A result would lie above the model's weight cutoff.
struct CutoffExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mode index is incompatible with the g-grading of its state.
struct GradingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A module computation needs a larger depth than was built.
struct InsufficientDepth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid model, twist or parameter combination.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace tzhu
