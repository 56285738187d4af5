#pragma once

#include <stdexcept>
#include <string>

namespace galwave {

struct NonSimultaneousEvents : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IncommensurateBoost : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DifferentFibers : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FiberMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GridMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ComplexPotentialRejected : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace galwave
