#ifndef SNAKECHAR_ERRORS_HPP
#define SNAKECHAR_ERRORS_HPP

#include <stdexcept>

namespace snakechar {

struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeMultiplicity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoRowMatches : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbiguousRows : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TaintedTarget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace snakechar

#endif
