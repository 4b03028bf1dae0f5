// errors.hpp

#pragma once

#include <stdexcept>
#include <string>

namespace permtri {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

struct GroupTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace permtri
