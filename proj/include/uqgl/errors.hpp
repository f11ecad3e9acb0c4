#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace uqgl {

// pole / division by zero / evaluation outside the function's domain
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// reading a series coefficient outside the window of known coefficients
struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// parity-sensitive operation applied to an inhomogeneous element
struct ParityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// cache content does not match its recorded hash / malformed artifact
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// search exceeded its configured limits; carries the dimensions reached
struct BudgetError : std::runtime_error {
  std::size_t words_reached;
  std::size_t candidates_reached;
  BudgetError(const std::string& msg, std::size_t words, std::size_t cands)
      : std::runtime_error(msg), words_reached(words), candidates_reached(cands) {}
};

}  // namespace uqgl
