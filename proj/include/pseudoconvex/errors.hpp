#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pseudoconvex/vertex_set.hpp"

namespace pseudoconvex {

// Malformed input, out-of-range ranks, size guards.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem's hypothesis does not hold. `witness` holds the offending indices;
// `witness_kind` says whether they are edge/target indices or vertex ranks.
class PremiseViolated : public std::runtime_error {
 public:
  PremiseViolated(std::string message, std::string witness_kind, std::vector<std::size_t> witness)
      : std::runtime_error(std::move(message)),
        witness_kind(std::move(witness_kind)),
        witness(std::move(witness)) {}

  std::string witness_kind;
  std::vector<std::size_t> witness;
};

// A result failed its own re-verification. Seeing one means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pseudoconvex
