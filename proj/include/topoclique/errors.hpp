#pragma once

#include <stdexcept>
#include <string>

namespace topoclique {

/// Malformed input: out-of-range ids, self-loops, unparsable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine refused to run because the instance is too large.
class SizeRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A greedy construction could not satisfy its contract (e.g. a core has
/// too few admissible neighbours for its star).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace topoclique
