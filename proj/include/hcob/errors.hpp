#pragma once

#include <stdexcept>
#include <string>

namespace hcob {

// Malformed or inconsistent user input (bad file, unknown simplex, wrong
// dimensions). The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well formed but describes something the algorithms cannot extract
// an invariant from (missing towers, broken module relations, placeholder
// fixtures). Exit code 2.
class ModelInvalid : public std::runtime_error {
 public:
  explicit ModelInvalid(const std::string& what) : std::runtime_error(what) {}
};

// A self-check failed: d^2 != 0 after construction, SNF recheck mismatch, etc.
// Exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void check_internal(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace hcob
