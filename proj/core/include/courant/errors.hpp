#ifndef COURANT_ERRORS_HPP
#define COURANT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace courant {

/// Base error for the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid user-supplied data: malformed documents, dimension mismatches,
/// violated construction preconditions. The CLI maps this to exit code 3.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

} // namespace courant

#endif
