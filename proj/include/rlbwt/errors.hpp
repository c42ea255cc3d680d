#ifndef RLBWT_ERRORS_HPP_
#define RLBWT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rlbwt {

// A position, count or search target outside the valid range.
struct range_error : std::out_of_range {
  explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

// An argument that violates an operation's contract.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// A null or foreign handle.
struct invalid_handle_error : std::invalid_argument {
  explicit invalid_handle_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// An operation requiring a feature the structure was built without.
struct unsupported_error : std::logic_error {
  explicit unsupported_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace rlbwt

#endif  // RLBWT_ERRORS_HPP_
