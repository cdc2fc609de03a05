#pragma once

#include <stdexcept>
#include <string>

namespace lukstar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (e.g. mixing elements of
/// different chains). Always checked, also in release builds.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define LUKSTAR_DEFINE_ERROR(Name)    \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

LUKSTAR_DEFINE_ERROR(BoundaryElement);
LUKSTAR_DEFINE_ERROR(BoundExceeded);
LUKSTAR_DEFINE_ERROR(NotOrdered);
LUKSTAR_DEFINE_ERROR(NotSeparated);
LUKSTAR_DEFINE_ERROR(NotStrictlySimple);
LUKSTAR_DEFINE_ERROR(NoTermFound);
LUKSTAR_DEFINE_ERROR(UnboundVariable);
LUKSTAR_DEFINE_ERROR(BudgetExceeded);
LUKSTAR_DEFINE_ERROR(MalformedSequence);
LUKSTAR_DEFINE_ERROR(OutOfRange);
LUKSTAR_DEFINE_ERROR(NotValidated);

#undef LUKSTAR_DEFINE_ERROR

/// Formula text could not be parsed; `position()` is a byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {
[[noreturn]] inline void contract_failed(const char* expr, const char* file,
                                         int line) {
  throw ContractViolation(std::string("contract violated: ") + expr + " (" +
                          file + ":" + std::to_string(line) + ")");
}
}  // namespace detail

}  // namespace lukstar

#define LUKSTAR_EXPECT(cond)                                          \
  do {                                                                \
    if (!(cond)) ::lukstar::detail::contract_failed(#cond, __FILE__, __LINE__); \
  } while (false)
