#pragma once

#include <stdexcept>
#include <string>

namespace halg {

// Failure kinds. Everything that can go wrong at the math level throws an
// Error carrying one of these, so tests and the CLI can match on the cause
// instead of parsing messages.
enum class Err {
    DescriptorMismatch,  // operands from different rings
    NotDivisible,        // exact division impossible
    NonUnit,             // inverse of a non-unit requested
    ZeroDivisor,         // division by zero (or by 0 series)
    WindowExceeded,      // an index or product escaped the working window
    PrecisionExhausted,  // no u-digits left at the requested operation
    SupportExceeded,     // module action supported beyond the stated bound
    DegreeOverflow,      // bounded-degree polynomial arithmetic overflowed
    Parse,               // description file syntax error
    BadArgument,         // precondition violated (zero constant term etc.)
    Unsupported,         // operation not defined for this ring shape
    Overflow,            // 64-bit integer overflow in exact arithmetic
    FilterViolation,     // filtration is not closed under the coproduct
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
    Err kind() const { return kind_; }

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace halg
