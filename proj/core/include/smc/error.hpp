#ifndef SMC_ERROR_HPP
#define SMC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace smc {

// Every failure mode of the library maps to one named condition.  The CLI
// translates Error into a diagnostic line and a nonzero exit status; tests
// match on code().  Precondition breaches that indicate caller bugs (rather
// than bad data) throw std::invalid_argument instead.
enum class Errc {
  // parsing / representation
  ParseError,           // malformed structure or mu file (duplicate rel, bad token, ...)
  DuplicateTriplePoint, // a rel line names the same point twice
  LinearityViolation,   // two points lie on two distinct lines
  UnknownPoint,         // a point name or index outside the structure
  TooManyPoints,        // beyond the supported point cap for the operation
  // predimension
  BadIntersection,      // independence(A,B,C) called with A cap B != C
  TooManySets,          // check_flat family larger than 5
  // pairs
  EmptyExtension,       // is_primitive with A empty
  NotPrimitive,         // find_base on a non-0-primitive extension
  NotAlphaPoint,        // extended_base: no supporting line (or wrong flavor)
  Ambiguous,            // extended_base: two supporting lines (corrupt data)
  UnresolvedCode,       // mu lookup with no explicit entry, no alpha match, no default
  // amalgamation
  BadGlue,              // glue map is not a common induced substructure
  LineOverflow,         // merged line would exceed mu(alpha) + 2
  BudgetExhausted,      // generic builder ran out of points
  SeedNotAdmissible,    // builder seed fails the mu-class membership check
  // decomposition
  NotStrongBase,        // linear decomposition from a non-strong base
  Stuck,                // no 0-primitive step exists but points remain
  IllegalSwap,          // chain reorder hypothesis violated
  NotNormal,            // ambient not certified / not decomposable over the base
  DependentBase,        // base fails dim(I) = |I|
  // definability
  NoCertificate,        // orbit analysis without a normality certificate or waiver
  // registry
  UnknownFixture,       // name not in the embedded fixture registry
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace smc

#endif  // SMC_ERROR_HPP
