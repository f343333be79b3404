#ifndef BRAIDROOTS_ERROR_HPP_
#define BRAIDROOTS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidroots {

  /// Every failure the library reports. The CLI maps these onto exit codes.
  enum class ErrorCode {
    StrandCountMismatch,
    IndexOutOfRange,
    EmptyKeepSet,
    NotOnePure,
    DegreeMismatch,
    ShapeMismatch,
    NotStandardlyReduced,
    NotPeriodic,
    CentralInput,
    BoundExceeded,
    HypothesisViolated,
    ExteriorMismatch,
    HintRequired,
    NotPeriodicExterior,
    CentralExterior,
    NotApplicable,
    NotMember,
    ParseError,
    InternalIdentityViolated,
    VerificationFailed,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class BraidError : public std::runtime_error {
   public:
    BraidError(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void raise(ErrorCode code, std::string const& what) {
    throw BraidError(code, what);
  }

}  // namespace braidroots

#endif  // BRAIDROOTS_ERROR_HPP_
