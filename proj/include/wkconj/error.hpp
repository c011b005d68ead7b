#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wk {

enum class ErrorCode {
  UnknownLetter,
  DuplicateLetter,
  IncompleteSpec,
  MalformedGroup,
  InvalidAlphabet,
  AlphabetMismatch,
  EmptyWord,
  InvalidConfig,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every domain failure in the library is reported as an Error carrying one of
// the codes above; the message is a single human-readable line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wk
