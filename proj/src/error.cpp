#include "wkconj/error.hpp"

namespace wk {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::DuplicateLetter: return "DuplicateLetter";
    case ErrorCode::IncompleteSpec: return "IncompleteSpec";
    case ErrorCode::MalformedGroup: return "MalformedGroup";
    case ErrorCode::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace wk
