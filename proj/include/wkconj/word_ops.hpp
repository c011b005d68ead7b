#pragma once

#include <cstddef>
#include <string_view>

#include "wkconj/involution.hpp"

namespace wk {

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

Word reverse(std::string_view w);
bool is_palindrome(std::string_view w) noexcept;
/// Throws AlphabetMismatch when `w` leaves theta's alphabet.
bool is_theta_palindrome(std::string_view w, const Involution& theta);

/// Shortest period dividing |w|. Throws EmptyWord for λ.
PrimitiveRoot primitive_root(std::string_view w);
bool is_primitive(std::string_view w);

/// w repeated k times; k = 0 yields λ.
Word power(std::string_view w, std::size_t k);

}  // namespace wk
