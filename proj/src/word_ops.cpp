#include "wkconj/word_ops.hpp"

#include <algorithm>

namespace wk {

Word reverse(std::string_view w) { return Word(w.rbegin(), w.rend()); }

bool is_palindrome(std::string_view w) noexcept {
  return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

bool is_theta_palindrome(std::string_view w, const Involution& theta) {
  theta.require_word(w);
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < (n + 1) / 2; ++k)
    if (w[k] != theta.image(w[n - 1 - k])) return false;
  return true;
}

PrimitiveRoot primitive_root(std::string_view w) {
  if (w.empty())
    throw Error(ErrorCode::EmptyWord, "the primitive root of λ is undefined");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // w has period d iff w equals its rotation by d.
    if (std::equal(w.begin() + d, w.end(), w.begin()))
      return {Word(w.substr(0, d)), n / d};
  }
  return {Word(w), 1};
}

bool is_primitive(std::string_view w) { return primitive_root(w).exponent == 1; }

Word power(std::string_view w, std::size_t k) {
  Word out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.append(w);
  return out;
}

}  // namespace wk
