#include "wkconj/conjugacy.hpp"

#include <algorithm>

#include "wkconj/word_ops.hpp"

namespace wk {
namespace {

void canonicalize(std::vector<Word>& words, const Alphabet& alphabet) {
  std::sort(words.begin(), words.end(),
            [&](const Word& a, const Word& b) { return alphabet.less(a, b); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

bool sorted_contains(const std::vector<Word>& words, std::string_view w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

}  // namespace

bool ConjugateSet::contains(std::string_view w) const {
  return sorted_contains(elements, w);
}

bool ThetaConjugateSet::contains(std::string_view w) const {
  return sorted_contains(elements, w);
}

Word DeficiencyWitness::compose() const {
  Word period = alpha + beta;
  return power(period, i + 1) + alpha + v;
}

ConjugateSet conjugates(std::string_view w, const Alphabet& alphabet) {
  if (!alphabet.contains_word(w))
    throw Error(ErrorCode::AlphabetMismatch,
                "\"" + std::string(w) + "\" is not over alphabet \"" +
                    alphabet.letters() + "\"");
  ConjugateSet out{Word(w), {}};
  if (w.empty()) {
    out.elements.emplace_back();
    return out;
  }
  for (std::size_t k = 0; k < w.size(); ++k)
    out.elements.push_back(Word(w.substr(k)) + Word(w.substr(0, k)));
  canonicalize(out.elements, alphabet);
  return out;
}

ThetaConjugateSet theta_conjugates(std::string_view w, const Involution& theta) {
  theta.require_word(w);
  ThetaConjugateSet out{Word(w), theta, {}, {}};
  out.entries.reserve(w.size() + 1);
  for (std::size_t k = 0; k <= w.size(); ++k) {
    Word value = theta.apply(w.substr(k)) + Word(w.substr(0, k));
    out.entries.push_back({k, value});
    out.elements.push_back(std::move(value));
  }
  canonicalize(out.elements, theta.alphabet());
  return out;
}

bool is_theta_maximal(std::string_view w, const Involution& theta) {
  return theta_conjugates(w, theta).elements.size() == w.size() + 1;
}

std::optional<DeficiencyWitness> deficiency_witness(std::string_view w,
                                                    const Involution& theta) {
  theta.require_word(w);
  const std::size_t n = w.size();
  for (std::size_t period = 1; period <= n; ++period) {
    for (std::size_t alpha_len = 0; alpha_len < period; ++alpha_len) {
      if (period + alpha_len > n) break;
      std::string_view alpha = w.substr(0, alpha_len);
      std::string_view beta = w.substr(alpha_len, period - alpha_len);
      if (!is_theta_palindrome(alpha, theta) || !is_theta_palindrome(beta, theta))
        continue;
      // (αβ)^(j+1) α is a prefix of w iff w has period |αβ| on that prefix.
      std::size_t periodic = period;
      while (periodic < n && w[periodic] == w[periodic - period]) ++periodic;
      if (periodic < period + alpha_len) continue;
      const std::size_t i = (periodic - alpha_len) / period - 1;
      const std::size_t used = (i + 1) * period + alpha_len;
      return DeficiencyWitness{Word(alpha), Word(beta), i, Word(w.substr(used))};
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> power_growth(std::string_view z,
                                      const Involution& theta,
                                      std::size_t k_max) {
  if (z.empty())
    throw Error(ErrorCode::EmptyWord, "power growth needs a nonempty word");
  theta.require_word(z);
  std::vector<std::size_t> sizes;
  sizes.reserve(k_max);
  for (std::size_t i = 1; i <= k_max; ++i)
    sizes.push_back(theta_conjugates(power(z, i), theta).elements.size());
  return sizes;
}

}  // namespace wk
