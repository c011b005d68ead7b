#include "wkconj/structure.hpp"

#include "wkconj/conjugacy.hpp"
#include "wkconj/word_ops.hpp"

namespace wk {

PalCensus census(std::span<const Word> elements, const Involution& theta) {
  PalCensus out;
  out.total = elements.size();
  for (const Word& w : elements) {
    if (is_theta_palindrome(w, theta)) out.theta_palindromes.push_back(w);
    if (is_palindrome(w)) out.palindromes.push_back(w);
  }
  return out;
}

PalCensus count_theta_palindromes_in_conjugacy_class(std::string_view w,
                                                     const Involution& theta) {
  theta.require_word(w);
  return census(conjugates(w, theta.alphabet()).elements, theta);
}

PalCensus theta_conjugate_census(std::string_view w, const Involution& theta) {
  return census(theta_conjugates(w, theta).elements, theta);
}

Word TwoThetaPalConjugacyWitness::compose(const Involution& theta) const {
  return power(x + theta.apply(x), l);
}

std::optional<TwoThetaPalConjugacyWitness> two_theta_palindrome_conjugacy_witness(
    std::string_view w, const Involution& theta) {
  theta.require_word(w);
  const std::size_t n = w.size();
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    if (n % (2 * half) != 0) continue;
    std::optional<Word> best;
    // Any (xθ(x))^l rotation of w starts at some rotation offset, so x is
    // the length-|x| factor of the doubled word at that offset.
    const Word doubled = Word(w) + Word(w);
    for (std::size_t offset = 0; offset < n; ++offset) {
      Word x = doubled.substr(offset, half);
      Word block = x + theta.apply(x);
      if (!is_primitive(block)) continue;
      if (doubled.compare(offset, n, power(block, n / block.size())) != 0)
        continue;
      if (!best || theta.alphabet().less(x, *best)) best = std::move(x);
    }
    if (best) return TwoThetaPalConjugacyWitness{*best, n / (2 * half)};
  }
  return std::nullopt;
}

Word PalindromeInThetaConjWitness::compose(const Involution& theta) const {
  if (form == PalindromeForm::Prefix)
    return u + theta.apply(reverse(x)) + x;
  return u + x + theta.apply(reverse(u));
}

Word PalindromeInThetaConjWitness::palindrome(const Involution& theta) const {
  if (form == PalindromeForm::Prefix)
    return theta.apply(x) + u + theta.apply(reverse(x));
  return reverse(u) + theta.apply(x) + u;
}

std::optional<PalindromeInThetaConjWitness> palindrome_in_theta_conjugates_witness(
    std::string_view w, const Involution& theta) {
  theta.require_word(w);
  const std::size_t n = w.size();
  // θ(x^R) is the letter-wise image of x.
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    std::string_view u = w.substr(0, n - 2 * k);
    std::string_view x = w.substr(n - k);
    if (is_palindrome(u) && w.substr(n - 2 * k, k) == theta.apply_morphic(x))
      return PalindromeInThetaConjWitness{PalindromeForm::Prefix, Word(u), Word(x)};
  }
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    std::string_view y = w.substr(0, k);
    std::string_view v = w.substr(k, n - 2 * k);
    if (is_palindrome(v) && w.substr(n - k) == theta.apply_morphic(y))
      return PalindromeInThetaConjWitness{PalindromeForm::Suffix, Word(y), Word(v)};
  }
  return std::nullopt;
}

Word ThetaPalInThetaConjWitness::compose() const {
  return form == ThetaPalForm::UXU ? u + x + u : x + u + u;
}

Word ThetaPalInThetaConjWitness::theta_palindrome(const Involution& theta) const {
  // uxu split as u|xu and xuu split as xu|u both give θ(u) x u.
  return theta.apply(u) + x + u;
}

std::optional<ThetaPalInThetaConjWitness> theta_palindrome_in_theta_conjugates_witness(
    std::string_view w, const Involution& theta) {
  theta.require_word(w);
  const std::size_t n = w.size();
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    std::string_view u = w.substr(0, k);
    std::string_view x = w.substr(k, n - 2 * k);
    if (w.substr(n - k) == u && is_theta_palindrome(x, theta))
      return ThetaPalInThetaConjWitness{ThetaPalForm::UXU, Word(u), Word(x)};
  }
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    std::string_view x = w.substr(0, n - 2 * k);
    std::string_view u = w.substr(n - 2 * k, k);
    if (w.substr(n - k) == u && is_theta_palindrome(x, theta))
      return ThetaPalInThetaConjWitness{ThetaPalForm::XUU, Word(u), Word(x)};
  }
  return std::nullopt;
}

std::optional<ConjugatePairStructure> theta_palindromic_pair_structure(
    std::string_view p, std::string_view q, const Involution& theta) {
  theta.require_word(p);
  theta.require_word(q);
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    if (n % (2 * half) != 0) continue;
    Word x(p.substr(0, half));
    Word tx = theta.apply(x);
    Word block = x + tx;
    if (!is_primitive(block)) continue;
    const std::size_t i = n / block.size();
    if (power(block, i) == p && power(tx + x, i) == q)
      return ConjugatePairStructure{std::move(x), i};
  }
  return std::nullopt;
}

}  // namespace wk
