#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wkconj/involution.hpp"

namespace wk {

/// Classification of a word set by the two palindrome predicates. Lists keep
/// the order of the inspected set.
struct PalCensus {
  std::size_t total = 0;
  std::vector<Word> palindromes;
  std::vector<Word> theta_palindromes;
};

PalCensus census(std::span<const Word> elements, const Involution& theta);

PalCensus count_theta_palindromes_in_conjugacy_class(std::string_view w,
                                                     const Involution& theta);
/// Census of C_θ(w). Both named entry points below return the same record;
/// they differ only in which list the caller reads.
PalCensus theta_conjugate_census(std::string_view w, const Involution& theta);
inline PalCensus count_palindromes_in_theta_conjugates(std::string_view w,
                                                       const Involution& theta) {
  return theta_conjugate_census(w, theta);
}
inline PalCensus count_theta_palindromes_in_theta_conjugates(
    std::string_view w, const Involution& theta) {
  return theta_conjugate_census(w, theta);
}

// ---------------------------------------------------------------------------
// Witnesses. Each finder searches decompositions of w directly and never
// consults a census, so "witness exists" and "census is nonempty" are two
// independent computations of the same fact.

/// (x θ(x))^l is a rotation of w and x θ(x) is primitive.
struct TwoThetaPalConjugacyWitness {
  Word x;
  std::size_t l = 1;

  Word compose(const Involution& theta) const;
  friend bool operator==(const TwoThetaPalConjugacyWitness&,
                         const TwoThetaPalConjugacyWitness&) = default;
};

/// Shortest x first, then lexicographic x.
std::optional<TwoThetaPalConjugacyWitness> two_theta_palindrome_conjugacy_witness(
    std::string_view w, const Involution& theta);

enum class PalindromeForm {
  Prefix,  // w = u θ(x^R) x, u a palindrome
  Suffix,  // w = y v θ(y^R), v a palindrome
};

struct PalindromeInThetaConjWitness {
  PalindromeForm form = PalindromeForm::Prefix;
  Word u;  // Prefix: palindrome part; Suffix: y
  Word x;  // Prefix: x;              Suffix: palindrome part v

  Word compose(const Involution& theta) const;
  /// The palindrome the decomposition places in C_θ(w).
  Word palindrome(const Involution& theta) const;
  friend bool operator==(const PalindromeInThetaConjWitness&,
                         const PalindromeInThetaConjWitness&) = default;
};

/// Prefix form before suffix form, shortest x (resp. y) first.
std::optional<PalindromeInThetaConjWitness> palindrome_in_theta_conjugates_witness(
    std::string_view w, const Involution& theta);

enum class ThetaPalForm {
  UXU,  // w = u x u
  XUU,  // w = x u u
};

struct ThetaPalInThetaConjWitness {
  ThetaPalForm form = ThetaPalForm::UXU;
  Word u;
  Word x;  // θ-palindrome

  Word compose() const;
  /// The θ-palindrome the decomposition places in C_θ(w).
  Word theta_palindrome(const Involution& theta) const;
  friend bool operator==(const ThetaPalInThetaConjWitness&,
                         const ThetaPalInThetaConjWitness&) = default;
};

/// UXU before XUU, shortest u first.
std::optional<ThetaPalInThetaConjWitness> theta_palindrome_in_theta_conjugates_witness(
    std::string_view w, const Involution& theta);

/// For two distinct θ-palindromic rotations p = uv and q = vu of one word:
/// the x, i with p = (x θ(x))^i, q = (θ(x) x)^i and x θ(x) primitive.
struct ConjugatePairStructure {
  Word x;
  std::size_t i = 1;
};

std::optional<ConjugatePairStructure> theta_palindromic_pair_structure(
    std::string_view p, std::string_view q, const Involution& theta);

}  // namespace wk
