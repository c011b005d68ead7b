#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wkconj/error.hpp"

namespace wk {

// Words are plain byte strings; every symbol is one printable character.
using Word = std::string;

/// Finite ordered set of single-character letters. The declared order is the
/// order used for every canonical (lexicographic) listing in the library.
class Alphabet {
 public:
  /// Throws InvalidAlphabet for an empty or non-printable letter set and
  /// DuplicateLetter when a letter repeats.
  static Alphabet from_letters(std::string_view letters);

  /// Letters of `text` in ascending byte order, duplicates removed.
  static Alphabet spanning(std::string_view text);

  Alphabet(const Alphabet&) = default;
  Alphabet& operator=(const Alphabet&) = default;

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool contains(char c) const noexcept { return rank_[index(c)] >= 0; }
  /// Position of `c` in the declared order; -1 when absent.
  int rank(char c) const noexcept { return rank_[index(c)]; }

  bool contains_word(std::string_view w) const noexcept;
  /// Strict lexicographic order under the declared letter order; shorter
  /// words first when one is a prefix of the other.
  bool less(std::string_view a, std::string_view b) const noexcept;
  /// Length first, then lexicographic.
  bool shortlex_less(std::string_view a, std::string_view b) const noexcept;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.letters_ == b.letters_;
  }

 private:
  static std::size_t index(char c) noexcept {
    return static_cast<unsigned char>(c);
  }

  Alphabet() { rank_.fill(-1); }

  std::string letters_;
  std::array<int, 256> rank_{};
};

/// A self-inverse letter bijection together with its antimorphic extension
/// θ(a1...an) = θ(an)...θ(a1).
class Involution {
 public:
  /// Grammar: comma-separated groups, "xy" swaps x and y, "x" fixes x. Every
  /// alphabet letter appears in exactly one group.
  static Involution parse(std::string_view spec, const Alphabet& alphabet);
  /// θ = plain reversal.
  static Involution identity(const Alphabet& alphabet);
  /// `images[k]` is the image of the k-th alphabet letter. Throws when the
  /// map is not a self-inverse bijection on the alphabet.
  static Involution from_images(const Alphabet& alphabet,
                                std::string_view images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  char image(char c) const noexcept {
    return map_[static_cast<unsigned char>(c)];
  }
  /// Images in alphabet order.
  std::string images() const;
  bool is_identity() const noexcept;

  /// Canonical spec string: groups in alphabet order of their first letter.
  std::string spec() const;

  /// Throws AlphabetMismatch unless every symbol of `w` is in the alphabet.
  void require_word(std::string_view w) const;

  /// Antimorphic image θ(w).
  Word apply(std::string_view w) const;
  /// Letter-wise image without reversal, i.e. θ(w^R).
  Word apply_morphic(std::string_view w) const;

  friend bool operator==(const Involution& a, const Involution& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.map_ == b.map_;
  }

 private:
  explicit Involution(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  Alphabet alphabet_;
  std::array<char, 256> map_{};
};

inline Word apply_theta(const Involution& theta, std::string_view w) {
  theta.require_word(w);
  return theta.apply(w);
}

/// Every involution on the alphabet, ordered lexicographically by image
/// sequence.
std::vector<Involution> enumerate_involutions(const Alphabet& alphabet);

}  // namespace wk
