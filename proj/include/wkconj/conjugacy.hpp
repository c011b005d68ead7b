#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "wkconj/involution.hpp"

namespace wk {

/// C(w): the distinct rotations of w in canonical order. C(λ) = {λ}.
struct ConjugateSet {
  Word source;
  std::vector<Word> elements;

  bool contains(std::string_view w) const;
};

/// One split w = uv with |u| = split, contributing θ(v)u.
struct SplitEntry {
  std::size_t split = 0;
  Word value;
};

/// C_θ(w) = {θ(v)u : w = uv}, keeping the split that produced each value.
struct ThetaConjugateSet {
  Word source;
  Involution theta;
  std::vector<SplitEntry> entries;  // |source| + 1 of them, by split
  std::vector<Word> elements;       // deduplicated, canonical order

  bool contains(std::string_view w) const;
};

/// w = (αβ)^(i+1) α v with α, β θ-palindromes and β nonempty.
struct DeficiencyWitness {
  Word alpha;
  Word beta;
  std::size_t i = 0;
  Word v;

  Word compose() const;
  friend bool operator==(const DeficiencyWitness&,
                         const DeficiencyWitness&) = default;
};

ConjugateSet conjugates(std::string_view w, const Alphabet& alphabet);
ThetaConjugateSet theta_conjugates(std::string_view w, const Involution& theta);

/// |C_θ(w)| = |w| + 1, decided from the set itself.
bool is_theta_maximal(std::string_view w, const Involution& theta);

/// Searches the decomposition directly (no conjugate set involved). Order:
/// shortest αβ, then shortest α, then largest i.
std::optional<DeficiencyWitness> deficiency_witness(std::string_view w,
                                                    const Involution& theta);

/// |C_θ(z^i)| for i = 1..k_max.
std::vector<std::size_t> power_growth(std::string_view z,
                                      const Involution& theta,
                                      std::size_t k_max);

}  // namespace wk
