#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wkconj/involution.hpp"

namespace wk {

enum class CheckId {
  T1 = 1,  // |C_θ(w)| ≤ |w|+1 (≤ |w| for nonempty θ-palindromes)
  T2,      // θ-maximal ⟺ no deficiency decomposition
  T3,      // |C_θ(z)| = 1 ⟺ z = aⁿ with θ(a) = a
  T4,      // |C_θ(z^i)| strictly increasing when |C_θ(z)| ≠ 1
  T5,      // ≤ 2 θ-palindromes in C(w), exactly-two structure
  T6,      // palindromes in C_θ(w): witness equivalence, palindromic source
  T7,      // θ-palindromes in C_θ(w): witness equivalence, θ-palindromic source
  T8,      // w^n θ-palindrome ⟺ w θ-palindrome
  T9,      // u ≠ θ(u), uθ(u) = z^i ⟹ i odd and z = xθ(x)
};

inline constexpr std::size_t kCheckCount = 9;

std::string check_name(CheckId id);
/// "T1,T3" or "T1..T9" or "ALL". Throws InvalidConfig.
std::vector<CheckId> parse_check_list(std::string_view text);
std::vector<CheckId> all_checks();

struct SweepConfig {
  explicit SweepConfig(Alphabet a) : alphabet(std::move(a)) {}

  Alphabet alphabet;
  std::vector<Involution> involutions;  // empty: every involution
  std::size_t max_len = 1;
  std::size_t max_power = 3;
  std::vector<CheckId> checks = all_checks();
  unsigned jobs = 1;

  /// Throws InvalidConfig.
  void validate() const;
  /// The explicit list, or every involution in canonical order.
  std::vector<Involution> resolved_involutions() const;
};

struct Counterexample {
  CheckId check = CheckId::T1;
  std::string theta;  // canonical spec
  Word word;
  std::string detail;
  std::string observed;
};

struct CheckOutcome {
  CheckId id = CheckId::T1;
  std::size_t tested = 0;
  // Pairs outside the check's hypothesis (T4: singleton sets, T9: words not
  // of the form uθ(u) with u ≠ θ(u)).
  std::size_t skipped = 0;
  std::vector<Counterexample> counterexamples;
};

struct ExtremalWitness {
  std::string theta;
  Word word;
};

struct ExtremalReport {
  std::size_t max_pal = 0;
  std::size_t max_theta_pal = 0;
  std::vector<ExtremalWitness> pal_argmax;
  std::vector<ExtremalWitness> theta_pal_argmax;
};

struct SweepReport {
  std::string alphabet;
  std::vector<std::string> thetas;
  std::size_t max_len = 0;
  std::size_t max_power = 0;
  unsigned jobs = 1;
  std::size_t words = 0;
  std::vector<CheckOutcome> checks;
  ExtremalReport extremal;
  std::int64_t wall_time_ms = 0;

  std::size_t counterexample_count() const;
};

/// All words of length 0..max_len, shortest first, then lexicographic.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);

struct CheckVerdict {
  bool applicable = true;
  std::optional<Counterexample> violation;
};

/// One check on one pair, through the public single-word operations. Used by
/// the sweep and for replaying counterexamples.
CheckVerdict evaluate_check(CheckId id, std::string_view w,
                            const Involution& theta, std::size_t max_power);

SweepReport run_checks(const SweepConfig& config);
/// Runs the sweep with no checks; only the extremal section is meaningful.
ExtremalReport extremal_search(const SweepConfig& config);

// Constructions that place at least two (θ-)palindromes in C_θ(w).

struct ConstructionCase {
  std::string theta;
  Word u;
  Word x;  // λ for the palindrome family
  std::size_t exponent = 1;
  Word word;
  std::size_t count = 0;      // palindromes (resp. θ-palindromes) in C_θ(word)
  bool named_members = false;  // both named words are present and qualify
  bool commuting = false;      // xu = ux; the two named words coincide
};

/// w = u^(2i) θ(u)^i over palindromes u ≠ θ(u), 1 ≤ |u| ≤ max_u_len. At i = 1
/// the named members are uuu and uθ(u)u.
std::vector<ConstructionCase> palindrome_construction(const Involution& theta,
                                                      std::size_t max_u_len,
                                                      std::size_t exponent);

/// w = (u^i x^(2i))^(2i) over distinct nonempty θ-palindromes x, u of length
/// ≤ max_len. At i = 1 (w = uxxuxx) the named members are θ(x)uxxux and
/// θ(uxx)uxx.
std::vector<ConstructionCase> theta_palindrome_construction(
    const Involution& theta, std::size_t max_len, std::size_t exponent);

}  // namespace wk
