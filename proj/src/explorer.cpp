#include "wkconj/explorer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "wkconj/conjugacy.hpp"
#include "wkconj/structure.hpp"
#include "wkconj/word_ops.hpp"

namespace wk {
namespace {

constexpr double kMaxSweepWords = 5e7;

std::string show(std::string_view w) {
  return w.empty() ? std::string("λ") : std::string(w);
}

std::string show_list(const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (k) out += ",";
    out += show(words[k]);
  }
  return out + "}";
}

template <typename T>
std::string show_list(const std::vector<T>& values) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? "," : "") << values[k];
  os << "]";
  return os.str();
}

CheckVerdict fail(CheckId id, std::string_view w, const Involution& theta,
                  std::string detail, std::string observed) {
  return {true, Counterexample{id, theta.spec(), Word(w), std::move(detail),
                               std::move(observed)}};
}

CheckVerdict check_cardinality(std::string_view w, const Involution& theta) {
  const auto set = theta_conjugates(w, theta);
  const std::size_t size = set.elements.size();
  if (size > w.size() + 1)
    return fail(CheckId::T1, w, theta, "|C_θ(w)| exceeds |w|+1",
                "size=" + std::to_string(size));
  if (!w.empty() && is_theta_palindrome(w, theta) && size > w.size())
    return fail(CheckId::T1, w, theta,
                "θ-palindrome with |C_θ(w)| exceeding |w|",
                "size=" + std::to_string(size));
  return {};
}

CheckVerdict check_maximality(std::string_view w, const Involution& theta) {
  const bool maximal = is_theta_maximal(w, theta);
  const auto witness = deficiency_witness(w, theta);
  if (maximal == witness.has_value())
    return fail(CheckId::T2, w, theta,
                maximal ? "θ-maximal word has a deficiency decomposition"
                        : "deficient word has no deficiency decomposition",
                "maximal=" + std::string(maximal ? "true" : "false"));
  if (witness) {
    const bool sound = witness->compose() == w && !witness->beta.empty() &&
                       is_theta_palindrome(witness->alpha, theta) &&
                       is_theta_palindrome(witness->beta, theta);
    if (!sound)
      return fail(CheckId::T2, w, theta, "deficiency witness is unsound",
                  "alpha=" + show(witness->alpha) + " beta=" + show(witness->beta) +
                      " i=" + std::to_string(witness->i) + " v=" + show(witness->v));
  }
  return {};
}

CheckVerdict check_singleton(std::string_view w, const Involution& theta) {
  const std::size_t size = theta_conjugates(w, theta).elements.size();
  // λ = a^0 counts as a fixed-letter power.
  const bool fixed_power =
      std::all_of(w.begin(), w.end(), [&](char c) { return c == w.front(); }) &&
      (w.empty() || theta.image(w.front()) == w.front());
  if ((size == 1) != fixed_power)
    return fail(CheckId::T3, w, theta,
                size == 1 ? "singleton set for a word that is not a fixed-letter power"
                          : "fixed-letter power with a non-singleton set",
                "size=" + std::to_string(size));
  return {};
}

CheckVerdict check_growth(std::string_view w, const Involution& theta,
                          std::size_t max_power) {
  if (theta_conjugates(w, theta).elements.size() == 1) return {false, {}};
  const auto sizes = power_growth(w, theta, max_power);
  for (std::size_t k = 1; k < sizes.size(); ++k)
    if (sizes[k] <= sizes[k - 1])
      return fail(CheckId::T4, w, theta,
                  "|C_θ(z^i)| does not strictly increase", "sizes=" + show_list(sizes));
  return {};
}

CheckVerdict check_conjugacy_class(std::string_view w, const Involution& theta) {
  const auto tally = count_theta_palindromes_in_conjugacy_class(w, theta);
  const auto& pals = tally.theta_palindromes;
  if (pals.size() > 2)
    return fail(CheckId::T5, w, theta, "more than two θ-palindromes in C(w)",
                "theta_palindromes=" + show_list(pals));
  const auto witness = two_theta_palindrome_conjugacy_witness(w, theta);
  if ((pals.size() == 2) != witness.has_value())
    return fail(CheckId::T5, w, theta,
                "exactly-two θ-palindrome count disagrees with the (xθ(x))^l witness",
                "theta_palindromes=" + show_list(pals) +
                    " witness=" + (witness ? "present" : "absent"));
  if (witness) {
    const Word block = witness->x + theta.apply(witness->x);
    if (!is_primitive(block) ||
        !conjugates(w, theta.alphabet()).contains(witness->compose(theta)))
      return fail(CheckId::T5, w, theta, "(xθ(x))^l witness is unsound",
                  "x=" + show(witness->x) + " l=" + std::to_string(witness->l));
  }
  if (pals.size() == 2 &&
      !theta_palindromic_pair_structure(pals[0], pals[1], theta) &&
      !theta_palindromic_pair_structure(pals[1], pals[0], theta))
    return fail(CheckId::T5, w, theta,
                "θ-palindromic rotations are not (xθ(x))^i and (θ(x)x)^i",
                "theta_palindromes=" + show_list(pals));
  return {};
}

CheckVerdict check_palindromes(std::string_view w, const Involution& theta) {
  const auto set = theta_conjugates(w, theta);
  const auto tally = census(set.elements, theta);
  const auto witness = palindrome_in_theta_conjugates_witness(w, theta);
  const std::size_t count = tally.palindromes.size();
  if ((count >= 1) != witness.has_value())
    return fail(CheckId::T6, w, theta,
                "palindrome count disagrees with the uθ(x^R)x / yvθ(y^R) witness",
                "palindromes=" + show_list(tally.palindromes) +
                    " witness=" + (witness ? "present" : "absent"));
  if (witness) {
    const Word& middle =
        witness->form == PalindromeForm::Prefix ? witness->u : witness->x;
    const Word produced = witness->palindrome(theta);
    if (witness->compose(theta) != w || !is_palindrome(middle) ||
        !is_palindrome(produced) || !set.contains(produced))
      return fail(CheckId::T6, w, theta, "palindrome witness is unsound",
                  "u=" + show(witness->u) + " x=" + show(witness->x));
  }
  if (is_palindrome(w)) {
    const bool fixed = is_theta_palindrome(w, theta);
    if (count > 2 || (!fixed && count != 2))
      return fail(CheckId::T6, w, theta,
                  "palindromic source with the wrong palindrome count",
                  "palindromes=" + show_list(tally.palindromes));
  }
  return {};
}

CheckVerdict check_theta_palindromes(std::string_view w, const Involution& theta) {
  const auto set = theta_conjugates(w, theta);
  const auto tally = census(set.elements, theta);
  const auto witness = theta_palindrome_in_theta_conjugates_witness(w, theta);
  const auto& pals = tally.theta_palindromes;
  if (!pals.empty() != witness.has_value())
    return fail(CheckId::T7, w, theta,
                "θ-palindrome count disagrees with the uxu / xuu witness",
                "theta_palindromes=" + show_list(pals) +
                    " witness=" + (witness ? "present" : "absent"));
  if (witness) {
    const Word produced = witness->theta_palindrome(theta);
    if (witness->compose() != w || !is_theta_palindrome(witness->x, theta) ||
        !is_theta_palindrome(produced, theta) || !set.contains(produced))
      return fail(CheckId::T7, w, theta, "θ-palindrome witness is unsound",
                  "u=" + show(witness->u) + " x=" + show(witness->x));
  }
  if (is_theta_palindrome(w, theta) && (pals.size() != 1 || pals.front() != w))
    return fail(CheckId::T7, w, theta,
                "θ-palindromic source whose census is not exactly {w}",
                "theta_palindromes=" + show_list(pals));
  return {};
}

CheckVerdict check_power_transfer(std::string_view w, const Involution& theta,
                                  std::size_t max_power) {
  const bool base = is_theta_palindrome(w, theta);
  for (std::size_t n = 1; n <= std::max<std::size_t>(max_power, 2); ++n)
    if (is_theta_palindrome(power(w, n), theta) != base)
      return fail(CheckId::T8, w, theta,
                  "θ-palindromicity of w^n differs from that of w",
                  "n=" + std::to_string(n));
  return {};
}

CheckVerdict check_odd_exponent(std::string_view w, const Involution& theta) {
  if (w.empty() || w.size() % 2 != 0) return {false, {}};
  const std::string_view u = w.substr(0, w.size() / 2);
  if (w.substr(w.size() / 2) != theta.apply(u) || is_theta_palindrome(u, theta))
    return {false, {}};
  const auto root = primitive_root(w);
  const std::string_view z = root.root;
  const bool odd = root.exponent % 2 == 1;
  const bool shaped = z.size() % 2 == 0 &&
                      z.substr(z.size() / 2) == theta.apply(z.substr(0, z.size() / 2));
  if (!odd || !shaped)
    return fail(CheckId::T9, w, theta,
                "uθ(u) = z^i without i odd and z = xθ(x)",
                "z=" + show(z) + " i=" + std::to_string(root.exponent));
  return {};
}

struct SliceResult {
  std::vector<CheckOutcome> checks;
  // (involution index, word index) pairs for each extremum.
  std::size_t max_pal = 0;
  std::size_t max_theta_pal = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pal_argmax;
  std::vector<std::pair<std::size_t, std::size_t>> theta_pal_argmax;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Counterexample>> found;
};

void track(std::size_t value, std::size_t& best,
           std::vector<std::pair<std::size_t, std::size_t>>& argmax,
           std::pair<std::size_t, std::size_t> where) {
  if (value > best) {
    best = value;
    argmax.clear();
  }
  if (value == best) argmax.push_back(where);
}

SliceResult sweep_slice(const std::vector<Word>& words,
                        const std::vector<Involution>& involutions,
                        const std::vector<CheckId>& checks, std::size_t max_power,
                        std::size_t begin, std::size_t end) {
  SliceResult out;
  for (CheckId id : checks) out.checks.push_back(CheckOutcome{id, 0, 0, {}});
  for (std::size_t t = 0; t < involutions.size(); ++t) {
    const Involution& theta = involutions[t];
    for (std::size_t k = begin; k < end; ++k) {
      const Word& w = words[k];
      for (std::size_t c = 0; c < checks.size(); ++c) {
        auto verdict = evaluate_check(checks[c], w, theta, max_power);
        auto& outcome = out.checks[c];
        ++outcome.tested;
        if (!verdict.applicable) ++outcome.skipped;
        if (verdict.violation)
          out.found.emplace_back(c, t, k, std::move(*verdict.violation));
      }
      const auto tally = theta_conjugate_census(w, theta);
      track(tally.palindromes.size(), out.max_pal, out.pal_argmax, {t, k});
      track(tally.theta_palindromes.size(), out.max_theta_pal,
            out.theta_pal_argmax, {t, k});
    }
  }
  return out;
}

void merge_argmax(std::size_t value,
                  const std::vector<std::pair<std::size_t, std::size_t>>& where,
                  std::size_t& best,
                  std::vector<std::pair<std::size_t, std::size_t>>& argmax) {
  if (where.empty()) return;
  if (value > best) {
    best = value;
    argmax.clear();
  }
  if (value == best) argmax.insert(argmax.end(), where.begin(), where.end());
}

}  // namespace

std::string check_name(CheckId id) {
  return "T" + std::to_string(static_cast<int>(id));
}

std::vector<CheckId> all_checks() {
  std::vector<CheckId> out;
  for (std::size_t k = 1; k <= kCheckCount; ++k)
    out.push_back(static_cast<CheckId>(k));
  return out;
}

std::vector<CheckId> parse_check_list(std::string_view text) {
  if (text == "ALL" || text == "all") return all_checks();
  auto parse_one = [](std::string_view item) -> int {
    if (item.size() < 2 || (item[0] != 'T' && item[0] != 't'))
      throw Error(ErrorCode::InvalidConfig,
                  "unknown check \"" + std::string(item) + "\"");
    int value = 0;
    for (char c : item.substr(1)) {
      if (c < '0' || c > '9')
        throw Error(ErrorCode::InvalidConfig,
                    "unknown check \"" + std::string(item) + "\"");
      value = value * 10 + (c - '0');
      if (value > 99) break;
    }
    if (value < 1 || value > static_cast<int>(kCheckCount))
      throw Error(ErrorCode::InvalidConfig,
                  "unknown check \"" + std::string(item) + "\"");
    return value;
  };

  std::vector<bool> chosen(kCheckCount + 1, false);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      int lo = parse_one(item.substr(0, dots));
      int hi = parse_one(item.substr(dots + 2));
      if (lo > hi)
        throw Error(ErrorCode::InvalidConfig,
                    "empty check range \"" + std::string(item) + "\"");
      for (int k = lo; k <= hi; ++k) chosen[k] = true;
    } else {
      chosen[parse_one(item)] = true;
    }
    start = end + 1;
  }
  std::vector<CheckId> out;
  for (std::size_t k = 1; k <= kCheckCount; ++k)
    if (chosen[k]) out.push_back(static_cast<CheckId>(k));
  return out;
}

void SweepConfig::validate() const {
  if (max_len < 1) throw Error(ErrorCode::InvalidConfig, "max_len must be ≥ 1");
  if (max_power < 1)
    throw Error(ErrorCode::InvalidConfig, "max_power must be ≥ 1");
  if (jobs < 1) throw Error(ErrorCode::InvalidConfig, "jobs must be ≥ 1");
  if (checks.empty())
    throw Error(ErrorCode::InvalidConfig, "at least one check is required");
  for (const auto& theta : involutions)
    if (!(theta.alphabet() == alphabet))
      throw Error(ErrorCode::InvalidConfig,
                  "involution " + theta.spec() + " is not over alphabet \"" +
                      alphabet.letters() + "\"");
  if (std::pow(static_cast<double>(alphabet.size()), static_cast<double>(max_len)) >
      kMaxSweepWords)
    throw Error(ErrorCode::InvalidConfig,
                "sweep range too large: " + std::to_string(alphabet.size()) + "^" +
                    std::to_string(max_len) + " words");
}

std::vector<Involution> SweepConfig::resolved_involutions() const {
  if (involutions.empty()) return enumerate_involutions(alphabet);
  return involutions;
}

std::size_t SweepReport::counterexample_count() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.counterexamples.size();
  return total;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
  const std::string& letters = alphabet.letters();
  std::vector<Word> out{Word()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k)
      for (char c : letters) out.push_back(out[k] + c);
    level_begin = level_end;
  }
  return out;
}

CheckVerdict evaluate_check(CheckId id, std::string_view w,
                            const Involution& theta, std::size_t max_power) {
  theta.require_word(w);
  switch (id) {
    case CheckId::T1: return check_cardinality(w, theta);
    case CheckId::T2: return check_maximality(w, theta);
    case CheckId::T3: return check_singleton(w, theta);
    case CheckId::T4: return check_growth(w, theta, max_power);
    case CheckId::T5: return check_conjugacy_class(w, theta);
    case CheckId::T6: return check_palindromes(w, theta);
    case CheckId::T7: return check_theta_palindromes(w, theta);
    case CheckId::T8: return check_power_transfer(w, theta, max_power);
    case CheckId::T9: return check_odd_exponent(w, theta);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown check");
}

SweepReport run_checks(const SweepConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  const auto involutions = config.resolved_involutions();
  const auto words = enumerate_words(config.alphabet, config.max_len);

  std::vector<CheckId> checks = config.checks;
  std::sort(checks.begin(), checks.end());
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());

  // Contiguous word ranges per worker; the merge below restores one order.
  const std::size_t jobs = std::min<std::size_t>(config.jobs, words.size());
  std::vector<SliceResult> slices(jobs);
  {
    std::vector<std::jthread> workers;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t begin = words.size() * j / jobs;
      const std::size_t end = words.size() * (j + 1) / jobs;
      workers.emplace_back([&, j, begin, end] {
        slices[j] = sweep_slice(words, involutions, checks, config.max_power,
                                begin, end);
      });
    }
  }

  SweepReport report;
  report.alphabet = config.alphabet.letters();
  for (const auto& theta : involutions) report.thetas.push_back(theta.spec());
  report.max_len = config.max_len;
  report.max_power = config.max_power;
  report.jobs = config.jobs;
  report.words = words.size();
  for (CheckId id : checks) report.checks.push_back(CheckOutcome{id, 0, 0, {}});

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Counterexample>> found;
  std::vector<std::pair<std::size_t, std::size_t>> pal_argmax, theta_pal_argmax;
  for (auto& slice : slices) {
    for (std::size_t c = 0; c < checks.size(); ++c) {
      report.checks[c].tested += slice.checks[c].tested;
      report.checks[c].skipped += slice.checks[c].skipped;
    }
    for (auto& f : slice.found) found.push_back(std::move(f));
    merge_argmax(slice.max_pal, slice.pal_argmax, report.extremal.max_pal, pal_argmax);
    merge_argmax(slice.max_theta_pal, slice.theta_pal_argmax,
                 report.extremal.max_theta_pal, theta_pal_argmax);
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
  });
  for (auto& [c, t, k, counterexample] : found)
    report.checks[c].counterexamples.push_back(std::move(counterexample));

  auto emit = [&](std::vector<std::pair<std::size_t, std::size_t>>& where,
                  std::vector<ExtremalWitness>& out) {
    std::sort(where.begin(), where.end());
    for (auto [t, k] : where) out.push_back({report.thetas[t], words[k]});
  };
  emit(pal_argmax, report.extremal.pal_argmax);
  emit(theta_pal_argmax, report.extremal.theta_pal_argmax);

  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  return report;
}

ExtremalReport extremal_search(const SweepConfig& config) {
  SweepConfig scan = config;
  scan.checks = {CheckId::T1};
  return run_checks(scan).extremal;
}

std::vector<ConstructionCase> palindrome_construction(const Involution& theta,
                                                      std::size_t max_u_len,
                                                      std::size_t exponent) {
  std::vector<ConstructionCase> out;
  for (const Word& u : enumerate_words(theta.alphabet(), max_u_len)) {
    if (!is_palindrome(u) || is_theta_palindrome(u, theta)) continue;
    const Word tu = theta.apply(u);
    ConstructionCase c{theta.spec(), u, Word(), exponent,
                       power(u, 2 * exponent) + power(tu, exponent)};
    const auto set = theta_conjugates(c.word, theta);
    c.count = census(set.elements, theta).palindromes.size();
    if (exponent == 1) {
      const Word first = u + u + u;
      const Word second = u + tu + u;
      c.named_members = set.contains(first) && set.contains(second) &&
                        is_palindrome(first) && is_palindrome(second);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ConstructionCase> theta_palindrome_construction(
    const Involution& theta, std::size_t max_len, std::size_t exponent) {
  std::vector<Word> pals;
  for (const Word& w : enumerate_words(theta.alphabet(), max_len))
    if (!w.empty() && is_theta_palindrome(w, theta)) pals.push_back(w);

  std::vector<ConstructionCase> out;
  for (const Word& x : pals) {
    for (const Word& u : pals) {
      if (x == u) continue;
      const Word block = power(u, exponent) + power(x, 2 * exponent);
      ConstructionCase c{theta.spec(), u, x, exponent, power(block, 2 * exponent)};
      c.commuting = x + u == u + x;
      const auto set = theta_conjugates(c.word, theta);
      c.count = census(set.elements, theta).theta_palindromes.size();
      if (exponent == 1) {
        const Word first = theta.apply(x) + u + x + x + u + x;
        const Word second = theta.apply(u + x + x) + u + x + x;
        c.named_members = set.contains(first) && set.contains(second) &&
                          is_theta_palindrome(first, theta) &&
                          is_theta_palindrome(second, theta);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace wk
