#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "wkconj/explorer.hpp"
#include "wkconj/render.hpp"
#include "wkconj/structure.hpp"

using namespace wk;

namespace {

SweepConfig config_for(const std::string& letters, std::size_t max_len,
                       std::vector<std::string> thetas = {}) {
  SweepConfig config(Alphabet::from_letters(letters));
  for (const auto& t : thetas)
    config.involutions.push_back(Involution::parse(t, config.alphabet));
  config.max_len = max_len;
  return config;
}

Json without_wall_time(const SweepReport& report) {
  Json j = report_json(report);
  j.erase("wall_time_ms");
  return j;
}

}  // namespace

TEST_CASE("enumerate_words") {
  CHECK(enumerate_words(Alphabet::from_letters("a"), 2) ==
        std::vector<Word>{"", "a", "aa"});
  CHECK(enumerate_words(Alphabet::from_letters("ab"), 1) ==
        std::vector<Word>{"", "a", "b"});

  // Geometric series Σ_{k=0..10} 3^k = (3^11 − 1) / 2.
  std::size_t series = 0, p = 1;
  for (int k = 0; k <= 10; ++k, p *= 3) series += p;
  CHECK(series == 88573);
  auto abc = Alphabet::from_letters("abc");
  const auto words = enumerate_words(abc, 10);
  CHECK(words.size() == 88573);
  CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());
  CHECK(std::is_sorted(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    return abc.shortlex_less(a, b);
  }));
  CHECK(enumerate_words(abc, 4) == oracle::words_up_to("abc", 4));
}

TEST_CASE("check list parsing") {
  CHECK(parse_check_list("T1,T3") == std::vector<CheckId>{CheckId::T1, CheckId::T3});
  CHECK(parse_check_list("T2..T4").size() == 3);
  CHECK(parse_check_list("ALL") == all_checks());
  CHECK(parse_check_list("T9,T1,T1") == std::vector<CheckId>{CheckId::T1, CheckId::T9});
  for (const char* bad : {"", "T0", "T10", "X1", "T", "T1,,T2", "T4..T2", "T1a"})
    CHECK_THROWS_AS(parse_check_list(bad), Error);
}

TEST_CASE("config validation") {
  auto good = config_for("ab", 3);
  CHECK_NOTHROW(good.validate());

  auto bad = good;
  bad.max_len = 0;
  CHECK_THROWS_AS(run_checks(bad), Error);
  bad = good;
  bad.max_power = 0;
  CHECK_THROWS_AS(run_checks(bad), Error);
  bad = good;
  bad.jobs = 0;
  CHECK_THROWS_AS(run_checks(bad), Error);
  bad = good;
  bad.checks.clear();
  CHECK_THROWS_AS(run_checks(bad), Error);
  bad = good;
  bad.involutions.push_back(Involution::parse("ab,c", Alphabet::from_letters("abc")));
  CHECK_THROWS_AS(run_checks(bad), Error);
  bad = good;
  bad.max_len = 40;
  CHECK_THROWS_AS(run_checks(bad), Error);
}

TEST_CASE("run_checks examples") {
  auto t1 = config_for("abc", 3, {"ab,c"});
  t1.checks = {CheckId::T1};
  auto r1 = run_checks(t1);
  REQUIRE(r1.checks.size() == 1);
  CHECK(r1.checks[0].tested == 1 + 3 + 9 + 27);
  CHECK(r1.counterexample_count() == 0);

  auto t3 = config_for("a", 5, {"a"});
  t3.checks = {CheckId::T3};
  auto r3 = run_checks(t3);
  CHECK(r3.checks[0].tested == 6);
  CHECK(r3.counterexample_count() == 0);

  auto full = config_for("ab", 6);
  auto rf = run_checks(full);
  CHECK(rf.thetas == std::vector<std::string>{"a,b", "ab"});
  CHECK(rf.checks.size() == 9);
  CHECK(rf.counterexample_count() == 0);
  for (const auto& c : rf.checks) CHECK(c.tested == 2 * 127);
}

TEST_CASE("check applicability") {
  auto unary = Involution::parse("a", Alphabet::from_letters("a"));
  CHECK_FALSE(evaluate_check(CheckId::T4, "aaa", unary, 3).applicable);
  auto swap = Involution::parse("ab", Alphabet::from_letters("ab"));
  auto t9 = evaluate_check(CheckId::T9, "ab", swap, 3);
  CHECK(t9.applicable);
  CHECK_FALSE(t9.violation);
  CHECK_FALSE(evaluate_check(CheckId::T9, "aa", swap, 3).applicable);
  // (ab)(ba)(ab)(ba)... u = abab has θ(u) = abab, excluded.
  CHECK_FALSE(evaluate_check(CheckId::T9, "abababab", swap, 3).applicable);
  // u = aab: uθ(u) = aababb = (aababb)^1.
  CHECK(evaluate_check(CheckId::T9, "aababb", swap, 3).applicable);
  CHECK_THROWS_AS(evaluate_check(CheckId::T1, "abc", swap, 3), Error);
}

TEST_CASE("sweep report is independent of the job count") {
  auto config = config_for("abc", 6);
  config.jobs = 1;
  const auto one = run_checks(config);
  config.jobs = 4;
  const auto four = run_checks(config);
  config.jobs = 7;
  const auto seven = run_checks(config);
  CHECK(dump(without_wall_time(one)) == dump(without_wall_time(four)));
  CHECK(dump(without_wall_time(one)) == dump(without_wall_time(seven)));
  CHECK(render_report(one, Format::Text).substr(0, 200) ==
        render_report(four, Format::Text).substr(0, 200));
}

TEST_CASE("extremal_search examples") {
  auto swap = extremal_search(config_for("ab", 6, {"ab"}));
  CHECK(swap.max_pal >= 2);
  CHECK(std::any_of(swap.pal_argmax.begin(), swap.pal_argmax.end(),
                    [](const ExtremalWitness& w) { return w.word == "aaa"; }));

  auto unary = extremal_search(config_for("a", 4, {"a"}));
  CHECK(unary.max_pal == 1);
  CHECK(unary.max_theta_pal == 1);
  CHECK(unary.pal_argmax.size() == 5);

  // Exhaustive oracle scan over the same range, then the frozen maxima.
  auto abc = Alphabet::from_letters("abc");
  auto theta = Involution::parse("ab,c", abc);
  std::size_t best_pal = 0, best_tpal = 0;
  std::vector<Word> pal_words;
  for (const auto& w : oracle::words_up_to("abc", 8)) {
    std::size_t pals = 0, tpals = 0;
    for (const auto& e : oracle::theta_conjugates_by_splits(theta, w)) {
      pals += oracle::is_pal(e);
      tpals += oracle::is_theta_pal(theta, e);
    }
    if (pals > best_pal) pal_words.clear();
    if (pals >= best_pal) pal_words.push_back(w);
    best_pal = std::max(best_pal, pals);
    best_tpal = std::max(best_tpal, tpals);
  }
  CHECK(best_pal == 3);
  CHECK(best_tpal == 2);
  CHECK(pal_words == std::vector<Word>{"abaaabb", "babbbaa"});

  auto scanned = extremal_search(config_for("abc", 8, {"ab,c"}));
  CHECK(scanned.max_pal == 3);
  CHECK(scanned.max_theta_pal == 2);
  REQUIRE(scanned.pal_argmax.size() == 2);
  CHECK(scanned.pal_argmax[0].word == "abaaabb");
  CHECK(scanned.pal_argmax[1].word == "babbbaa");

  // Argmax words replay to the reported counts.
  for (const auto& w : scanned.pal_argmax)
    CHECK(theta_conjugate_census(w.word, theta).palindromes.size() == scanned.max_pal);
  for (const auto& w : scanned.theta_pal_argmax)
    CHECK(theta_conjugate_census(w.word, theta).theta_palindromes.size() ==
          scanned.max_theta_pal);
}

TEST_CASE("palindrome construction u u θ(u)") {
  for (const std::string letters : {"ab", "abc"}) {
    auto alphabet = Alphabet::from_letters(letters);
    for (const auto& theta : enumerate_involutions(alphabet)) {
      const auto cases = palindrome_construction(theta, 3, 1);
      if (theta.is_identity()) CHECK(cases.empty());
      for (const auto& c : cases) {
        CAPTURE(c.word);
        CHECK(c.word == c.u + c.u + theta.apply(c.u));
        CHECK(c.named_members);
        CHECK(c.count >= 2);
      }
    }
  }
  auto theta = Involution::parse("ab,c", Alphabet::from_letters("abc"));
  const auto cases = palindrome_construction(theta, 1, 1);
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].word == "aab");
}

TEST_CASE("θ-palindrome construction u x x u x x") {
  auto theta = Involution::parse("ab,c", Alphabet::from_letters("abc"));
  const auto cases = theta_palindrome_construction(theta, 2, 1);
  // θ-palindromes of length ≤ 2: c, ab, ba, cc; 4·3 ordered distinct pairs.
  REQUIRE(cases.size() == 12);
  for (const auto& c : cases) {
    CAPTURE(c.u);
    CAPTURE(c.x);
    CHECK(c.word == c.u + c.x + c.x + c.u + c.x + c.x);
    CHECK(c.named_members);
    if (c.commuting)
      CHECK(c.count == 1);
    else
      CHECK(c.count >= 2);
  }
  CHECK(std::count_if(cases.begin(), cases.end(),
                      [](const ConstructionCase& c) { return c.commuting; }) == 2);
}
