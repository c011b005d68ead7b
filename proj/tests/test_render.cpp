#include "doctest.h"

#include "wkconj/explorer.hpp"
#include "wkconj/render.hpp"

using namespace wk;

namespace {

const Alphabet kABC = Alphabet::from_letters("abc");
const Involution kTheta = Involution::parse("ab,c", kABC);
const Involution kSwap = Involution::parse("ab", Alphabet::from_letters("ab"));

void check_round_trip(const Json& j) {
  const std::string text = dump(j);
  CHECK(dump(Json::parse(text)) == text);
}

}  // namespace

TEST_CASE("text goldens for the worked θ-conjugate sets") {
  CHECK(render_theta_conj("aac", kTheta, Format::Text) == "aac\ncaa\ncba\ncbb\n");
  CHECK(render_theta_conj("abb", kTheta, Format::Text) == "aaa\naab\nabb\n");
  CHECK(render_theta_conj("bccb", kTheta, Format::Text) ==
        "abcc\nacbc\nacca\naccb\nbccb\n");
  CHECK(render_theta_conj("aba", kTheta, Format::Text) == "aba\nbaa\nbab\n");
  CHECK(render_theta_conj("ab", kTheta, Format::Text) == "aa\nab\n");
  CHECK(render_theta_conj("abcab", kTheta, Format::Text) ==
        "aabca\nababc\nabcaa\nabcab\n");
  CHECK(render_theta_conj("aaa", kTheta, Format::Text) == "aaa\nbaa\nbba\nbbb\n");
  CHECK(render_theta_conj("", kTheta, Format::Text) == "λ\n");

  CHECK(render_theta_conj("ac", kTheta, Format::Text) == "ac\nca\ncb\n");
  CHECK(render_theta_conj("acac", kTheta, Format::Text) ==
        "acac\ncaca\ncbac\ncbca\ncbcb\n");
  CHECK(render_power_growth("ac", kTheta, 3, Format::Text) == "1 3\n2 5\n3 7\n");

  CHECK(render_theta_conj("abab", kSwap, Format::Text) == "aaba\nabaa\nabab\n");
  CHECK(render_conj("cabab", kABC, Format::Text) ==
        "ababc\nabcab\nbabca\nbcaba\ncabab\n");
}

TEST_CASE("decompose text") {
  CHECK(render_decompose("abb", kTheta, Format::Text) ==
        "source: abb\ntheta: ab,c\nsize: 3 of 4\ntheta_maximal: no\n"
        "witness: alpha=λ beta=ab i=0 v=b\n");
  CHECK(render_decompose("aac", kTheta, Format::Text) ==
        "source: aac\ntheta: ab,c\nsize: 4 of 4\ntheta_maximal: yes\nwitness: none\n");
}

TEST_CASE("analyze json fields") {
  const Json j = analyze_json("abab", kSwap);
  CHECK(j["theta_pal_census"]["count"] == 1);
  CHECK(j["theta_pal_census"]["elements"] == Json::array({"abab"}));
  CHECK(j["conj_theta_pal_census"]["count"] == 2);
  CHECK(j["witnesses"]["palindrome"].is_null());

  const Json empty = analyze_json("", kSwap);
  CHECK(empty["source"] == "");
  CHECK(empty["root"].is_null());
  CHECK(empty["theta_conj_size"] == 1);

  // Fixed field order.
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys.front() == "source");
  CHECK(keys.back() == "witnesses");
}

TEST_CASE("json output round-trips byte for byte") {
  for (const auto& theta : enumerate_involutions(kABC))
    for (const auto& w : enumerate_words(kABC, 4)) {
      check_round_trip(theta_conj_json(w, theta));
      check_round_trip(analyze_json(w, theta));
      check_round_trip(decompose_json(w, theta));
      check_round_trip(conj_json(w, kABC));
      if (!w.empty()) check_round_trip(power_growth_json(w, theta, 3));
    }
  check_round_trip(involutions_json(kABC));
  SweepConfig config(kABC);
  config.max_len = 4;
  check_round_trip(report_json(run_checks(config)));
}
