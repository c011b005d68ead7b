// Exercises the shared library strictly through its C interface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"
#include "wkconj/wkconj.h"

namespace {

std::string take(wk_string* s) {
  std::string out(wk_string_data(s), wk_string_size(s));
  wk_string_free(s);
  return out;
}

wk_theta* parse(const char* spec, const char* alphabet) {
  wk_theta* theta = nullptr;
  REQUIRE(wk_theta_parse(spec, alphabet, &theta) == WK_OK);
  return theta;
}

}  // namespace

TEST_CASE("theta handles") {
  wk_theta* theta = parse("ba,c", "abc");
  wk_string* s = nullptr;
  REQUIRE(wk_theta_spec(theta, &s) == WK_OK);
  CHECK(take(s) == "ab,c");
  REQUIRE(wk_theta_apply(theta, "aac", &s) == WK_OK);
  CHECK(take(s) == "cbb");

  int flag = -1;
  REQUIRE(wk_theta_is_palindrome(theta, "abcab", &flag) == WK_OK);
  CHECK(flag == 1);
  REQUIRE(wk_theta_is_maximal(theta, "aac", &flag) == WK_OK);
  CHECK(flag == 1);
  size_t count = 0;
  REQUIRE(wk_theta_conjugate_count(theta, "abcab", &count) == WK_OK);
  CHECK(count == 4);

  CHECK(wk_theta_apply(theta, "abz", &s) == WK_ERR_ALPHABET_MISMATCH);
  CHECK(std::string(wk_last_error()).find("'z'") != std::string::npos);
  wk_theta_free(theta);

  // NULL alphabet: letters of the spec.
  theta = parse("ab", nullptr);
  REQUIRE(wk_theta_spec(theta, &s) == WK_OK);
  CHECK(take(s) == "ab");
  wk_theta_free(theta);
}

TEST_CASE("error codes") {
  wk_theta* theta = nullptr;
  CHECK(wk_theta_parse("ab,a", "ab", &theta) == WK_ERR_DUPLICATE_LETTER);
  CHECK(wk_theta_parse("az", "ab", &theta) == WK_ERR_UNKNOWN_LETTER);
  CHECK(wk_theta_parse("ab", "abc", &theta) == WK_ERR_INCOMPLETE_SPEC);
  CHECK(wk_theta_parse("abc", "abc", &theta) == WK_ERR_MALFORMED_GROUP);
  CHECK(wk_theta_parse("a", "aa", &theta) == WK_ERR_DUPLICATE_LETTER);
  CHECK(wk_theta_parse(nullptr, "ab", &theta) == WK_ERR_INVALID_ARGUMENT);
  CHECK(theta == nullptr);
  CHECK(std::string(wk_status_name(WK_ERR_INCOMPLETE_SPEC)) == "IncompleteSpec");

  theta = parse("ab", "ab");
  wk_string* s = nullptr;
  CHECK(wk_render_power_growth(theta, "", 3, WK_FORMAT_TEXT, &s) == WK_ERR_EMPTY_WORD);
  CHECK(wk_render_power_growth(theta, "ab", 0, WK_FORMAT_TEXT, &s) ==
        WK_ERR_INVALID_CONFIG);
  CHECK(wk_render_analyze(theta, nullptr, WK_FORMAT_TEXT, &s) == WK_ERR_INVALID_ARGUMENT);
  wk_theta_free(theta);
}

TEST_CASE("involution enumeration") {
  size_t count = 0;
  REQUIRE(wk_involution_count("abcd", &count) == WK_OK);
  CHECK(count == 10);
  wk_theta* theta = nullptr;
  REQUIRE(wk_involution_at("abc", 2, &theta) == WK_OK);
  wk_string* s = nullptr;
  REQUIRE(wk_theta_spec(theta, &s) == WK_OK);
  CHECK(take(s) == "ab,c");
  wk_theta_free(theta);
  CHECK(wk_involution_at("abc", 4, &theta) == WK_ERR_INVALID_CONFIG);
  REQUIRE(wk_render_involutions("ab", WK_FORMAT_TEXT, &s) == WK_OK);
  CHECK(take(s) == "a,b\nab\n");
}

TEST_CASE("renderers") {
  wk_theta* theta = parse("ab,c", "abc");
  wk_string* s = nullptr;
  REQUIRE(wk_render_theta_conj(theta, "aac", WK_FORMAT_TEXT, &s) == WK_OK);
  CHECK(take(s) == "aac\ncaa\ncba\ncbb\n");

  REQUIRE(wk_render_theta_conj(theta, "aac", WK_FORMAT_JSON, &s) == WK_OK);
  auto j = nlohmann::ordered_json::parse(take(s));
  CHECK(j["elements"] == nlohmann::ordered_json::array({"aac", "caa", "cba", "cbb"}));
  CHECK(j["entries"].size() == 4);

  REQUIRE(wk_render_decompose(theta, "abb", WK_FORMAT_JSON, &s) == WK_OK);
  j = nlohmann::ordered_json::parse(take(s));
  CHECK(j["witness"]["beta"] == "ab");

  REQUIRE(wk_render_conj("abc", "cabab", WK_FORMAT_TEXT, &s) == WK_OK);
  CHECK(take(s) == "ababc\nabcab\nbabca\nbcaba\ncabab\n");
  wk_theta_free(theta);

  REQUIRE(wk_alphabet_spanning("cab,a", &s) == WK_OK);
  CHECK(take(s) == "abc");
}

TEST_CASE("sweep through the C interface") {
  const char* specs[] = {"ab,c"};
  wk_sweep_options options{"abc", specs, 1, 3, 3, "T1", 2};
  wk_report* report = nullptr;
  REQUIRE(wk_sweep_run(&options, &report) == WK_OK);
  CHECK(wk_report_counterexample_count(report) == 0);
  wk_string* s = nullptr;
  REQUIRE(wk_report_render(report, WK_FORMAT_JSON, &s) == WK_OK);
  auto j = nlohmann::ordered_json::parse(take(s));
  CHECK(j["checks"][0]["id"] == "T1");
  CHECK(j["checks"][0]["tested"] == 40);
  wk_report_free(report);

  options.checks = "T0";
  CHECK(wk_sweep_run(&options, &report) == WK_ERR_INVALID_CONFIG);
  options.checks = nullptr;
  options.max_len = 0;
  CHECK(wk_sweep_run(&options, &report) == WK_ERR_INVALID_CONFIG);
  options.max_len = 3;
  const char* bad[] = {"ab"};
  options.theta_specs = bad;
  CHECK(wk_sweep_run(&options, &report) == WK_ERR_INCOMPLETE_SPEC);
}
