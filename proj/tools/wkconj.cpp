// wkconj: command-line front end over the wkconj C interface.
//
// Exit status: 0 on success, 1 on domain errors (one-line diagnostic on
// stderr), 2 on usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wkconj/wkconj.h"

namespace {

struct StringDeleter {
  void operator()(wk_string* s) const { wk_string_free(s); }
};
struct ThetaDeleter {
  void operator()(wk_theta* t) const { wk_theta_free(t); }
};
struct ReportDeleter {
  void operator()(wk_report* r) const { wk_report_free(r); }
};
using StringPtr = std::unique_ptr<wk_string, StringDeleter>;
using ThetaPtr = std::unique_ptr<wk_theta, ThetaDeleter>;
using ReportPtr = std::unique_ptr<wk_report, ReportDeleter>;

struct DomainError {
  wk_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(wk_status status) {
  if (status != WK_OK) throw DomainError{status, wk_last_error()};
}

std::string take(wk_string* raw) {
  StringPtr s(raw);
  return std::string(wk_string_data(s.get()), wk_string_size(s.get()));
}

struct Options {
  std::string word;
  std::vector<std::string> thetas;
  std::string alphabet;
  std::string json_path;
  std::size_t max_len = 6;
  std::size_t max_power = 3;
  std::string checks = "ALL";
  unsigned jobs = 1;
  bool json = false;
};

std::string resolve_alphabet(const Options& opt) {
  if (!opt.alphabet.empty()) return opt.alphabet;
  std::string text = opt.word;
  for (const auto& t : opt.thetas) text += t;
  if (text.empty()) throw UsageError{"--alphabet is required here"};
  wk_string* out = nullptr;
  check(wk_alphabet_spanning(text.c_str(), &out));
  return take(out);
}

ThetaPtr require_theta(const Options& opt) {
  if (opt.thetas.size() != 1)
    throw UsageError{"exactly one --theta <spec> is required"};
  if (opt.thetas.front() == "ALL")
    throw UsageError{"--theta ALL is only accepted by sweep"};
  const std::string alphabet = resolve_alphabet(opt);
  wk_theta* raw = nullptr;
  check(wk_theta_parse(opt.thetas.front().c_str(), alphabet.c_str(), &raw));
  return ThetaPtr(raw);
}

wk_format format(const Options& opt) {
  return opt.json ? WK_FORMAT_JSON : WK_FORMAT_TEXT;
}

void deliver(const Options& opt, const std::string& text) {
  if (opt.json && !opt.json_path.empty()) {
    std::ofstream file(opt.json_path, std::ios::binary);
    if (!file) throw DomainError{WK_ERR_INVALID_CONFIG,
                                 "cannot write " + opt.json_path};
    file << text;
    return;
  }
  std::cout << text;
}

void run(const std::string& command, const Options& opt) {
  wk_string* out = nullptr;
  if (command == "analyze") {
    auto theta = require_theta(opt);
    check(wk_render_analyze(theta.get(), opt.word.c_str(), format(opt), &out));
  } else if (command == "conj") {
    std::string alphabet = opt.alphabet;
    if (alphabet.empty()) alphabet = opt.word.empty() && opt.thetas.empty()
                                         ? std::string("a")
                                         : resolve_alphabet(opt);
    check(wk_render_conj(alphabet.c_str(), opt.word.c_str(), format(opt), &out));
  } else if (command == "theta-conj") {
    auto theta = require_theta(opt);
    check(wk_render_theta_conj(theta.get(), opt.word.c_str(), format(opt), &out));
  } else if (command == "decompose") {
    auto theta = require_theta(opt);
    check(wk_render_decompose(theta.get(), opt.word.c_str(), format(opt), &out));
  } else if (command == "power-growth") {
    auto theta = require_theta(opt);
    check(wk_render_power_growth(theta.get(), opt.word.c_str(), opt.max_power,
                                 format(opt), &out));
  } else if (command == "involutions") {
    const std::string alphabet = resolve_alphabet(opt);
    check(wk_render_involutions(alphabet.c_str(), format(opt), &out));
  } else if (command == "sweep") {
    const std::string alphabet = resolve_alphabet(opt);
    std::vector<const char*> specs;
    const bool all = opt.thetas.empty() ||
                     (opt.thetas.size() == 1 && opt.thetas.front() == "ALL");
    if (!all)
      for (const auto& t : opt.thetas) {
        if (t == "ALL") throw UsageError{"--theta ALL cannot be combined"};
        specs.push_back(t.c_str());
      }
    wk_sweep_options sweep{alphabet.c_str(), specs.data(), specs.size(),
                           opt.max_len, opt.max_power, opt.checks.c_str(),
                           opt.jobs};
    wk_report* raw = nullptr;
    check(wk_sweep_run(&sweep, &raw));
    ReportPtr report(raw);
    if (opt.json && !opt.json_path.empty()) {
      // JSON to the file, the text summary to stdout.
      check(wk_report_render(report.get(), WK_FORMAT_JSON, &out));
      deliver(opt, take(out));
      check(wk_report_render(report.get(), WK_FORMAT_TEXT, &out));
      std::cout << take(out);
      return;
    }
    check(wk_report_render(report.get(), format(opt), &out));
  }
  deliver(opt, take(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Watson-Crick conjugates and palindromes of words", "wkconj"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--theta", opt.thetas,
                    "Involution spec, e.g. ab,c (a<->b, c fixed)")
        ->type_size(1)
        ->allow_extra_args(false);
    sub->add_option("--alphabet", opt.alphabet,
                    "Alphabet letters in order (default: letters of word and theta)");
    sub->add_option("--json", opt.json_path, "Emit JSON, optionally to a file")
        ->expected(0, 1);
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", opt.word, "Input word (\"\" for the empty word)")
        ->required();
  };

  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto define = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    subs.emplace_back(name, sub);
    return sub;
  };

  add_word(define("analyze", "Full structural record of a word"));
  add_word(define("conj", "Conjugacy class C(w)"));
  add_word(define("theta-conj", "Theta-conjugate set C_theta(w)"));
  add_word(define("decompose", "Deficiency decomposition (alpha beta)^(i+1) alpha v"));
  auto* growth = define("power-growth", "|C_theta(w^i)| for i = 1..max-power");
  add_word(growth);
  growth->add_option("--max-power", opt.max_power, "Largest exponent")
      ->check(CLI::PositiveNumber);
  define("involutions", "All involutions on an alphabet");
  auto* sweep = define("sweep", "Exhaustive verification of checks T1..T9");
  sweep->add_option("--max-len", opt.max_len, "Longest word length")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--max-power", opt.max_power, "Largest exponent for T4/T8")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--check", opt.checks, "Checks, e.g. T1,T2 or T1..T9");
  sweep->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) {
      command = name;
      opt.json = sub->get_option("--json")->count() > 0;
    }

  try {
    run(command, opt);
  } catch (const UsageError& e) {
    std::cerr << "wkconj " << command << ": " << e.message << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "wkconj: " << wk_status_name(e.status) << ": " << e.message << "\n";
    return 1;
  }
  return 0;
}
