#include "wkconj/wkconj.h"

#include <exception>
#include <new>
#include <string>

#include "wkconj/conjugacy.hpp"
#include "wkconj/explorer.hpp"
#include "wkconj/render.hpp"
#include "wkconj/word_ops.hpp"

struct wk_string {
  std::string value;
};

struct wk_theta {
  wk::Involution value;
};

struct wk_report {
  wk::SweepReport value;
};

namespace {

thread_local std::string g_last_error;

wk_status to_status(wk::ErrorCode code) {
  switch (code) {
    case wk::ErrorCode::UnknownLetter: return WK_ERR_UNKNOWN_LETTER;
    case wk::ErrorCode::DuplicateLetter: return WK_ERR_DUPLICATE_LETTER;
    case wk::ErrorCode::IncompleteSpec: return WK_ERR_INCOMPLETE_SPEC;
    case wk::ErrorCode::MalformedGroup: return WK_ERR_MALFORMED_GROUP;
    case wk::ErrorCode::InvalidAlphabet: return WK_ERR_INVALID_ALPHABET;
    case wk::ErrorCode::AlphabetMismatch: return WK_ERR_ALPHABET_MISMATCH;
    case wk::ErrorCode::EmptyWord: return WK_ERR_EMPTY_WORD;
    case wk::ErrorCode::InvalidConfig: return WK_ERR_INVALID_CONFIG;
  }
  return WK_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
wk_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return WK_OK;
  } catch (const wk::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return WK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WK_ERR_INTERNAL;
  }
}

wk_status missing(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return WK_ERR_INVALID_ARGUMENT;
}

wk::Format format_of(wk_format f) {
  return f == WK_FORMAT_JSON ? wk::Format::Json : wk::Format::Text;
}

wk_status emit(wk_string** out, std::string value) {
  *out = new wk_string{std::move(value)};
  return WK_OK;
}

}  // namespace

extern "C" {

const char* wk_status_name(wk_status status) {
  switch (status) {
    case WK_OK: return "Ok";
    case WK_ERR_UNKNOWN_LETTER: return "UnknownLetter";
    case WK_ERR_DUPLICATE_LETTER: return "DuplicateLetter";
    case WK_ERR_INCOMPLETE_SPEC: return "IncompleteSpec";
    case WK_ERR_MALFORMED_GROUP: return "MalformedGroup";
    case WK_ERR_INVALID_ALPHABET: return "InvalidAlphabet";
    case WK_ERR_ALPHABET_MISMATCH: return "AlphabetMismatch";
    case WK_ERR_EMPTY_WORD: return "EmptyWord";
    case WK_ERR_INVALID_CONFIG: return "InvalidConfig";
    case WK_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case WK_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* wk_last_error(void) { return g_last_error.c_str(); }

const char* wk_string_data(const wk_string* s) { return s ? s->value.c_str() : ""; }
size_t wk_string_size(const wk_string* s) { return s ? s->value.size() : 0; }
void wk_string_free(wk_string* s) { delete s; }

wk_status wk_alphabet_spanning(const char* text, wk_string** out) {
  if (!text) return missing("text");
  if (!out) return missing("out");
  return guarded([&] {
    std::string letters;
    for (const char* p = text; *p; ++p)
      if (*p != ',') letters.push_back(*p);
    emit(out, wk::Alphabet::spanning(letters).letters());
  });
}

wk_status wk_theta_parse(const char* spec, const char* alphabet, wk_theta** out) {
  if (!spec) return missing("spec");
  if (!out) return missing("out");
  return guarded([&] {
    std::string letters;
    if (alphabet) {
      letters = alphabet;
    } else {
      for (const char* p = spec; *p; ++p)
        if (*p != ',') letters.push_back(*p);
    }
    const auto parsed = alphabet ? wk::Alphabet::from_letters(letters)
                                 : wk::Alphabet::spanning(letters);
    *out = new wk_theta{wk::Involution::parse(spec, parsed)};
  });
}

void wk_theta_free(wk_theta* theta) { delete theta; }

wk_status wk_theta_spec(const wk_theta* theta, wk_string** out) {
  if (!theta) return missing("theta");
  if (!out) return missing("out");
  return guarded([&] { emit(out, theta->value.spec()); });
}

wk_status wk_theta_apply(const wk_theta* theta, const char* word, wk_string** out) {
  if (!theta) return missing("theta");
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded([&] { emit(out, wk::apply_theta(theta->value, word)); });
}

wk_status wk_theta_is_palindrome(const wk_theta* theta, const char* word, int* out) {
  if (!theta) return missing("theta");
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded([&] { *out = wk::is_theta_palindrome(word, theta->value) ? 1 : 0; });
}

wk_status wk_theta_conjugate_count(const wk_theta* theta, const char* word,
                                   size_t* out) {
  if (!theta) return missing("theta");
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded(
      [&] { *out = wk::theta_conjugates(word, theta->value).elements.size(); });
}

wk_status wk_theta_is_maximal(const wk_theta* theta, const char* word, int* out) {
  if (!theta) return missing("theta");
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded([&] { *out = wk::is_theta_maximal(word, theta->value) ? 1 : 0; });
}

wk_status wk_involution_count(const char* alphabet, size_t* out) {
  if (!alphabet) return missing("alphabet");
  if (!out) return missing("out");
  return guarded([&] {
    *out = wk::enumerate_involutions(wk::Alphabet::from_letters(alphabet)).size();
  });
}

wk_status wk_involution_at(const char* alphabet, size_t index, wk_theta** out) {
  if (!alphabet) return missing("alphabet");
  if (!out) return missing("out");
  return guarded([&] {
    auto all = wk::enumerate_involutions(wk::Alphabet::from_letters(alphabet));
    if (index >= all.size())
      throw wk::Error(wk::ErrorCode::InvalidConfig,
                      "involution index " + std::to_string(index) +
                          " out of range (" + std::to_string(all.size()) + ")");
    *out = new wk_theta{std::move(all[index])};
  });
}

wk_status wk_render_conj(const char* alphabet, const char* word, wk_format format,
                         wk_string** out) {
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded([&] {
    // λ has no letters; its conjugacy class still needs some alphabet.
    const std::string letters = alphabet ? std::string(alphabet) : std::string(word);
    const auto parsed = alphabet ? wk::Alphabet::from_letters(letters)
                        : letters.empty() ? wk::Alphabet::from_letters("a")
                                          : wk::Alphabet::spanning(letters);
    emit(out, wk::render_conj(word, parsed, format_of(format)));
  });
}

wk_status wk_render_theta_conj(const wk_theta* theta, const char* word,
                               wk_format format, wk_string** out) {
  if (!theta) return missing("theta");
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded(
      [&] { emit(out, wk::render_theta_conj(word, theta->value, format_of(format))); });
}

wk_status wk_render_decompose(const wk_theta* theta, const char* word,
                              wk_format format, wk_string** out) {
  if (!theta) return missing("theta");
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded(
      [&] { emit(out, wk::render_decompose(word, theta->value, format_of(format))); });
}

wk_status wk_render_power_growth(const wk_theta* theta, const char* word,
                                 size_t max_power, wk_format format,
                                 wk_string** out) {
  if (!theta) return missing("theta");
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded([&] {
    if (max_power < 1)
      throw wk::Error(wk::ErrorCode::InvalidConfig, "max_power must be ≥ 1");
    emit(out, wk::render_power_growth(word, theta->value, max_power,
                                      format_of(format)));
  });
}

wk_status wk_render_analyze(const wk_theta* theta, const char* word,
                            wk_format format, wk_string** out) {
  if (!theta) return missing("theta");
  if (!word) return missing("word");
  if (!out) return missing("out");
  return guarded(
      [&] { emit(out, wk::render_analyze(word, theta->value, format_of(format))); });
}

wk_status wk_render_involutions(const char* alphabet, wk_format format,
                                wk_string** out) {
  if (!alphabet) return missing("alphabet");
  if (!out) return missing("out");
  return guarded([&] {
    emit(out, wk::render_involutions(wk::Alphabet::from_letters(alphabet),
                                     format_of(format)));
  });
}

wk_status wk_sweep_run(const wk_sweep_options* options, wk_report** out) {
  if (!options) return missing("options");
  if (!options->alphabet) return missing("options->alphabet");
  if (options->theta_count > 0 && !options->theta_specs)
    return missing("options->theta_specs");
  if (!out) return missing("out");
  return guarded([&] {
    wk::SweepConfig config(wk::Alphabet::from_letters(options->alphabet));
    for (size_t k = 0; k < options->theta_count; ++k) {
      if (!options->theta_specs[k])
        throw wk::Error(wk::ErrorCode::InvalidConfig, "theta spec must not be NULL");
      config.involutions.push_back(
          wk::Involution::parse(options->theta_specs[k], config.alphabet));
    }
    config.max_len = options->max_len;
    config.max_power = options->max_power;
    if (options->checks) config.checks = wk::parse_check_list(options->checks);
    config.jobs = options->jobs;
    *out = new wk_report{wk::run_checks(config)};
  });
}

wk_status wk_report_render(const wk_report* report, wk_format format,
                           wk_string** out) {
  if (!report) return missing("report");
  if (!out) return missing("out");
  return guarded(
      [&] { emit(out, wk::render_report(report->value, format_of(format))); });
}

size_t wk_report_counterexample_count(const wk_report* report) {
  return report ? report->value.counterexample_count() : 0;
}

void wk_report_free(wk_report* report) { delete report; }

}  // extern "C"
