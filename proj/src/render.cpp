#include "wkconj/render.hpp"

#include <sstream>

#include "wkconj/conjugacy.hpp"
#include "wkconj/structure.hpp"
#include "wkconj/word_ops.hpp"

namespace wk {
namespace {

constexpr std::size_t kTextArgmaxLimit = 20;

std::string show(std::string_view w) {
  return w.empty() ? std::string("λ") : std::string(w);
}

std::string lines(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) out += show(w) + "\n";
  return out;
}

Json census_json(const std::vector<Word>& found, std::size_t total) {
  return Json{{"total", total}, {"count", found.size()}, {"elements", found}};
}

Json witness_json(const std::optional<DeficiencyWitness>& w) {
  if (!w) return nullptr;
  return Json{{"alpha", w->alpha}, {"beta", w->beta}, {"i", w->i}, {"v", w->v}};
}

Json witness_json(const std::optional<TwoThetaPalConjugacyWitness>& w,
                  const Involution& theta) {
  if (!w) return nullptr;
  return Json{{"x", w->x}, {"l", w->l}, {"conjugate", w->compose(theta)}};
}

Json witness_json(const std::optional<PalindromeInThetaConjWitness>& w,
                  const Involution& theta) {
  if (!w) return nullptr;
  if (w->form == PalindromeForm::Prefix)
    return Json{{"form", "PREFIX_FORM"}, {"u", w->u}, {"x", w->x},
                {"palindrome", w->palindrome(theta)}};
  return Json{{"form", "SUFFIX_FORM"}, {"y", w->u}, {"v", w->x},
              {"palindrome", w->palindrome(theta)}};
}

Json witness_json(const std::optional<ThetaPalInThetaConjWitness>& w,
                  const Involution& theta) {
  if (!w) return nullptr;
  return Json{{"form", w->form == ThetaPalForm::UXU ? "UXU" : "XUU"},
              {"u", w->u},
              {"x", w->x},
              {"theta_palindrome", w->theta_palindrome(theta)}};
}

std::string show_list(const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t k = 0; k < words.size(); ++k)
    out += (k ? ", " : "") + show(words[k]);
  return out + "}";
}

std::string witness_text(const Json& j) {
  if (j.is_null()) return "none";
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (!out.empty()) out += " ";
    out += key + "=";
    out += value.is_string() ? show(value.get<std::string>()) : value.dump();
  }
  return out;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json conj_json(std::string_view w, const Alphabet& alphabet) {
  const auto set = conjugates(w, alphabet);
  return Json{{"source", set.source}, {"elements", set.elements}};
}

Json theta_conj_json(std::string_view w, const Involution& theta) {
  const auto set = theta_conjugates(w, theta);
  Json entries = Json::array();
  for (const auto& e : set.entries)
    entries.push_back(Json{{"split", e.split}, {"value", e.value}});
  return Json{{"source", set.source},
              {"theta", theta.spec()},
              {"elements", set.elements},
              {"entries", entries}};
}

Json decompose_json(std::string_view w, const Involution& theta) {
  const auto set = theta_conjugates(w, theta);
  return Json{{"source", set.source},
              {"theta", theta.spec()},
              {"size", set.elements.size()},
              {"theta_maximal", set.elements.size() == w.size() + 1},
              {"witness", witness_json(deficiency_witness(w, theta))}};
}

Json power_growth_json(std::string_view z, const Involution& theta,
                       std::size_t max_power) {
  return Json{{"source", z},
              {"theta", theta.spec()},
              {"max_power", max_power},
              {"sizes", power_growth(z, theta, max_power)}};
}

Json analyze_json(std::string_view w, const Involution& theta) {
  theta.require_word(w);
  const auto conj = conjugates(w, theta.alphabet());
  const auto tconj = theta_conjugates(w, theta);
  const auto conj_tally = census(conj.elements, theta);
  const auto tally = census(tconj.elements, theta);

  Json j;
  j["source"] = w;
  j["theta"] = theta.spec();
  j["alphabet"] = theta.alphabet().letters();
  j["length"] = w.size();
  if (w.empty()) {
    j["primitive"] = nullptr;
    j["root"] = nullptr;
    j["exponent"] = nullptr;
  } else {
    const auto root = primitive_root(w);
    j["primitive"] = root.exponent == 1;
    j["root"] = root.root;
    j["exponent"] = root.exponent;
  }
  j["palindrome"] = is_palindrome(w);
  j["theta_palindrome"] = is_theta_palindrome(w, theta);
  j["theta_image"] = theta.apply(w);
  j["conj_size"] = conj.elements.size();
  j["theta_conj_size"] = tconj.elements.size();
  j["theta_maximal"] = tconj.elements.size() == w.size() + 1;
  j["conj_theta_pal_census"] =
      census_json(conj_tally.theta_palindromes, conj_tally.total);
  j["pal_census"] = census_json(tally.palindromes, tally.total);
  j["theta_pal_census"] = census_json(tally.theta_palindromes, tally.total);
  j["witnesses"] = Json{
      {"deficiency", witness_json(deficiency_witness(w, theta))},
      {"two_theta_palindrome_conjugacy",
       witness_json(two_theta_palindrome_conjugacy_witness(w, theta), theta)},
      {"palindrome",
       witness_json(palindrome_in_theta_conjugates_witness(w, theta), theta)},
      {"theta_palindrome",
       witness_json(theta_palindrome_in_theta_conjugates_witness(w, theta), theta)}};
  return j;
}

Json involutions_json(const Alphabet& alphabet) {
  std::vector<std::string> specs;
  for (const auto& theta : enumerate_involutions(alphabet))
    specs.push_back(theta.spec());
  return Json{{"alphabet", alphabet.letters()},
              {"count", specs.size()},
              {"involutions", specs}};
}

Json report_json(const SweepReport& report) {
  std::vector<std::string> ids;
  Json checks = Json::array();
  for (const auto& outcome : report.checks) {
    ids.push_back(check_name(outcome.id));
    Json found = Json::array();
    for (const auto& c : outcome.counterexamples)
      found.push_back(Json{{"check", check_name(c.check)},
                           {"theta", c.theta},
                           {"word", c.word},
                           {"detail", c.detail},
                           {"observed", c.observed}});
    checks.push_back(Json{{"id", check_name(outcome.id)},
                          {"tested", outcome.tested},
                          {"skipped", outcome.skipped},
                          {"counterexamples", found}});
  }
  Json witnesses = Json::array();
  for (const auto& w : report.extremal.pal_argmax)
    witnesses.push_back(Json{{"kind", "palindrome"},
                             {"theta", w.theta},
                             {"word", w.word},
                             {"count", report.extremal.max_pal}});
  for (const auto& w : report.extremal.theta_pal_argmax)
    witnesses.push_back(Json{{"kind", "theta_palindrome"},
                             {"theta", w.theta},
                             {"word", w.word},
                             {"count", report.extremal.max_theta_pal}});
  return Json{{"config",
               Json{{"alphabet", report.alphabet},
                    {"thetas", report.thetas},
                    {"max_len", report.max_len},
                    {"max_power", report.max_power},
                    {"checks", ids}}},
              {"words", report.words},
              {"checks", checks},
              {"extremal",
               Json{{"max_pal", report.extremal.max_pal},
                    {"max_theta_pal", report.extremal.max_theta_pal},
                    {"witnesses", witnesses}}},
              {"wall_time_ms", report.wall_time_ms}};
}

std::string render_conj(std::string_view w, const Alphabet& alphabet, Format f) {
  if (f == Format::Json) return dump(conj_json(w, alphabet));
  return lines(conjugates(w, alphabet).elements);
}

std::string render_theta_conj(std::string_view w, const Involution& theta,
                              Format f) {
  if (f == Format::Json) return dump(theta_conj_json(w, theta));
  return lines(theta_conjugates(w, theta).elements);
}

std::string render_decompose(std::string_view w, const Involution& theta,
                             Format f) {
  const Json j = decompose_json(w, theta);
  if (f == Format::Json) return dump(j);
  std::ostringstream os;
  os << "source: " << show(w) << "\n"
     << "theta: " << theta.spec() << "\n"
     << "size: " << j["size"].get<std::size_t>() << " of "
     << w.size() + 1 << "\n"
     << "theta_maximal: " << (j["theta_maximal"].get<bool>() ? "yes" : "no") << "\n"
     << "witness: " << witness_text(j["witness"]) << "\n";
  return os.str();
}

std::string render_power_growth(std::string_view z, const Involution& theta,
                                std::size_t max_power, Format f) {
  const Json j = power_growth_json(z, theta, max_power);
  if (f == Format::Json) return dump(j);
  std::ostringstream os;
  std::size_t i = 1;
  for (const auto& size : j["sizes"]) os << i++ << " " << size.get<std::size_t>() << "\n";
  return os.str();
}

std::string render_analyze(std::string_view w, const Involution& theta, Format f) {
  const Json j = analyze_json(w, theta);
  if (f == Format::Json) return dump(j);
  auto flag = [&](const char* key) {
    const auto& v = j[key];
    return v.is_null() ? std::string("n/a") : std::string(v.get<bool>() ? "yes" : "no");
  };
  auto list = [&](const char* key) {
    return show_list(j[key]["elements"].get<std::vector<Word>>());
  };
  std::ostringstream os;
  os << "word: " << show(w) << "\n"
     << "theta: " << theta.spec() << "\n"
     << "length: " << w.size() << "\n"
     << "primitive: " << flag("primitive") << "\n";
  if (!w.empty())
    os << "primitive root: " << j["root"].get<std::string>() << "^"
       << j["exponent"].get<std::size_t>() << "\n";
  os << "palindrome: " << flag("palindrome") << "\n"
     << "theta-palindrome: " << flag("theta_palindrome") << "\n"
     << "theta image: " << show(j["theta_image"].get<std::string>()) << "\n"
     << "|C(w)|: " << j["conj_size"].get<std::size_t>() << "\n"
     << "|C_theta(w)|: " << j["theta_conj_size"].get<std::size_t>() << " of "
     << w.size() + 1 << (j["theta_maximal"].get<bool>() ? " (maximal)" : "") << "\n"
     << "theta-palindromes in C(w): " << list("conj_theta_pal_census") << "\n"
     << "palindromes in C_theta(w): " << list("pal_census") << "\n"
     << "theta-palindromes in C_theta(w): " << list("theta_pal_census") << "\n";
  const auto& ws = j["witnesses"];
  os << "deficiency witness: " << witness_text(ws["deficiency"]) << "\n"
     << "two-theta-palindrome witness: "
     << witness_text(ws["two_theta_palindrome_conjugacy"]) << "\n"
     << "palindrome witness: " << witness_text(ws["palindrome"]) << "\n"
     << "theta-palindrome witness: " << witness_text(ws["theta_palindrome"]) << "\n";
  return os.str();
}

std::string render_involutions(const Alphabet& alphabet, Format f) {
  const Json j = involutions_json(alphabet);
  if (f == Format::Json) return dump(j);
  std::string out;
  for (const auto& spec : j["involutions"]) out += spec.get<std::string>() + "\n";
  return out;
}

std::string render_report(const SweepReport& report, Format f) {
  if (f == Format::Json) return dump(report_json(report));
  std::ostringstream os;
  os << "alphabet: " << report.alphabet << "  involutions: " << report.thetas.size()
     << "  max_len: " << report.max_len << "  max_power: " << report.max_power
     << "  words: " << report.words << "\n";
  for (const auto& outcome : report.checks) {
    os << check_name(outcome.id) << "  tested=" << outcome.tested
       << "  skipped=" << outcome.skipped
       << "  counterexamples=" << outcome.counterexamples.size() << "\n";
    for (const auto& c : outcome.counterexamples)
      os << "  " << c.theta << "  " << show(c.word) << "  " << c.detail << "  ("
         << c.observed << ")\n";
  }
  auto argmax = [&](const char* label, std::size_t best,
                    const std::vector<ExtremalWitness>& where) {
    os << label << ": " << best << " (" << where.size() << " words)\n";
    for (std::size_t k = 0; k < where.size() && k < kTextArgmaxLimit; ++k)
      os << "  " << where[k].theta << "  " << show(where[k].word) << "\n";
    if (where.size() > kTextArgmaxLimit)
      os << "  ... " << where.size() - kTextArgmaxLimit << " more\n";
  };
  argmax("max palindromes in C_theta(w)", report.extremal.max_pal,
         report.extremal.pal_argmax);
  argmax("max theta-palindromes in C_theta(w)", report.extremal.max_theta_pal,
         report.extremal.theta_pal_argmax);
  os << "wall_time_ms: " << report.wall_time_ms << "\n";
  return os.str();
}

}  // namespace wk
