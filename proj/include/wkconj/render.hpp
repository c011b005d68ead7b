#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "json.hpp"

#include "wkconj/explorer.hpp"
#include "wkconj/involution.hpp"

namespace wk {

// Field order in every JSON object is fixed; sets are emitted in canonical
// order. The empty word is "" in JSON and "λ" in text.
using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

Json conj_json(std::string_view w, const Alphabet& alphabet);
Json theta_conj_json(std::string_view w, const Involution& theta);
Json decompose_json(std::string_view w, const Involution& theta);
Json power_growth_json(std::string_view z, const Involution& theta,
                       std::size_t max_power);
Json analyze_json(std::string_view w, const Involution& theta);
Json involutions_json(const Alphabet& alphabet);
Json report_json(const SweepReport& report);

std::string render_conj(std::string_view w, const Alphabet& alphabet, Format f);
std::string render_theta_conj(std::string_view w, const Involution& theta, Format f);
std::string render_decompose(std::string_view w, const Involution& theta, Format f);
std::string render_power_growth(std::string_view z, const Involution& theta,
                                std::size_t max_power, Format f);
std::string render_analyze(std::string_view w, const Involution& theta, Format f);
std::string render_involutions(const Alphabet& alphabet, Format f);
std::string render_report(const SweepReport& report, Format f);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace wk
