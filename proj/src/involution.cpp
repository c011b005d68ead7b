#include "wkconj/involution.hpp"

#include <algorithm>
#include <cctype>

namespace wk {
namespace {

std::string quoted(char c) { return std::string("'") + c + "'"; }

bool printable(char c) {
  return std::isgraph(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Alphabet Alphabet::from_letters(std::string_view letters) {
  if (letters.empty())
    throw Error(ErrorCode::InvalidAlphabet, "alphabet must not be empty");
  Alphabet out;
  for (char c : letters) {
    if (!printable(c))
      throw Error(ErrorCode::InvalidAlphabet,
                  "alphabet letters must be printable single characters");
    if (c == ',')
      throw Error(ErrorCode::InvalidAlphabet,
                  "',' is reserved as the involution group separator");
    if (out.contains(c))
      throw Error(ErrorCode::DuplicateLetter,
                  "letter " + quoted(c) + " appears twice in the alphabet");
    out.rank_[index(c)] = static_cast<int>(out.letters_.size());
    out.letters_.push_back(c);
  }
  return out;
}

Alphabet Alphabet::spanning(std::string_view text) {
  std::string letters(text);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return from_letters(letters);
}

bool Alphabet::contains_word(std::string_view w) const noexcept {
  return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

bool Alphabet::less(std::string_view a, std::string_view b) const noexcept {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [this](char x, char y) { return rank(x) < rank(y); });
}

bool Alphabet::shortlex_less(std::string_view a,
                             std::string_view b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return less(a, b);
}

Involution Involution::parse(std::string_view spec, const Alphabet& alphabet) {
  Involution out(alphabet);
  std::array<bool, 256> seen{};
  auto claim = [&](char c) {
    if (!alphabet.contains(c))
      throw Error(ErrorCode::UnknownLetter,
                  "letter " + quoted(c) + " is not in alphabet \"" +
                      alphabet.letters() + "\"");
    auto& flag = seen[static_cast<unsigned char>(c)];
    if (flag)
      throw Error(ErrorCode::DuplicateLetter,
                  "letter " + quoted(c) + " appears twice in \"" +
                      std::string(spec) + "\"");
    flag = true;
  };

  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view group = spec.substr(start, end - start);
    if (group.size() == 1) {
      claim(group[0]);
      out.map_[static_cast<unsigned char>(group[0])] = group[0];
    } else if (group.size() == 2) {
      claim(group[0]);
      claim(group[1]);
      out.map_[static_cast<unsigned char>(group[0])] = group[1];
      out.map_[static_cast<unsigned char>(group[1])] = group[0];
    } else {
      throw Error(ErrorCode::MalformedGroup,
                  "group \"" + std::string(group) +
                      "\" must contain one or two letters");
    }
    start = end + 1;
  }

  for (char c : alphabet.letters())
    if (!seen[static_cast<unsigned char>(c)])
      throw Error(ErrorCode::IncompleteSpec,
                  "letter " + quoted(c) + " is missing from \"" +
                      std::string(spec) + "\"");
  return out;
}

Involution Involution::identity(const Alphabet& alphabet) {
  return from_images(alphabet, alphabet.letters());
}

Involution Involution::from_images(const Alphabet& alphabet,
                                   std::string_view images) {
  if (images.size() != alphabet.size())
    throw Error(ErrorCode::IncompleteSpec,
                "image sequence length differs from alphabet size");
  Involution out(alphabet);
  const std::string& letters = alphabet.letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (!alphabet.contains(images[k]))
      throw Error(ErrorCode::UnknownLetter,
                  "image " + quoted(images[k]) + " is not in the alphabet");
    out.map_[static_cast<unsigned char>(letters[k])] = images[k];
  }
  for (char c : letters)
    if (out.image(out.image(c)) != c)
      throw Error(ErrorCode::DuplicateLetter,
                  "image sequence \"" + std::string(images) +
                      "\" is not self-inverse");
  return out;
}

std::string Involution::images() const {
  std::string out;
  for (char c : alphabet_.letters()) out.push_back(image(c));
  return out;
}

bool Involution::is_identity() const noexcept {
  const std::string& letters = alphabet_.letters();
  return std::all_of(letters.begin(), letters.end(),
                     [this](char c) { return image(c) == c; });
}

std::string Involution::spec() const {
  std::string out;
  for (char c : alphabet_.letters()) {
    char img = image(c);
    if (alphabet_.rank(img) < alphabet_.rank(c)) continue;
    if (!out.empty()) out.push_back(',');
    out.push_back(c);
    if (img != c) out.push_back(img);
  }
  return out;
}

void Involution::require_word(std::string_view w) const {
  for (char c : w)
    if (!alphabet_.contains(c))
      throw Error(ErrorCode::AlphabetMismatch,
                  "symbol " + quoted(c) + " of \"" + std::string(w) +
                      "\" is not in alphabet \"" + alphabet_.letters() + "\"");
}

Word Involution::apply(std::string_view w) const {
  Word out(w.size(), '\0');
  for (std::size_t k = 0; k < w.size(); ++k)
    out[w.size() - 1 - k] = image(w[k]);
  return out;
}

Word Involution::apply_morphic(std::string_view w) const {
  Word out(w.size(), '\0');
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = image(w[k]);
  return out;
}

std::vector<Involution> enumerate_involutions(const Alphabet& alphabet) {
  const std::string& letters = alphabet.letters();
  const std::size_t n = letters.size();
  std::vector<std::string> image_sequences;
  std::string images(n, '\0');

  // Assign the first unassigned position either to itself or to a later free
  // position; each involution is produced once.
  auto extend = [&](auto&& self, std::size_t pos) -> void {
    while (pos < n && images[pos] != '\0') ++pos;
    if (pos == n) {
      image_sequences.push_back(images);
      return;
    }
    images[pos] = letters[pos];
    self(self, pos + 1);
    images[pos] = '\0';
    for (std::size_t other = pos + 1; other < n; ++other) {
      if (images[other] != '\0') continue;
      images[pos] = letters[other];
      images[other] = letters[pos];
      self(self, pos + 1);
      images[pos] = images[other] = '\0';
    }
  };
  extend(extend, 0);

  std::sort(image_sequences.begin(), image_sequences.end(),
            [&](const std::string& a, const std::string& b) {
              return alphabet.less(a, b);
            });
  std::vector<Involution> out;
  out.reserve(image_sequences.size());
  for (const auto& seq : image_sequences)
    out.push_back(Involution::from_images(alphabet, seq));
  return out;
}

}  // namespace wk
