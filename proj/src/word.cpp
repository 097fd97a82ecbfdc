#include "raag/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "raag/errors.hpp"

namespace raag {

std::size_t NormalWord::length() const {
  std::size_t n = 0;
  for (const auto& s : syllables) n += static_cast<std::size_t>(std::abs(s.exponent));
  return n;
}

Word NormalWord::letters() const {
  Word out;
  out.reserve(length());
  for (const auto& s : syllables) {
    const int sign = s.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(s.exponent); ++k) out.push_back(Letter{s.gen, sign});
  }
  return out;
}

std::strong_ordering operator<=>(const NormalWord& a, const NormalWord& b) {
  // Compare letter expansions without materializing them.
  std::size_t i = 0, j = 0;
  int used_a = 0, used_b = 0;
  while (i < a.syllables.size() && j < b.syllables.size()) {
    const auto& sa = a.syllables[i];
    const auto& sb = b.syllables[j];
    const Letter la{sa.gen, sa.exponent > 0 ? 1 : -1};
    const Letter lb{sb.gen, sb.exponent > 0 ? 1 : -1};
    if (auto c = la <=> lb; c != 0) return c;
    const int left_a = std::abs(sa.exponent) - used_a;
    const int left_b = std::abs(sb.exponent) - used_b;
    const int step = std::min(left_a, left_b);
    used_a += step;
    used_b += step;
    if (used_a == std::abs(sa.exponent)) {
      ++i;
      used_a = 0;
    }
    if (used_b == std::abs(sb.exponent)) {
      ++j;
      used_b = 0;
    }
  }
  const bool a_done = i == a.syllables.size();
  const bool b_done = j == b.syllables.size();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

Word parse_word(std::string_view text, const DefiningGraph& graph) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const std::string label = token.substr(0, caret);
    const Gen g = graph.gen(label);
    long exponent = 1;
    if (caret != std::string::npos) {
      const std::string digits = token.substr(caret + 1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc{} || ptr != last || first == last)
        throw InputError("bad exponent in token '" + token + "'");
      if (exponent == 0) throw InputError("zero exponent in token '" + token + "'");
      if (std::labs(exponent) > 1000000)
        throw InputError("exponent too large in token '" + token + "'");
    }
    const int sign = exponent > 0 ? 1 : -1;
    for (long k = 0; k < std::labs(exponent); ++k) out.push_back(Letter{g, sign});
  }
  return out;
}

std::string format_word(const NormalWord& word, const DefiningGraph& graph) {
  std::string out;
  for (const auto& s : word.syllables) {
    if (!out.empty()) out += ' ';
    out += graph.label(s.gen);
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

std::string format_word(const Word& word, const DefiningGraph& graph) {
  NormalWord runs;
  for (const Letter& l : word) {
    auto& v = runs.syllables;
    if (!v.empty() && v.back().gen == l.gen && (v.back().exponent > 0) == (l.sign > 0))
      v.back().exponent += l.sign;
    else
      v.push_back(Syllable{l.gen, l.sign});
  }
  return format_word(runs, graph);
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

NormalWord invert(const NormalWord& w) {
  NormalWord out;
  out.syllables.reserve(w.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back(Syllable{it->gen, -it->exponent});
  return out;
}

NormalWord to_syllables(const Word& w) {
  NormalWord out;
  for (const Letter& l : w) {
    if (!out.syllables.empty() && out.syllables.back().gen == l.gen) {
      out.syllables.back().exponent += l.sign;
      if (out.syllables.back().exponent == 0) out.syllables.pop_back();
    } else {
      out.syllables.push_back(Syllable{l.gen, l.sign});
    }
  }
  return out;
}

}  // namespace raag
