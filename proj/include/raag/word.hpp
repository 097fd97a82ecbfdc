#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// A standard generator or its inverse.
struct Letter {
  Gen gen;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return Letter{gen, -sign}; }
  friend bool operator==(Letter, Letter) = default;
  /// Generator order first; a generator precedes its inverse.
  friend std::strong_ordering operator<=>(Letter a, Letter b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

/// Letters in order; words are never implicitly reduced.
using Word = std::vector<Letter>;

/// A maximal power x^e of one generator. Its ordinal identity is its index
/// in the owning NormalWord.
struct Syllable {
  Gen gen;
  int exponent = 1;
  friend bool operator==(Syllable, Syllable) = default;
};

/// A word stored syllable by syllable. Normality is a property checked by
/// is_normal(); most producers in this library only return normal words.
struct NormalWord {
  std::vector<Syllable> syllables;

  std::size_t size() const { return syllables.size(); }
  bool empty() const { return syllables.empty(); }
  /// Letter length (sum of |exponent|).
  std::size_t length() const;
  Word letters() const;

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  /// Lexicographic on the letter expansion (shortlex is not implied).
  friend std::strong_ordering operator<=>(const NormalWord& a, const NormalWord& b);
};

/// Parses whitespace-separated tokens `label` or `label^k` with k a nonzero
/// signed integer. Throws InputError on unknown labels or bad exponents.
Word parse_word(std::string_view text, const DefiningGraph& graph);

/// Inverse of parse_word; consecutive equal letters are grouped as powers.
std::string format_word(const Word& word, const DefiningGraph& graph);
std::string format_word(const NormalWord& word, const DefiningGraph& graph);

Word concat(const Word& a, const Word& b);
/// Reverses the word and inverts each letter.
Word invert(const Word& w);
NormalWord invert(const NormalWord& w);

/// Merges runs of the same generator, cancelling where exponents reach zero.
NormalWord to_syllables(const Word& w);

}  // namespace raag
