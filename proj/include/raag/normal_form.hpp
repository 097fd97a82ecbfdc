#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// Appends x^e to a normal word in place. The new syllable is shuffled left
/// past commuting syllables and merged when it meets its own generator.
void append_syllable(NormalWord& w, Syllable s, const DefiningGraph& graph);

/// Reduces a word to some normal representative of the same element,
/// keeping the input's syllable order wherever possible. Not canonical.
NormalWord reduce(const Word& w, const DefiningGraph& graph);

/// The canonical representative: the lexicographically least member of
/// Min(σ), letters ordered by generator index.
NormalWord normalize(const Word& w, const DefiningGraph& graph);
NormalWord canonical(const NormalWord& w, const DefiningGraph& graph);

/// No zero exponents and no two syllables of one generator that could be
/// brought together by commutations.
bool is_normal(const NormalWord& w, const DefiningGraph& graph);

/// Syllables i < j are dependent when their generators are equal or do not
/// commute; the syllable order is the transitive closure of dependence.
class SyllableOrder {
 public:
  SyllableOrder() = default;
  explicit SyllableOrder(std::size_t n);

  std::size_t size() const { return n_; }
  /// i ≺ j.
  bool precedes(std::size_t i, std::size_t j) const {
    return (pred_[j * words_ + i / 64] >> (i % 64)) & 1u;
  }
  bool comparable(std::size_t i, std::size_t j) const {
    return i == j || precedes(i, j) || precedes(j, i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

 private:
  friend SyllableOrder syllable_order(const NormalWord&, const DefiningGraph&);
  void set(std::size_t i, std::size_t j) { pred_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> pred_;  // row j holds the predecessors of j
};

/// Throws ContractError if w is not normal.
SyllableOrder syllable_order(const NormalWord& w, const DefiningGraph& graph);

/// All of Min(σ) for the element σ represented by w, sorted. Throws
/// ResourceError once more than `budget` words have been produced.
std::vector<NormalWord> min_class(const Word& w, const DefiningGraph& graph,
                                  std::size_t budget = 1'000'000);

struct CyclicReduction {
  NormalWord conjugator;
  NormalWord core;
};

/// w = conjugator · core · conjugator⁻¹ with core of least syllable count
/// among conjugates of w. Both parts are canonical.
CyclicReduction cyclically_reduce(const Word& w, const DefiningGraph& graph);

struct SubwordSplit {
  NormalWord left;   // commutes with the syllable p
  NormalWord right;  // commutes with the syllable q
};

/// For unordered syllables p, q of a normal word, splits the subword M
/// strictly between them as M ~ L·R. Indices are syllable positions in w.
/// Throws ContractError if p and q coincide or are ordered.
SubwordSplit subword_decompose(const NormalWord& w, std::size_t p, std::size_t q,
                               const DefiningGraph& graph);

/// Rewrites w to a normal word using only moves (1)-(3), choosing among the
/// applicable moves at random. Used to cross-check normalize().
NormalWord normalize_with_moves(const Word& w, const DefiningGraph& graph, std::mt19937_64& rng);

/// A random member of Min(σ): at each step one of the currently leftmost
/// movable syllables is chosen at random.
NormalWord random_representative(const NormalWord& w, const DefiningGraph& graph,
                                 std::mt19937_64& rng);

}  // namespace raag
