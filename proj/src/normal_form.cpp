#include "raag/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "raag/errors.hpp"

namespace raag {
namespace {

bool dependent(const Syllable& a, const Syllable& b, const DefiningGraph& graph) {
  return a.gen == b.gen || !graph.commute(a.gen, b.gen);
}

// In-degree of each syllable in the dependence DAG (edges i -> j, i < j).
std::vector<std::size_t> dependence_indegree(const NormalWord& w, const DefiningGraph& graph) {
  const auto& s = w.syllables;
  std::vector<std::size_t> indeg(s.size(), 0);
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (dependent(s[i], s[j], graph)) ++indeg[j];
  return indeg;
}

}  // namespace

void append_syllable(NormalWord& w, Syllable s, const DefiningGraph& graph) {
  if (s.exponent == 0) return;
  auto& v = w.syllables;
  for (std::size_t k = v.size(); k-- > 0;) {
    if (v[k].gen == s.gen) {
      v[k].exponent += s.exponent;
      if (v[k].exponent == 0) v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (!graph.commute(v[k].gen, s.gen)) break;
  }
  v.push_back(s);
}

NormalWord reduce(const Word& w, const DefiningGraph& graph) {
  NormalWord out;
  for (const Letter& l : w) append_syllable(out, Syllable{l.gen, l.sign}, graph);
  return out;
}

NormalWord canonical(const NormalWord& w, const DefiningGraph& graph) {
  const auto& s = w.syllables;
  auto indeg = dependence_indegree(w, graph);
  std::vector<bool> used(s.size(), false);
  NormalWord out;
  out.syllables.reserve(s.size());
  for (std::size_t step = 0; step < s.size(); ++step) {
    std::size_t best = s.size();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (used[i] || indeg[i] != 0) continue;
      if (best == s.size() || s[i].gen < s[best].gen) best = i;
    }
    used[best] = true;
    out.syllables.push_back(s[best]);
    for (std::size_t j = best + 1; j < s.size(); ++j)
      if (!used[j] && dependent(s[best], s[j], graph)) --indeg[j];
  }
  return out;
}

NormalWord normalize(const Word& w, const DefiningGraph& graph) {
  return canonical(reduce(w, graph), graph);
}

bool is_normal(const NormalWord& w, const DefiningGraph& graph) {
  const auto& s = w.syllables;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].exponent == 0) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j].gen == s[i].gen) return false;
      if (!graph.commute(s[j].gen, s[i].gen)) break;
    }
  }
  return true;
}

SyllableOrder::SyllableOrder(std::size_t n) : n_(n), words_((n + 63) / 64), pred_(n * words_, 0) {}

std::vector<std::pair<std::size_t, std::size_t>> SyllableOrder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (precedes(i, j)) out.emplace_back(i, j);
  return out;
}

SyllableOrder syllable_order(const NormalWord& w, const DefiningGraph& graph) {
  if (!is_normal(w, graph)) throw ContractError("syllable_order: word is not normal");
  const auto& s = w.syllables;
  SyllableOrder order(s.size());
  const std::size_t words = order.words_;
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::uint64_t* row = &order.pred_[j * words];
    for (std::size_t i = 0; i < j; ++i) {
      if (!dependent(s[i], s[j], graph)) continue;
      const std::uint64_t* from = &order.pred_[i * words];
      for (std::size_t k = 0; k < words; ++k) row[k] |= from[k];
      order.set(i, j);
    }
  }
  return order;
}

std::vector<NormalWord> min_class(const Word& w, const DefiningGraph& graph, std::size_t budget) {
  const NormalWord base = reduce(w, graph);
  const auto& s = base.syllables;
  auto indeg = dependence_indegree(base, graph);
  std::vector<bool> used(s.size(), false);
  std::vector<NormalWord> out;
  NormalWord current;

  std::function<void()> extend = [&]() {
    if (current.size() == s.size()) {
      if (out.size() >= budget)
        throw ResourceError("min_class: class exceeds budget of " + std::to_string(budget),
                            out.size());
      out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (used[i] || indeg[i] != 0) continue;
      used[i] = true;
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (dependent(s[i], s[j], graph)) --indeg[j];
      current.syllables.push_back(s[i]);
      extend();
      current.syllables.pop_back();
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (dependent(s[i], s[j], graph)) ++indeg[j];
      used[i] = false;
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

CyclicReduction cyclically_reduce(const Word& w, const DefiningGraph& graph) {
  NormalWord core = reduce(w, graph);
  NormalWord conjugator;
  for (;;) {
    const auto& s = core.syllables;
    const std::size_t n = s.size();
    if (n < 2) break;
    std::vector<bool> has_pred(n, false), has_succ(n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (dependent(s[i], s[j], graph)) {
          has_succ[i] = true;
          has_pred[j] = true;
        }
    // Look for a leftmost-movable p and rightmost-movable q on one generator.
    std::size_t p = n, q = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (has_pred[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || has_succ[j] || s[j].gen != s[i].gen) continue;
        if (p == n || s[i].gen < s[p].gen) {
          p = i;
          q = j;
        }
      }
    }
    if (p == n) break;
    // core ~ x^a · u · x^b, so x^-a · core · x^a = u · x^(a+b).
    const Syllable first = s[p];
    const Syllable last = s[q];
    NormalWord rest;
    for (std::size_t k = 0; k < n; ++k)
      if (k != p && k != q) rest.syllables.push_back(s[k]);
    append_syllable(rest, Syllable{first.gen, first.exponent + last.exponent}, graph);
    core = std::move(rest);
    append_syllable(conjugator, first, graph);
  }
  return {canonical(conjugator, graph), canonical(core, graph)};
}

namespace {

using Sequence = std::vector<std::size_t>;

// Constructive induction: the first syllable s of M ordered with p splits
// M = L1 s M1; recurse on (s, q, M1) = (L2, R2) and (p, q, L2) = (L3, R3);
// then L = L1 L3 and R = R3 s R2.
std::pair<Sequence, Sequence> split_between(std::size_t p, std::size_t q, const Sequence& middle,
                                            const SyllableOrder& order) {
  if (middle.empty()) return {};
  std::size_t k = 0;
  while (k < middle.size() && !order.comparable(p, middle[k])) ++k;
  if (k == middle.size()) return {middle, {}};
  const std::size_t s = middle[k];
  const Sequence l1(middle.begin(), middle.begin() + static_cast<std::ptrdiff_t>(k));
  const Sequence m1(middle.begin() + static_cast<std::ptrdiff_t>(k) + 1, middle.end());
  auto [l2, r2] = split_between(s, q, m1, order);
  auto [l3, r3] = split_between(p, q, l2, order);
  Sequence left = l1;
  left.insert(left.end(), l3.begin(), l3.end());
  Sequence right = r3;
  right.push_back(s);
  right.insert(right.end(), r2.begin(), r2.end());
  return {left, right};
}

}  // namespace

SubwordSplit subword_decompose(const NormalWord& w, std::size_t p, std::size_t q,
                               const DefiningGraph& graph) {
  const auto order = syllable_order(w, graph);
  if (p >= w.size() || q >= w.size()) throw ContractError("subword_decompose: index out of range");
  if (p == q) throw ContractError("subword_decompose: p and q coincide");
  if (p > q) std::swap(p, q);
  if (order.precedes(p, q)) throw ContractError("subword_decompose: p and q are ordered");
  Sequence middle;
  for (std::size_t k = p + 1; k < q; ++k) middle.push_back(k);
  auto [left, right] = split_between(p, q, middle, order);
  SubwordSplit out;
  for (std::size_t k : left) out.left.syllables.push_back(w.syllables[k]);
  for (std::size_t k : right) out.right.syllables.push_back(w.syllables[k]);
  return out;
}

NormalWord normalize_with_moves(const Word& w, const DefiningGraph& graph, std::mt19937_64& rng) {
  std::vector<Syllable> s;
  for (const Letter& l : w) s.push_back(Syllable{l.gen, l.sign});
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto swappable = [&](std::size_t i) {
    return s[i].gen != s[i + 1].gen && graph.commute(s[i].gen, s[i + 1].gen);
  };
  std::size_t shuffles_left = 4 * (w.size() + 1) * (w.size() + 1);

  for (;;) {
    // Occasional unforced commutation, to vary the route.
    if (shuffles_left > 0 && s.size() > 1 && pick(3) == 0) {
      --shuffles_left;
      std::vector<std::size_t> swaps;
      for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (swappable(i)) swaps.push_back(i);
      if (!swaps.empty()) {
        const std::size_t i = swaps[pick(swaps.size())];
        std::swap(s[i], s[i + 1]);
        continue;
      }
    }
    // Moves (1) and (2): drop a zero syllable or merge neighbours.
    std::vector<std::pair<int, std::size_t>> direct;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].exponent == 0) direct.emplace_back(1, i);
      if (i + 1 < s.size() && s[i].gen == s[i + 1].gen) direct.emplace_back(2, i);
    }
    if (!direct.empty()) {
      auto [move, i] = direct[pick(direct.size())];
      if (move == 1) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        s[i].exponent += s[i + 1].exponent;
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      }
      continue;
    }
    // Pairs that move (3) can make adjacent.
    std::vector<std::pair<std::size_t, std::size_t>> mergeable;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (s[j].gen == s[i].gen) {
          mergeable.emplace_back(i, j);
          break;
        }
        if (!graph.commute(s[j].gen, s[i].gen)) break;
      }
    if (mergeable.empty()) break;
    auto [i, j] = mergeable[pick(mergeable.size())];
    while (j > i + 1) {
      if (pick(2) == 0) {
        std::swap(s[i], s[i + 1]);
        ++i;
      } else {
        std::swap(s[j - 1], s[j]);
        --j;
      }
    }
  }
  return NormalWord{std::move(s)};
}

NormalWord random_representative(const NormalWord& w, const DefiningGraph& graph,
                                 std::mt19937_64& rng) {
  const auto& s = w.syllables;
  auto indeg = dependence_indegree(w, graph);
  std::vector<bool> used(s.size(), false);
  NormalWord out;
  for (std::size_t step = 0; step < s.size(); ++step) {
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!used[i] && indeg[i] == 0) ready.push_back(i);
    const std::size_t pick =
        ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
    used[pick] = true;
    out.syllables.push_back(s[pick]);
    for (std::size_t j = pick + 1; j < s.size(); ++j)
      if (!used[j] && dependent(s[pick], s[j], graph)) --indeg[j];
  }
  return out;
}

}  // namespace raag
