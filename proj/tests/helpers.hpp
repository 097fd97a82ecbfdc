#pragma once

#include <random>
#include <string>

#include "raag/graph.hpp"
#include "raag/normal_form.hpp"
#include "raag/word.hpp"

namespace fixtures {

// Vertices a, b, c with the single edge b-c.
inline raag::DefiningGraph bc_edge() { return raag::DefiningGraph({"a", "b", "c"}, {{"b", "c"}}); }

// The path a-b-c-d.
inline raag::DefiningGraph path4() {
  return raag::DefiningGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}

inline raag::DefiningGraph square4() {
  return raag::DefiningGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

inline raag::DefiningGraph triangle() {
  return raag::DefiningGraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline raag::Word word(const std::string& text, const raag::DefiningGraph& g) { return raag::parse_word(text, g); }

inline raag::NormalWord syllables(const std::string& text, const raag::DefiningGraph& g) {
  return raag::to_syllables(raag::parse_word(text, g));
}

// A graph on k vertices v0..v{k-1} with each edge present with probability 1/2.
inline raag::DefiningGraph random_graph(std::size_t k, std::mt19937_64& rng) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (coin(rng)) edges.emplace_back(labels[i], labels[j]);
  return raag::DefiningGraph(labels, edges);
}

inline raag::Word random_word(const raag::DefiningGraph& g, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> gen(0, g.size() - 1);
  std::bernoulli_distribution coin(0.5);
  raag::Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(raag::Letter{raag::Gen{static_cast<std::uint16_t>(gen(rng))}, coin(rng) ? 1 : -1});
  return w;
}

}  // namespace fixtures
