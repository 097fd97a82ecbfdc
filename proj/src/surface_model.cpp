#include "raag/surface_model.hpp"

#include <algorithm>
#include <cstdlib>

#include "raag/errors.hpp"
#include "raag/normal_form.hpp"

namespace raag {

SurfaceModel::SurfaceModel(DefiningGraph graph, std::vector<GenSet> minimal_filling_sets,
                           bool admissible)
    : graph_(std::move(graph)), minimal_(std::move(minimal_filling_sets)), admissible_(admissible) {
  for (GenSet s : minimal_) {
    if (!s.subset_of(graph_.all())) throw InputError("filling set uses an unknown generator");
    if (s.size() < 2) throw InputError("a filling set needs at least two generators");
  }
  for (std::size_t i = 0; i < minimal_.size(); ++i)
    for (std::size_t j = 0; j < minimal_.size(); ++j)
      if (i != j && minimal_[i].subset_of(minimal_[j]))
        throw InputError("minimal filling sets must not contain one another");
  std::sort(minimal_.begin(), minimal_.end());
}

bool SurfaceModel::is_filling(GenSet gens) const {
  return std::any_of(minimal_.begin(), minimal_.end(), [&](GenSet m) { return m.subset_of(gens); });
}

GenSet supports(const NormalWord& w) {
  GenSet s;
  for (const Syllable& x : w.syllables) s.insert(x.gen);
  return s;
}

bool fills(const NormalWord& w, const SurfaceModel& model) {
  return model.is_filling(supports(cyclically_reduce(w.letters(), model.graph()).core));
}

std::vector<SymbolicSubsurface> subs(const NormalWord& w, const DefiningGraph& graph) {
  std::vector<SymbolicSubsurface> out;
  NormalWord prefix;
  for (const Syllable& x : w.syllables) {
    out.push_back(SymbolicSubsurface{canonical(prefix, graph), x.gen});
    prefix.syllables.push_back(x);
  }
  return out;
}

bool same_subsurface(const SymbolicSubsurface& a, const SymbolicSubsurface& b,
                     const DefiningGraph& graph) {
  if (a.base != b.base) return false;
  const NormalWord between = normalize(concat(invert(b.prefix).letters(), a.prefix.letters()), graph);
  return supports(between).subset_of(graph.star(a.base));
}

bool same_family(const std::vector<SymbolicSubsurface>& a, const std::vector<SymbolicSubsurface>& b,
                 const DefiningGraph& graph) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j)
      if (!used[j] && same_subsurface(x, b[j], graph)) used[j] = matched = true;
    if (!matched) return false;
  }
  return true;
}

std::vector<FillingBlock> find_filling_blocks(const NormalWord& w, const SurfaceModel& model) {
  const auto& syl = w.syllables;
  const std::size_t n = syl.size();
  // end[i]: last syllable of the shortest filling range starting at i.
  std::vector<std::size_t> end(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    GenSet s;
    for (std::size_t j = i; j < n; ++j) {
      s.insert(syl[j].gen);
      if (model.is_filling(s)) {
        end[i] = j;
        break;
      }
    }
  }
  // [i, end[i]] is minimal unless [i+1, end[i]] also fills.
  std::vector<FillingBlock> out;
  for (std::size_t i = 0; i < n; ++i)
    if (end[i] < n && (i + 1 == n || end[i + 1] > end[i])) out.push_back(FillingBlock{i, end[i]});
  return out;
}

bool check_window_property(const NormalWord& w, std::size_t ell, const SurfaceModel& model) {
  if (ell == 0) throw ContractError("check_window_property: window length must be positive");
  const std::size_t length = w.length();
  if (length < ell) return true;
  std::vector<std::size_t> offset(w.syllables.size() + 1, 0);
  for (std::size_t i = 0; i < w.syllables.size(); ++i)
    offset[i + 1] = offset[i] + static_cast<std::size_t>(std::abs(w.syllables[i].exponent));
  // Blocks are sorted by start with increasing ends, so the first block
  // starting inside a window is the one most likely to fit in it.
  const auto blocks = find_filling_blocks(w, model);
  std::size_t k = 0;
  for (std::size_t start = 0; start + ell <= length; ++start) {
    while (k < blocks.size() && offset[blocks[k].first] < start) ++k;
    if (k == blocks.size() || offset[blocks[k].last + 1] > start + ell) return false;
  }
  return true;
}

int max_exponent(const NormalWord& w) {
  int m = 0;
  for (const Syllable& x : w.syllables) m = std::max(m, std::abs(x.exponent));
  return m;
}

}  // namespace raag
