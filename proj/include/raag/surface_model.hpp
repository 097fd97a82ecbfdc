#pragma once

#include <cstddef>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// Symbolic surface: the coincidence graph together with the family of
/// generator subsets whose supports fill. The family is given by its
/// minimal members and is closed upward.
class SurfaceModel {
 public:
  /// Throws InputError for an empty or singleton filling set, or when one
  /// listed set contains another.
  SurfaceModel(DefiningGraph graph, std::vector<GenSet> minimal_filling_sets, bool admissible);

  const DefiningGraph& graph() const { return graph_; }
  const std::vector<GenSet>& minimal_filling_sets() const { return minimal_; }
  bool admissible() const { return admissible_; }

  bool is_filling(GenSet gens) const;

 private:
  DefiningGraph graph_;
  std::vector<GenSet> minimal_;
  bool admissible_;
};

GenSet supports(const NormalWord& w);

/// Whether the support of the cyclic reduction of w fills.
bool fills(const NormalWord& w, const SurfaceModel& model);

/// The subsurface prefix * X_base.
struct SymbolicSubsurface {
  NormalWord prefix;
  Gen base;
  friend bool operator==(const SymbolicSubsurface&, const SymbolicSubsurface&) = default;
};

/// One entry per syllable, read off the given representative: the prefix
/// before the syllable (in canonical form) and the syllable's generator.
std::vector<SymbolicSubsurface> subs(const NormalWord& w, const DefiningGraph& graph);

/// u X_j and v X_j agree when v^-1 u only involves generators in star(j).
bool same_subsurface(const SymbolicSubsurface& a, const SymbolicSubsurface& b,
                     const DefiningGraph& graph);

/// Equality of two subs() families as multisets under same_subsurface.
bool same_family(const std::vector<SymbolicSubsurface>& a, const std::vector<SymbolicSubsurface>& b,
                 const DefiningGraph& graph);

/// Consecutive syllables first..last (inclusive) whose supports fill.
struct FillingBlock {
  std::size_t first = 0;
  std::size_t last = 0;
  friend auto operator<=>(const FillingBlock&, const FillingBlock&) = default;
};

/// All inclusion-minimal filling syllable ranges, sorted by first syllable.
std::vector<FillingBlock> find_filling_blocks(const NormalWord& w, const SurfaceModel& model);

/// True iff every window of ell consecutive letters contains a whole
/// filling block. Words shorter than ell pass vacuously.
bool check_window_property(const NormalWord& w, std::size_t ell, const SurfaceModel& model);

int max_exponent(const NormalWord& w);

}  // namespace raag
