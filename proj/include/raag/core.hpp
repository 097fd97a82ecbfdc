#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "raag/cube_complex.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

enum class CoreStatus { verified_local_isometry, budget_exceeded };

/// Counters from a core construction. They depend on processing order and
/// are informational only.
struct CoreDiagnostics {
  std::size_t folds = 0;           // edge identifications
  std::size_t squares_added = 0;   // net squares attached
  std::size_t vertices_added = 0;  // vertices created while filling corners
  std::size_t corners_filled = 0;
};

/// A pointed cube complex with its label map to the Salvetti complex. When
/// verified, the map is a local isometry and the loop subgroup is H.
struct SubgroupCore {
  LabeledCubeComplex complex;
  DefiningGraph graph;
  CoreStatus status = CoreStatus::budget_exceeded;
  CoreDiagnostics diagnostics;

  bool verified() const { return status == CoreStatus::verified_local_isometry; }
};

struct CoreOptions {
  std::size_t cell_budget = 200'000;
  /// When set, open corners are filled one at a time in random order
  /// instead of in deterministic batches.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Fold-and-fill from a wedge of subdivided loops spelling the generators.
/// Running out of budget yields status budget_exceeded, never an error.
SubgroupCore build_core(const DefiningGraph& graph, std::span<const Word> generators,
                        CoreOptions options = {});

/// Attaches further generator loops at the basepoint of an existing core
/// and completes again. Diagnostics count only the extension work.
SubgroupCore extend_core(const SubgroupCore& core, std::span<const Word> generators,
                         CoreOptions options = {});

/// Traces the canonical normal form of w from the basepoint. Throws
/// ContractError for cores that are not verified.
bool membership(const SubgroupCore& core, const Word& w);

struct EnumerationOptions {
  /// Maximum number of search nodes (geodesic prefixes) visited.
  std::size_t node_budget = 20'000'000;
  unsigned threads = 1;
};

/// Every h in H with |h| <= max_len, as canonical normal words sorted by
/// length then lexicographically. Throws ResourceError (partial = elements
/// found) when the node budget runs out.
std::vector<NormalWord> enumerate_elements(const SubgroupCore& core, std::size_t max_len,
                                           EnumerationOptions options = {});

/// Closed paths at the basepoint whose labels are geodesic canonical words,
/// up to max_len. On a verified core this is enumerate_elements; on a core
/// that ran out of budget it is a subset of H (every loop lies in H), which
/// is enough to exhibit elements but not to bound them.
std::vector<NormalWord> enumerate_loops(const SubgroupCore& core, std::size_t max_len,
                                        EnumerationOptions options = {});

/// Spanning-tree generators: one word per edge outside a breadth-first
/// tree rooted at the basepoint, skipping trivial words and words the
/// remaining ones already generate. Throws ContractError for cores that are
/// not verified.
std::vector<NormalWord> extract_generators(const SubgroupCore& core);

}  // namespace raag
