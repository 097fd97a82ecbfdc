#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

using VertexId = std::uint32_t;

struct Edge {
  VertexId source = 0;
  VertexId target = 0;
  Gen label;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A square with sides labeled u < w:
///
///   v01 --u--> v11
///    ^          ^
///    w          w
///    |          |
///   v00 --u--> v10
struct Square {
  VertexId v00 = 0, v10 = 0, v01 = 0, v11 = 0;
  Gen u, w;
  friend bool operator==(const Square&, const Square&) = default;
};

/// 2-skeleton of a cube complex over the Salvetti complex of a defining
/// graph: oriented generator-labeled edges, squares, and a basepoint.
/// Higher cubes are implied by the flag convention and never stored.
class LabeledCubeComplex {
 public:
  VertexId add_vertex() { return vertex_count_++; }
  void add_edge(VertexId source, VertexId target, Gen label) {
    edges_.push_back(Edge{source, target, label});
  }
  /// Orients the square so that u < w.
  void add_square(Square s);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Square>& squares() const { return squares_; }
  VertexId basepoint() const { return basepoint_; }
  void set_basepoint(VertexId v) { basepoint_ = v; }

  /// Cell count (vertices + edges + squares), the unit of build budgets.
  std::size_t cells() const { return vertex_count_ + edges_.size() + squares_.size(); }

  friend bool operator==(const LabeledCubeComplex&, const LabeledCubeComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
  VertexId basepoint_ = 0;
};

/// One vertex, a loop per generator, a square per edge of the graph.
LabeledCubeComplex salvetti(const DefiningGraph& graph);

/// Two distinct edges leaving `vertex` in the same direction.
struct FoldablePair {
  VertexId vertex;
  Letter direction;
  std::size_t first_edge, second_edge;
};

/// Two edge-ends at `vertex` with distinct commuting labels and no square
/// spanning them. Directions are read outward from the vertex.
struct OpenCorner {
  VertexId vertex;
  Letter first, second;
  std::size_t first_edge, second_edge;
};

struct IsometryReport {
  std::vector<FoldablePair> foldable;
  std::vector<OpenCorner> open_corners;
  std::vector<std::string> malformed;

  bool is_local_isometry() const {
    return foldable.empty() && open_corners.empty() && malformed.empty();
  }
};

/// Link criterion for the label map to the Salvetti complex: injective
/// links (no foldable pairs) and full link images (every commuting corner
/// spanned by a square). Structural problems are listed under `malformed`.
IsometryReport check_local_isometry(const LabeledCubeComplex& complex, const DefiningGraph& graph);

/// Deterministic transition table of a folded complex. step() follows the
/// unique edge leaving a vertex in a direction, if any.
class Transitions {
 public:
  Transitions(const LabeledCubeComplex& complex, std::size_t generator_count);
  std::optional<VertexId> step(VertexId v, Letter l) const {
    const auto t = table_[index(v, l)];
    if (t < 0) return std::nullopt;
    return static_cast<VertexId>(t);
  }
  /// False if two edges share a (vertex, direction) slot.
  bool deterministic() const { return deterministic_; }

 private:
  std::size_t index(VertexId v, Letter l) const {
    return (static_cast<std::size_t>(v) * gens_ + l.gen.id) * 2 + (l.sign > 0 ? 0 : 1);
  }
  std::size_t gens_;
  std::vector<std::int64_t> table_;
  bool deterministic_ = true;
};

/// Canonical text form of a connected complex with deterministic links,
/// numbered by breadth-first search from the basepoint. Equal signatures
/// mean isomorphic pointed labeled complexes.
std::string isomorphism_signature(const LabeledCubeComplex& complex, const DefiningGraph& graph);

}  // namespace raag
