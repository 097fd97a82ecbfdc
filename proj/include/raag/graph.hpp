#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

/// Index of a standard generator (vertex of the defining graph).
struct Gen {
  std::uint16_t id = 0;
  friend auto operator<=>(Gen, Gen) = default;
};

/// Subset of the generators of a defining graph with at most 64 vertices.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t bits) : bits_(bits) {}

  static GenSet of(std::initializer_list<Gen> gens) {
    GenSet s;
    for (Gen g : gens) s.insert(g);
    return s;
  }

  bool contains(Gen g) const { return (bits_ >> g.id) & 1u; }
  void insert(Gen g) { bits_ |= std::uint64_t{1} << g.id; }
  void erase(Gen g) { bits_ &= ~(std::uint64_t{1} << g.id); }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(GenSet other) const { return (bits_ & other.bits_) != 0; }
  std::uint64_t bits() const { return bits_; }

  std::vector<Gen> members() const {
    std::vector<Gen> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(Gen{static_cast<std::uint16_t>(std::countr_zero(b))});
    return out;
  }

  friend GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  GenSet& operator|=(GenSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend auto operator<=>(GenSet, GenSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Simplicial graph presenting a right-angled Artin group. Vertex labels are
/// stored in sorted order, so generator indices follow label order; that
/// order is the total order used for canonical representatives.
class DefiningGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  DefiningGraph() = default;
  /// Throws InputError unless the input is simplicial over the given labels.
  DefiningGraph(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Gen g) const { return labels_.at(g.id); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Gen> find(std::string_view label) const;
  /// Like find, but throws InputError for unknown labels.
  Gen gen(std::string_view label) const;

  /// Edge test; a generator is never adjacent to itself.
  bool adjacent(Gen u, Gen w) const { return adj_[u.id].contains(w); }
  /// Commutation in A(Γ): adjacent, or the same generator.
  bool commute(Gen u, Gen w) const { return u == w || adjacent(u, w); }

  GenSet neighbors(Gen g) const { return adj_[g.id]; }
  GenSet star(Gen g) const {
    GenSet s = adj_[g.id];
    s.insert(g);
    return s;
  }
  GenSet all() const;
  std::vector<Gen> generators() const;
  std::vector<std::pair<Gen, Gen>> edges() const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<GenSet> adj_;
};

}  // namespace raag
