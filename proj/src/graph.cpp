#include "raag/graph.hpp"

#include <algorithm>

#include "raag/errors.hpp"

namespace raag {

DefiningGraph::DefiningGraph(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(vertices)) {
  if (labels_.size() > kMaxVertices)
    throw InputError("defining graph has " + std::to_string(labels_.size()) +
                     " vertices; at most 64 are supported");
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty vertex label");
    if (i > 0 && labels_[i] == labels_[i - 1])
      throw InputError("duplicate vertex label '" + labels_[i] + "'");
    for (char c : labels_[i])
      if (c == '^' || c == ' ' || c == '\t' || c == '\n')
        throw InputError("vertex label '" + labels_[i] + "' contains a reserved character");
  }
  adj_.assign(labels_.size(), GenSet{});
  for (const auto& [a, b] : edges) {
    auto u = find(a);
    auto w = find(b);
    if (!u) throw InputError("edge endpoint '" + a + "' is not a declared vertex");
    if (!w) throw InputError("edge endpoint '" + b + "' is not a declared vertex");
    if (*u == *w) throw InputError("self-loop at '" + a + "'");
    if (adj_[u->id].contains(*w))
      throw InputError("duplicate edge {" + a + ", " + b + "}");
    adj_[u->id].insert(*w);
    adj_[w->id].insert(*u);
  }
}

std::optional<Gen> DefiningGraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return Gen{static_cast<std::uint16_t>(it - labels_.begin())};
}

Gen DefiningGraph::gen(std::string_view label) const {
  auto g = find(label);
  if (!g) throw InputError("unknown generator '" + std::string(label) + "'");
  return *g;
}

GenSet DefiningGraph::all() const {
  if (labels_.size() == 64) return GenSet(~std::uint64_t{0});
  return GenSet((std::uint64_t{1} << labels_.size()) - 1);
}

std::vector<Gen> DefiningGraph::generators() const {
  std::vector<Gen> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    out.push_back(Gen{static_cast<std::uint16_t>(i)});
  return out;
}

std::vector<std::pair<Gen, Gen>> DefiningGraph::edges() const {
  std::vector<std::pair<Gen, Gen>> out;
  for (Gen u : generators())
    for (Gen w : adj_[u.id].members())
      if (u < w) out.emplace_back(u, w);
  return out;
}

}  // namespace raag
