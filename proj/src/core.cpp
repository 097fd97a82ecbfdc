#include "raag/core.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "raag/errors.hpp"
#include "raag/normal_form.hpp"

namespace raag {
namespace {

using Slot = std::uint8_t;  // 2 * generator + (sign < 0)

Slot slot_of(Letter l) { return static_cast<Slot>(l.gen.id * 2 + (l.sign > 0 ? 0 : 1)); }
Letter letter_of(Slot s) { return Letter{Gen{static_cast<std::uint16_t>(s / 2)}, s % 2 == 0 ? 1 : -1}; }
std::uint16_t corner_key(Slot a, Slot b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::uint16_t>(a * 128 + b);
}

// Incremental fold-and-fill. Vertices are union-find classes; each class
// keeps its edge-ends by direction and the corners spanned by squares.
// Merging two classes whose edge-ends collide queues a further merge,
// which is exactly the Stallings fold.
class Builder {
 public:
  Builder(const DefiningGraph& graph, const LabeledCubeComplex& start) : graph_(graph) {
    for (std::size_t v = 0; v < start.vertex_count(); ++v) new_vertex();
    base_ = start.basepoint();
    for (const Edge& e : start.edges()) link(e.source, e.label, e.target);
    for (const Square& q : start.squares()) attach(q);
    initial_squares_ = start.squares().size();
    settle();
  }

  void add_loop(const Word& word) {
    if (word.empty()) return;
    VertexId at = base_;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const VertexId next = i + 1 == word.size() ? base_ : new_vertex();
      move(at, slot_of(word[i]), next);
      at = next;
    }
    settle();
  }

  CoreStatus complete(std::size_t cell_budget, std::optional<std::uint64_t> shuffle_seed) {
    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);
    std::size_t head = 0;
    while (head < dirty_.size()) {
      VertexId v;
      if (rng) {
        const auto pick = std::uniform_int_distribution<std::size_t>(head, dirty_.size() - 1)(*rng);
        std::swap(dirty_[head], dirty_[pick]);
      }
      v = dirty_[head++];
      queued_[v] = false;
      if (head > 4096 && head * 2 > dirty_.size()) {
        dirty_.erase(dirty_.begin(), dirty_.begin() + static_cast<std::ptrdiff_t>(head));
        head = 0;
      }
      if (find(v) != v) continue;
      auto corners = open_corners(v);
      if (rng) std::shuffle(corners.begin(), corners.end(), *rng);
      for (auto [s1, s2] : corners) {
        const VertexId x = find(v);
        if (std::binary_search(data_[x].corners.begin(), data_[x].corners.end(), corner_key(s1, s2)))
          continue;
        fill(x, s1, s2);
        if (cells() > cell_budget) return CoreStatus::budget_exceeded;
      }
    }
    return CoreStatus::verified_local_isometry;
  }

  LabeledCubeComplex result(CoreDiagnostics& diagnostics) {
    std::vector<std::int64_t> id(parent_.size(), -1);
    VertexId next = 0;
    LabeledCubeComplex out;
    for (VertexId v = 0; v < parent_.size(); ++v) {
      const VertexId r = find(v);
      if (id[r] < 0) {
        id[r] = next++;
        out.add_vertex();
      }
    }
    auto renumber = [&](VertexId v) { return static_cast<VertexId>(id[find(v)]); };
    out.set_basepoint(renumber(base_));
    std::vector<VertexId> roots(next);
    for (VertexId v = 0; v < parent_.size(); ++v) roots[id[find(v)]] = find(v);
    for (VertexId r : roots)
      for (auto [slot, target] : data_[r].slots)
        if (slot % 2 == 0) out.add_edge(renumber(r), renumber(target), letter_of(slot).gen);
    std::set<std::tuple<VertexId, VertexId, VertexId, VertexId, std::uint16_t, std::uint16_t>> seen;
    for (const Square& q : squares_) {
      const Square m{renumber(q.v00), renumber(q.v10), renumber(q.v01), renumber(q.v11), q.u, q.w};
      if (seen.emplace(m.v00, m.v10, m.v01, m.v11, m.u.id, m.w.id).second) out.add_square(m);
    }
    diagnostics.folds = links_ - out.edges().size();
    diagnostics.squares_added =
        out.squares().size() > initial_squares_ ? out.squares().size() - initial_squares_ : 0;
    diagnostics.vertices_added = vertices_added_;
    diagnostics.corners_filled = corners_filled_;
    return out;
  }

 private:
  struct VertexData {
    std::vector<std::pair<Slot, VertexId>> slots;  // sorted by slot
    std::vector<std::uint16_t> corners;            // sorted corner keys
    std::size_t size = 1;
  };

  VertexId new_vertex() {
    const auto v = static_cast<VertexId>(parent_.size());
    parent_.push_back(v);
    data_.emplace_back();
    queued_.push_back(false);
    ++live_vertices_;
    return v;
  }

  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::optional<VertexId> step(VertexId v, Slot s) {
    const auto& slots = data_[find(v)].slots;
    auto it = std::lower_bound(slots.begin(), slots.end(), std::pair<Slot, VertexId>{s, 0});
    if (it == slots.end() || it->first != s) return std::nullopt;
    return find(it->second);
  }

  std::size_t cells() const { return live_vertices_ + occupied_ / 2 + squares_.size(); }

  void mark(VertexId v) {
    if (queued_[v]) return;
    queued_[v] = true;
    dirty_.push_back(v);
  }

  void set_slot(VertexId v, Slot s, VertexId target) {
    v = find(v);
    auto& slots = data_[v].slots;
    auto it = std::lower_bound(slots.begin(), slots.end(), std::pair<Slot, VertexId>{s, 0});
    if (it != slots.end() && it->first == s) {
      pending_.emplace_back(it->second, target);
      return;
    }
    slots.insert(it, {s, target});
    ++occupied_;
    mark(v);
  }

  void link(VertexId source, Gen label, VertexId target) {
    ++links_;
    set_slot(source, slot_of(Letter{label, 1}), target);
    set_slot(target, slot_of(Letter{label, -1}), source);
  }

  void move(VertexId from, Slot s, VertexId to) {
    const Letter l = letter_of(s);
    if (l.sign > 0)
      link(from, l.gen, to);
    else
      link(to, l.gen, from);
  }

  void merge(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (data_[a].size < data_[b].size) std::swap(a, b);
    parent_[b] = a;
    --live_vertices_;
    VertexData moved = std::move(data_[b]);
    data_[b] = VertexData{};
    data_[a].size += moved.size;
    for (auto [s, target] : moved.slots) {
      --occupied_;
      set_slot(a, s, target);
    }
    auto& corners = data_[a].corners;
    std::vector<std::uint16_t> joined;
    std::set_union(corners.begin(), corners.end(), moved.corners.begin(), moved.corners.end(),
                   std::back_inserter(joined));
    corners = std::move(joined);
    mark(a);
  }

  void settle() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      merge(a, b);
    }
  }

  void add_corner(VertexId v, Slot a, Slot b) {
    auto& corners = data_[find(v)].corners;
    const auto key = corner_key(a, b);
    auto it = std::lower_bound(corners.begin(), corners.end(), key);
    if (it == corners.end() || *it != key) corners.insert(it, key);
  }

  void attach(const Square& q) {
    squares_.push_back(q);
    const Letter up{q.u, 1}, um{q.u, -1}, wp{q.w, 1}, wm{q.w, -1};
    add_corner(q.v00, slot_of(up), slot_of(wp));
    add_corner(q.v10, slot_of(um), slot_of(wp));
    add_corner(q.v01, slot_of(up), slot_of(wm));
    add_corner(q.v11, slot_of(um), slot_of(wm));
  }

  std::vector<std::pair<Slot, Slot>> open_corners(VertexId v) {
    std::vector<std::pair<Slot, Slot>> out;
    const auto& d = data_[v];
    for (std::size_t i = 0; i < d.slots.size(); ++i)
      for (std::size_t j = i + 1; j < d.slots.size(); ++j) {
        const Slot a = d.slots[i].first, b = d.slots[j].first;
        const Gen ga = letter_of(a).gen, gb = letter_of(b).gen;
        if (ga == gb || !graph_.adjacent(ga, gb)) continue;
        if (!std::binary_search(d.corners.begin(), d.corners.end(), corner_key(a, b)))
          out.emplace_back(a, b);
      }
    return out;
  }

  // Attaches a square at the corner of x spanned by directions s1, s2,
  // reusing completing edges that already exist.
  void fill(VertexId x, Slot s1, Slot s2) {
    ++corners_filled_;
    const VertexId y1 = *step(x, s1), y2 = *step(x, s2);
    const auto t1 = step(y1, s2), t2 = step(y2, s1);
    VertexId z;
    if (t1 && t2 && *t1 == *t2) {
      z = *t1;
    } else if (t1) {
      z = *t1;
      move(y2, s1, z);
    } else if (t2) {
      z = *t2;
      move(y1, s2, z);
    } else {
      z = new_vertex();
      ++vertices_added_;
      move(y1, s2, z);
      move(y2, s1, z);
    }
    const Letter d1 = letter_of(s1), d2 = letter_of(s2);
    const bool first_is_u = d1.gen < d2.gen;
    const Letter du = first_is_u ? d1 : d2, dw = first_is_u ? d2 : d1;
    const VertexId yu = first_is_u ? y1 : y2, yw = first_is_u ? y2 : y1;
    const int cu = du.sign > 0 ? 0 : 1, cw = dw.sign > 0 ? 0 : 1;
    VertexId grid[2][2];
    grid[cu][cw] = x;
    grid[1 - cu][cw] = yu;
    grid[cu][1 - cw] = yw;
    grid[1 - cu][1 - cw] = z;
    attach(Square{grid[0][0], grid[1][0], grid[0][1], grid[1][1], du.gen, dw.gen});
    settle();
  }

  const DefiningGraph& graph_;
  std::vector<VertexId> parent_;
  std::vector<VertexData> data_;
  std::vector<bool> queued_;
  std::vector<VertexId> dirty_;
  std::vector<std::pair<VertexId, VertexId>> pending_;
  std::vector<Square> squares_;
  VertexId base_ = 0;
  std::size_t live_vertices_ = 0, occupied_ = 0, links_ = 0;
  std::size_t initial_squares_ = 0, vertices_added_ = 0, corners_filled_ = 0;
};

SubgroupCore complete(const DefiningGraph& graph, Builder& builder, CoreOptions options) {
  SubgroupCore result;
  result.graph = graph;
  result.status = builder.complete(options.cell_budget, options.shuffle_seed);
  result.complex = builder.result(result.diagnostics);
  if (result.verified() && !check_local_isometry(result.complex, graph).is_local_isometry())
    throw ContractError("core construction stabilized on a complex that is not a local isometry");
  return result;
}

}  // namespace

SubgroupCore build_core(const DefiningGraph& graph, std::span<const Word> generators,
                        CoreOptions options) {
  if (options.cell_budget == 0) throw ContractError("build_core: cell budget must be positive");
  LabeledCubeComplex wedge;
  wedge.set_basepoint(wedge.add_vertex());
  Builder builder(graph, wedge);
  for (const Word& w : generators) {
    for (const Letter& l : w)
      if (l.gen.id >= graph.size()) throw InputError("build_core: letter outside the graph");
    builder.add_loop(w);
  }
  return complete(graph, builder, options);
}

SubgroupCore extend_core(const SubgroupCore& core, std::span<const Word> generators,
                         CoreOptions options) {
  Builder builder(core.graph, core.complex);
  for (const Word& w : generators) builder.add_loop(w);
  return complete(core.graph, builder, options);
}

bool membership(const SubgroupCore& core, const Word& w) {
  if (!core.verified()) throw ContractError("membership: core is not verified");
  const NormalWord nf = normalize(w, core.graph);
  const Transitions moves(core.complex, core.graph.size());
  VertexId at = core.complex.basepoint();
  for (const Letter& l : nf.letters()) {
    auto next = moves.step(at, l);
    if (!next) return false;
    at = *next;
  }
  return at == core.complex.basepoint();
}

namespace {

// Depth-first search over words that are both geodesic and canonical
// (lexicographically least in their commutation class) and trace in the
// core. Each element of H is reached exactly once, along its canonical word.
class ElementSearch {
 public:
  ElementSearch(const SubgroupCore& core, const Transitions& moves, std::size_t max_len,
                std::atomic<std::size_t>& nodes, std::size_t node_budget)
      : core_(core), moves_(moves), max_len_(max_len), nodes_(nodes), node_budget_(node_budget) {}

  bool extendable(Letter next) const {
    const auto& graph = core_.graph;
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      if (it->gen == next.gen) return it->sign == next.sign;
      if (!graph.commute(it->gen, next.gen)) return true;
      if (next.gen < it->gen) return false;
    }
    return true;
  }

  void run_from(VertexId at) {
    if (nodes_.fetch_add(1) >= node_budget_) throw ResourceError("enumeration budget exhausted", found_.size());
    if (at == core_.complex.basepoint()) found_.push_back(to_syllables(path_));
    if (path_.size() == max_len_) return;
    for (Gen g : core_.graph.generators())
      for (int sign : {1, -1}) {
        const Letter l{g, sign};
        auto next = moves_.step(at, l);
        if (!next || !extendable(l)) continue;
        path_.push_back(l);
        run_from(*next);
        path_.pop_back();
      }
  }

  void seed(Letter l) { path_.assign(1, l); }
  std::vector<NormalWord>& found() { return found_; }

 private:
  const SubgroupCore& core_;
  const Transitions& moves_;
  std::size_t max_len_;
  std::atomic<std::size_t>& nodes_;
  std::size_t node_budget_;
  Word path_;
  std::vector<NormalWord> found_;
};

bool shortlex_less(const NormalWord& a, const NormalWord& b) {
  const auto la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace

std::vector<NormalWord> enumerate_elements(const SubgroupCore& core, std::size_t max_len,
                                           EnumerationOptions options) {
  if (!core.verified()) throw ContractError("enumerate_elements: core is not verified");
  return enumerate_loops(core, max_len, options);
}

std::vector<NormalWord> enumerate_loops(const SubgroupCore& core, std::size_t max_len,
                                        EnumerationOptions options) {
  const Transitions moves(core.complex, core.graph.size());
  std::atomic<std::size_t> nodes{1};
  std::vector<NormalWord> out{NormalWord{}};

  std::vector<std::pair<Letter, VertexId>> roots;
  if (max_len > 0)
    for (Gen g : core.graph.generators())
      for (int sign : {1, -1})
        if (auto next = moves.step(core.complex.basepoint(), Letter{g, sign}))
          roots.emplace_back(Letter{g, sign}, *next);

  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<NormalWord>> partial(threads);
  std::atomic<std::size_t> next_root{0};
  auto worker = [&](unsigned slot) {
    for (std::size_t r; (r = next_root.fetch_add(1)) < roots.size();) {
      ElementSearch search(core, moves, max_len, nodes, options.node_budget);
      search.seed(roots[r].first);
      try {
        search.run_from(roots[r].second);
      } catch (const ResourceError&) {
        auto& f = search.found();
        partial[slot].insert(partial[slot].end(), f.begin(), f.end());
        throw;
      }
      auto& f = search.found();
      partial[slot].insert(partial[slot].end(), f.begin(), f.end());
    }
  };

  bool exhausted = false;
  if (threads == 1) {
    try {
      worker(0);
    } catch (const ResourceError&) {
      exhausted = true;
    }
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker, t));
    for (auto& j : jobs) {
      try {
        j.get();
      } catch (const ResourceError&) {
        exhausted = true;
      }
    }
  }
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  if (exhausted)
    throw ResourceError("enumeration: node budget of " + std::to_string(options.node_budget) +
                            " exhausted",
                        out.size());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<NormalWord> extract_generators(const SubgroupCore& core) {
  if (!core.verified()) throw ContractError("extract_generators: core is not verified");
  const auto& complex = core.complex;
  const auto& edges = complex.edges();
  const std::size_t nv = complex.vertex_count();

  struct End {
    Letter direction;
    std::size_t edge;
  };
  std::vector<std::vector<End>> ends(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    ends[edges[e].source].push_back(End{Letter{edges[e].label, 1}, e});
    ends[edges[e].target].push_back(End{Letter{edges[e].label, -1}, e});
  }
  for (auto& list : ends)
    std::sort(list.begin(), list.end(), [](const End& a, const End& b) {
      return std::tie(a.direction, a.edge) < std::tie(b.direction, b.edge);
    });

  std::vector<std::optional<Word>> prefix(nv);
  std::vector<bool> tree_edge(edges.size(), false);
  prefix[complex.basepoint()] = Word{};
  std::deque<VertexId> queue{complex.basepoint()};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const End& end : ends[v]) {
      const Edge& e = edges[end.edge];
      const VertexId other = end.direction.sign > 0 ? e.target : e.source;
      if (prefix[other]) continue;
      Word w = *prefix[v];
      w.push_back(end.direction);
      prefix[other] = std::move(w);
      tree_edge[end.edge] = true;
      queue.push_back(other);
    }
  }

  std::vector<NormalWord> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree_edge[e]) continue;
    Word w = *prefix[edges[e].source];
    w.push_back(Letter{edges[e].label, 1});
    w = concat(w, invert(*prefix[edges[e].target]));
    NormalWord nf = normalize(w, core.graph);
    if (!nf.empty() && std::find(out.begin(), out.end(), nf) == out.end()) out.push_back(std::move(nf));
  }

  // Square relations make some chords redundant. Drop a chord when the
  // core of the remaining ones already contains it; a remainder whose core
  // does not stabilize keeps the chord.
  CoreOptions options;
  options.cell_budget = std::max<std::size_t>(20'000, 4 * complex.cells());
  for (std::size_t i = out.size(); i-- > 0 && out.size() > 1;) {
    std::vector<Word> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j].letters());
    const SubgroupCore rest = build_core(core.graph, others, options);
    if (rest.verified() && membership(rest, out[i].letters())) out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return out;
}

}  // namespace raag
