#include "raag/cube_complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "raag/errors.hpp"

namespace raag {

void LabeledCubeComplex::add_square(Square s) {
  if (s.w < s.u) {
    std::swap(s.u, s.w);
    std::swap(s.v10, s.v01);
  }
  squares_.push_back(s);
}

LabeledCubeComplex salvetti(const DefiningGraph& graph) {
  LabeledCubeComplex c;
  const VertexId x = c.add_vertex();
  c.set_basepoint(x);
  for (Gen g : graph.generators()) c.add_edge(x, x, g);
  for (auto [u, w] : graph.edges()) c.add_square(Square{x, x, x, x, u, w});
  return c;
}

namespace {

using EdgeKey = std::tuple<VertexId, VertexId, std::uint16_t>;

struct End {
  std::size_t edge;
  Letter direction;
};

}  // namespace

IsometryReport check_local_isometry(const LabeledCubeComplex& complex, const DefiningGraph& graph) {
  IsometryReport report;
  const std::size_t nv = complex.vertex_count();
  const auto& edges = complex.edges();
  if (nv == 0) {
    report.malformed.push_back("complex has no vertices");
    return report;
  }
  if (complex.basepoint() >= nv) report.malformed.push_back("basepoint out of range");

  std::map<EdgeKey, std::size_t> edge_index;
  std::vector<std::vector<End>> ends(nv);
  bool edges_ok = true;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    if (ed.source >= nv || ed.target >= nv || ed.label.id >= graph.size()) {
      report.malformed.push_back("edge " + std::to_string(e) + " has an invalid endpoint or label");
      edges_ok = false;
      continue;
    }
    edge_index.emplace(EdgeKey{ed.source, ed.target, ed.label.id}, e);
    ends[ed.source].push_back(End{e, Letter{ed.label, +1}});
    ends[ed.target].push_back(End{e, Letter{ed.label, -1}});
  }

  // Corners spanned by squares, keyed by vertex and the two edge-ends.
  using CornerKey = std::tuple<VertexId, std::size_t, int, std::size_t, int>;
  std::set<CornerKey> spanned;
  auto corner_key = [](VertexId v, End a, End b) {
    if (std::tie(b.edge, b.direction.sign) < std::tie(a.edge, a.direction.sign)) std::swap(a, b);
    return CornerKey{v, a.edge, a.direction.sign, b.edge, b.direction.sign};
  };
  for (std::size_t k = 0; k < complex.squares().size(); ++k) {
    const Square& s = complex.squares()[k];
    const std::string name = "square " + std::to_string(k);
    if (s.v00 >= nv || s.v10 >= nv || s.v01 >= nv || s.v11 >= nv ||
        s.u.id >= graph.size() || s.w.id >= graph.size()) {
      report.malformed.push_back(name + " has an invalid vertex or label");
      continue;
    }
    if (s.u == s.w || !graph.adjacent(s.u, s.w)) {
      report.malformed.push_back(name + " has labels that do not commute");
      continue;
    }
    auto find = [&](VertexId a, VertexId b, Gen g) -> std::optional<std::size_t> {
      auto it = edge_index.find(EdgeKey{a, b, g.id});
      if (it == edge_index.end()) return std::nullopt;
      return it->second;
    };
    const auto bottom = find(s.v00, s.v10, s.u);
    const auto left = find(s.v00, s.v01, s.w);
    const auto right = find(s.v10, s.v11, s.w);
    const auto top = find(s.v01, s.v11, s.u);
    if (!bottom || !left || !right || !top) {
      report.malformed.push_back(name + " is not attached along existing edges");
      continue;
    }
    const Letter up{s.u, 1}, un{s.u, -1}, wp{s.w, 1}, wn{s.w, -1};
    spanned.insert(corner_key(s.v00, End{*bottom, up}, End{*left, wp}));
    spanned.insert(corner_key(s.v10, End{*bottom, un}, End{*right, wp}));
    spanned.insert(corner_key(s.v01, End{*top, up}, End{*left, wn}));
    spanned.insert(corner_key(s.v11, End{*top, un}, End{*right, wn}));
  }

  for (VertexId v = 0; v < nv; ++v) {
    std::map<std::pair<std::uint16_t, int>, std::size_t> first_by_direction;
    for (const End& end : ends[v]) {
      auto [it, fresh] =
          first_by_direction.emplace(std::pair{end.direction.gen.id, end.direction.sign}, end.edge);
      if (!fresh) report.foldable.push_back(FoldablePair{v, end.direction, it->second, end.edge});
    }
    const auto& at = ends[v];
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        const Gen a = at[i].direction.gen, b = at[j].direction.gen;
        if (a == b || !graph.adjacent(a, b)) continue;
        if (spanned.count(corner_key(v, at[i], at[j]))) continue;
        End first = at[i], second = at[j];
        if (second.direction < first.direction) std::swap(first, second);
        report.open_corners.push_back(
            OpenCorner{v, first.direction, second.direction, first.edge, second.edge});
      }
  }

  if (edges_ok && complex.basepoint() < nv) {
    std::vector<bool> seen(nv, false);
    std::deque<VertexId> queue{complex.basepoint()};
    seen[complex.basepoint()] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const End& end : ends[v]) {
        const Edge& e = edges[end.edge];
        const VertexId other = end.direction.sign > 0 ? e.target : e.source;
        if (!seen[other]) {
          seen[other] = true;
          ++reached;
          queue.push_back(other);
        }
      }
    }
    if (reached != nv) report.malformed.push_back("complex is not connected");
  }
  return report;
}

Transitions::Transitions(const LabeledCubeComplex& complex, std::size_t generator_count)
    : gens_(generator_count), table_(complex.vertex_count() * generator_count * 2, -1) {
  for (const Edge& e : complex.edges()) {
    auto& out = table_[index(e.source, Letter{e.label, 1})];
    auto& in = table_[index(e.target, Letter{e.label, -1})];
    if (out >= 0 || in >= 0) deterministic_ = false;
    if (out < 0) out = e.target;
    if (in < 0) in = e.source;
  }
}

std::string isomorphism_signature(const LabeledCubeComplex& complex, const DefiningGraph& graph) {
  const Transitions moves(complex, graph.size());
  if (!moves.deterministic())
    throw ContractError("isomorphism_signature: complex has foldable edges");
  const std::size_t nv = complex.vertex_count();
  std::vector<std::int64_t> number(nv, -1);
  std::deque<VertexId> queue{complex.basepoint()};
  number[complex.basepoint()] = 0;
  std::int64_t next = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (Gen g : graph.generators())
      for (int sign : {1, -1})
        if (auto t = moves.step(v, Letter{g, sign}); t && number[*t] < 0) {
          number[*t] = next++;
          queue.push_back(*t);
        }
  }
  std::ostringstream out;
  out << "V" << nv << (static_cast<std::size_t>(next) == nv ? "" : " disconnected") << "\nE";
  std::vector<std::tuple<std::int64_t, std::int64_t, std::string>> es;
  for (const Edge& e : complex.edges())
    es.emplace_back(number[e.source], number[e.target], graph.label(e.label));
  std::sort(es.begin(), es.end());
  for (const auto& [a, b, l] : es) out << ' ' << a << '-' << l << "->" << b;
  std::vector<std::tuple<std::string, std::string, std::int64_t, std::int64_t, std::int64_t, std::int64_t>> ss;
  for (const Square& s : complex.squares())
    ss.emplace_back(graph.label(s.u), graph.label(s.w), number[s.v00], number[s.v10],
                    number[s.v01], number[s.v11]);
  std::sort(ss.begin(), ss.end());
  out << "\nS";
  for (const auto& [u, w, a, b, c, d] : ss)
    out << " [" << u << ',' << w << ':' << a << ',' << b << ',' << c << ',' << d << ']';
  return out.str();
}

}  // namespace raag
