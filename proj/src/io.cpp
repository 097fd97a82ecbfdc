#include "raag/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "raag/errors.hpp"

namespace raag {
namespace {

std::string where(const Json& j, const char* key) { return "'" + std::string(key) + "' in " + j.dump().substr(0, 60); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError("missing field " + where(j, key));
  return j.at(key);
}

std::string label_of(const Json& j, const std::string& context) {
  if (!j.is_string()) throw InputError(context + ": expected a label string, got " + j.dump());
  return j.get<std::string>();
}

std::size_t index_of(const Json& j, const std::string& context) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(context + ": expected a non-negative integer, got " + j.dump());
  return j.get<std::size_t>();
}

}  // namespace

Json parse_json(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + message);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

DefiningGraph graph_from_json(const Json& j) {
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw InputError("'vertices' must be an array");
  std::vector<std::string> labels;
  for (const Json& v : vertices) labels.push_back(label_of(v, "vertices"));
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw InputError("'edges' must be an array");
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of labels, got " + e.dump());
      edges.emplace_back(label_of(e[0], "edges"), label_of(e[1], "edges"));
    }
  }
  return DefiningGraph(std::move(labels), edges);
}

Json graph_to_json(const DefiningGraph& graph) {
  Json edges = Json::array();
  for (auto [u, w] : graph.edges()) edges.push_back({graph.label(u), graph.label(w)});
  return Json{{"vertices", graph.labels()}, {"edges", edges}};
}

SurfaceModel model_from_json(const Json& j) {
  DefiningGraph graph = graph_from_json(field(j, "graph"));
  const Json& sets = field(j, "minimal_filling_sets");
  if (!sets.is_array()) throw InputError("'minimal_filling_sets' must be an array");
  std::vector<GenSet> minimal;
  for (const Json& s : sets) {
    if (!s.is_array()) throw InputError("filling set must be an array of labels, got " + s.dump());
    GenSet set;
    for (const Json& label : s) set.insert(graph.gen(label_of(label, "minimal_filling_sets")));
    minimal.push_back(set);
  }
  const Json& admissible = field(j, "admissible");
  if (!admissible.is_boolean()) throw InputError("'admissible' must be true or false");
  return SurfaceModel(std::move(graph), std::move(minimal), admissible.get<bool>());
}

Json model_to_json(const SurfaceModel& model) {
  Json sets = Json::array();
  for (GenSet s : model.minimal_filling_sets()) {
    Json labels = Json::array();
    for (Gen g : s.members()) labels.push_back(model.graph().label(g));
    sets.push_back(labels);
  }
  return Json{{"graph", graph_to_json(model.graph())},
              {"minimal_filling_sets", sets},
              {"admissible", model.admissible()}};
}

std::vector<Word> generators_from_json(const Json& j, const DefiningGraph& graph) {
  const Json& list = j.is_object() ? field(j, "generators") : j;
  if (!list.is_array()) throw InputError("generators must be an array of word strings");
  std::vector<Word> out;
  for (const Json& w : list) {
    if (!w.is_string()) throw InputError("generator must be a word string, got " + w.dump());
    out.push_back(parse_word(w.get<std::string>(), graph));
  }
  return out;
}

Json complex_to_json(const LabeledCubeComplex& complex, const DefiningGraph& graph) {
  Json edges = Json::array();
  for (const Edge& e : complex.edges())
    edges.push_back(Json{{"source", e.source}, {"target", e.target}, {"label", graph.label(e.label)}});
  Json squares = Json::array();
  for (const Square& s : complex.squares())
    squares.push_back(Json{{"v00", s.v00},
                           {"v10", s.v10},
                           {"v01", s.v01},
                           {"v11", s.v11},
                           {"u", graph.label(s.u)},
                           {"w", graph.label(s.w)}});
  return Json{{"vertices", complex.vertex_count()},
              {"basepoint", complex.basepoint()},
              {"edges", edges},
              {"squares", squares}};
}

LabeledCubeComplex complex_from_json(const Json& j, const DefiningGraph& graph) {
  LabeledCubeComplex complex;
  const std::size_t n = index_of(field(j, "vertices"), "vertices");
  for (std::size_t v = 0; v < n; ++v) complex.add_vertex();
  auto vertex = [&](const Json& x, const std::string& context) {
    const std::size_t v = index_of(x, context);
    if (v >= n) throw InputError(context + ": vertex " + std::to_string(v) + " out of range");
    return static_cast<VertexId>(v);
  };
  complex.set_basepoint(vertex(field(j, "basepoint"), "basepoint"));
  for (const Json& e : field(j, "edges"))
    complex.add_edge(vertex(field(e, "source"), "edge source"), vertex(field(e, "target"), "edge target"),
                     graph.gen(label_of(field(e, "label"), "edge label")));
  if (j.contains("squares"))
    for (const Json& s : j.at("squares"))
      complex.add_square(Square{vertex(field(s, "v00"), "square"), vertex(field(s, "v10"), "square"),
                                vertex(field(s, "v01"), "square"), vertex(field(s, "v11"), "square"),
                                graph.gen(label_of(field(s, "u"), "square label")),
                                graph.gen(label_of(field(s, "w"), "square label"))});
  return complex;
}

Json core_to_json(const SubgroupCore& core) {
  Json j{{"schema_version", kSchemaVersion},
         {"graph", graph_to_json(core.graph)},
         {"status", core.verified() ? "verified_local_isometry" : "budget_exceeded"},
         {"diagnostics",
          {{"folds", core.diagnostics.folds},
           {"squares_added", core.diagnostics.squares_added},
           {"vertices_added", core.diagnostics.vertices_added},
           {"corners_filled", core.diagnostics.corners_filled}}}};
  j.update(complex_to_json(core.complex, core.graph));
  return j;
}

SubgroupCore core_from_json(const Json& j) {
  SubgroupCore core;
  core.graph = graph_from_json(field(j, "graph"));
  core.complex = complex_from_json(j, core.graph);
  const std::string status = field(j, "status").is_string() ? j.at("status").get<std::string>() : "";
  if (status == "verified_local_isometry") {
    // Never trust a recorded status: re-check the link condition.
    const auto report = check_local_isometry(core.complex, core.graph);
    if (!report.is_local_isometry())
      throw InputError("core is marked verified but is not a local isometry");
    core.status = CoreStatus::verified_local_isometry;
  } else if (status == "budget_exceeded") {
    core.status = CoreStatus::budget_exceeded;
  } else {
    throw InputError("unknown core status '" + status + "'");
  }
  if (j.contains("diagnostics")) {
    const Json& d = j.at("diagnostics");
    core.diagnostics.folds = d.value("folds", std::size_t{0});
    core.diagnostics.squares_added = d.value("squares_added", std::size_t{0});
    core.diagnostics.vertices_added = d.value("vertices_added", std::size_t{0});
    core.diagnostics.corners_filled = d.value("corners_filled", std::size_t{0});
  }
  return core;
}

Json certificate_to_json(const Certificate& cert) {
  const DefiningGraph& graph = cert.model.graph();
  Json gens = Json::array();
  for (const Word& w : cert.generators) gens.push_back(format_word(w, graph));
  Json j{{"schema_version", kSchemaVersion},
         {"verdict", to_string(cert.verdict)},
         {"reason", cert.reason},
         {"model", model_to_json(cert.model)},
         {"generators", gens},
         {"core",
          {{"status", cert.core.verified() ? "verified_local_isometry" : "budget_exceeded"},
           {"vertices", cert.core.complex.vertex_count()},
           {"edges", cert.core.complex.edges().size()},
           {"squares", cert.core.complex.squares().size()},
           {"folds", cert.core.diagnostics.folds},
           {"squares_added", cert.core.diagnostics.squares_added}}},
         {"ell", cert.ell},
         {"elements_checked", cert.elements_checked}};
  if (cert.witness) {
    Json support = Json::array();
    for (Gen g : supports(*cert.witness_core).members()) support.push_back(graph.label(g));
    j["witness"] = {{"word", format_word(*cert.witness, graph)},
                    {"cyclic_reduction", format_word(*cert.witness_core, graph)},
                    {"support", support}};
  }
  if (cert.verdict == Verdict::certified) {
    auto rational = [](Rational r) {
      return r.denominator() == 1 ? std::to_string(r.numerator())
                                  : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    };
    j["bound"] = {{"form", "d(mu, h mu) >= |h| * slope + offset"},
                  {"slope", rational(cert.slope)},
                  {"offset", rational(cert.offset)}};
    j["short_syllables"] = cert.short_syllables;
  }
  return j;
}

std::string export_dot(const LabeledCubeComplex& complex, const DefiningGraph& graph) {
  std::ostringstream out;
  out << "digraph core {\n";
  out << "  // basepoint " << complex.basepoint() << "\n";
  for (const Square& s : complex.squares())
    out << "  // square " << s.v00 << ' ' << s.v10 << ' ' << s.v01 << ' ' << s.v11 << ' ' << graph.label(s.u)
        << ' ' << graph.label(s.w) << "\n";
  for (VertexId v = 0; v < complex.vertex_count(); ++v) {
    out << "  " << v;
    if (v == complex.basepoint()) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : complex.edges())
    out << "  " << e.source << " -> " << e.target << " [label=\"" << graph.label(e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

LabeledCubeComplex import_dot(std::string_view text, const DefiningGraph& graph) {
  static const std::regex basepoint_re(R"(^\s*//\s*basepoint\s+(\d+)\s*$)");
  static const std::regex square_re(R"(^\s*//\s*square\s+(\d+)\s+(\d+)\s+(\d+)\s+(\d+)\s+(\S+)\s+(\S+)\s*$)");
  static const std::regex node_re(R"(^\s*(\d+)\s*(\[[^\]]*\])?\s*;\s*$)");
  static const std::regex edge_re(R"re(^\s*(\d+)\s*->\s*(\d+)\s*\[\s*label\s*=\s*"([^"]*)"\s*\]\s*;\s*$)re");
  static const std::regex skip_re(R"(^\s*(digraph\s+\w*\s*\{|\}|//.*)?\s*$)");

  std::size_t vertices = 0;
  VertexId basepoint = 0;
  std::vector<Edge> edges;
  std::vector<Square> squares;
  auto grow = [&](unsigned long v) { vertices = std::max<std::size_t>(vertices, v + 1); };

  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    std::smatch m;
    if (std::regex_match(line, m, basepoint_re)) {
      basepoint = static_cast<VertexId>(std::stoul(m[1]));
    } else if (std::regex_match(line, m, square_re)) {
      squares.push_back(Square{static_cast<VertexId>(std::stoul(m[1])), static_cast<VertexId>(std::stoul(m[2])),
                               static_cast<VertexId>(std::stoul(m[3])), static_cast<VertexId>(std::stoul(m[4])),
                               graph.gen(m[5].str()), graph.gen(m[6].str())});
    } else if (std::regex_match(line, m, node_re)) {
      grow(std::stoul(m[1]));
    } else if (std::regex_match(line, m, edge_re)) {
      const auto s = std::stoul(m[1]), t = std::stoul(m[2]);
      grow(s);
      grow(t);
      edges.push_back(Edge{static_cast<VertexId>(s), static_cast<VertexId>(t), graph.gen(m[3].str())});
    } else if (!std::regex_match(line, skip_re)) {
      throw InputError("dot:" + std::to_string(number) + ": unrecognized line '" + line + "'");
    }
  }
  LabeledCubeComplex complex;
  for (std::size_t v = 0; v < vertices; ++v) complex.add_vertex();
  complex.set_basepoint(basepoint);
  for (const Edge& e : edges) complex.add_edge(e.source, e.target, e.label);
  for (const Square& s : squares) complex.add_square(s);
  return complex;
}

}  // namespace raag
