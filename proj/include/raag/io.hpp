#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "raag/certify.hpp"
#include "raag/core.hpp"
#include "raag/cube_complex.hpp"
#include "raag/graph.hpp"
#include "raag/surface_model.hpp"

namespace raag {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses JSON text; syntax errors become InputError with "origin:line:col".
Json parse_json(std::string_view text, const std::string& origin);
/// Reads and parses a file. Throws InputError if it cannot be read.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

/// {"vertices": [labels], "edges": [[u, v], ...]}
DefiningGraph graph_from_json(const Json& j);
Json graph_to_json(const DefiningGraph& graph);

/// {"graph": {...}, "minimal_filling_sets": [[labels], ...], "admissible": bool}
SurfaceModel model_from_json(const Json& j);
Json model_to_json(const SurfaceModel& model);

/// Either ["word", ...] or {"generators": ["word", ...]}.
std::vector<Word> generators_from_json(const Json& j, const DefiningGraph& graph);

Json complex_to_json(const LabeledCubeComplex& complex, const DefiningGraph& graph);
LabeledCubeComplex complex_from_json(const Json& j, const DefiningGraph& graph);

/// Includes the graph, status and diagnostics alongside the complex.
Json core_to_json(const SubgroupCore& core);
SubgroupCore core_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);

/// DOT digraph with one arrow per oriented edge labeled by its generator.
/// The basepoint and the squares are recorded in comments, which
/// import_dot reads back.
std::string export_dot(const LabeledCubeComplex& complex, const DefiningGraph& graph);
LabeledCubeComplex import_dot(std::string_view text, const DefiningGraph& graph);

}  // namespace raag
