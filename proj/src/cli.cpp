#include "raag/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "raag/certify.hpp"
#include "raag/core.hpp"
#include "raag/errors.hpp"
#include "raag/io.hpp"
#include "raag/normal_form.hpp"
#include "raag/rotation_family.hpp"

namespace raag {
namespace {

struct Settings {
  std::string format;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::string graph_path, model_path, gens_path, core_path, word;
  std::vector<std::string> words;
  std::size_t cell_budget = 200'000;
  std::size_t enum_budget = 20'000'000;
  std::size_t class_budget = 1'000'000;
  std::size_t max_len = 6;
  std::optional<std::uint64_t> shuffle_seed;
  int n = 3, big_n = 1, k_max = 1;
  std::size_t samples = 100;
};

std::string fmt(const Settings& s, const std::string& fallback) { return s.format.empty() ? fallback : s.format; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw InputError("unsupported --format '" + format + "' for this command");
}

std::string rational_text(Rational r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string labels_text(GenSet s, const DefiningGraph& graph) {
  std::string out;
  for (Gen g : s.members()) out += (out.empty() ? "" : " ") + graph.label(g);
  return out;
}

Json labels_json(GenSet s, const DefiningGraph& graph) {
  Json out = Json::array();
  for (Gen g : s.members()) out.push_back(graph.label(g));
  return out;
}

DefiningGraph load_graph(const Settings& s) {
  if (s.graph_path.empty()) throw InputError("--graph is required");
  return graph_from_json(read_json_file(s.graph_path));
}

SubgroupCore load_core(const Settings& s) {
  if (s.core_path.empty()) throw InputError("--core is required");
  if (s.core_path.size() > 4 && s.core_path.ends_with(".dot")) {
    const DefiningGraph graph = load_graph(s);
    SubgroupCore core;
    core.graph = graph;
    core.complex = import_dot(read_text_file(s.core_path), graph);
    core.status = check_local_isometry(core.complex, graph).is_local_isometry() ? CoreStatus::verified_local_isometry
                                                                                : CoreStatus::budget_exceeded;
    return core;
  }
  return core_from_json(read_json_file(s.core_path));
}

int cmd_normalize(const Settings& s, std::ostream& out) {
  const DefiningGraph graph = load_graph(s);
  const Word w = parse_word(s.word, graph);
  const NormalWord nf = normalize(w, graph);
  const std::string format = fmt(s, "text");
  require_format(format, {"text", "json"});
  if (format == "json")
    out << Json{{"schema_version", kSchemaVersion},
                {"input", s.word},
                {"normal_form", format_word(nf, graph)},
                {"syllables", nf.size()},
                {"length", nf.length()}}
               .dump(2)
        << "\n";
  else
    out << format_word(nf, graph) << "\n";
  return kExitOk;
}

int cmd_minclass(const Settings& s, std::ostream& out) {
  const DefiningGraph graph = load_graph(s);
  const auto words = min_class(parse_word(s.word, graph), graph, s.class_budget);
  const std::string format = fmt(s, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    Json list = Json::array();
    for (const auto& w : words) list.push_back(format_word(w, graph));
    out << Json{{"schema_version", kSchemaVersion}, {"size", words.size()}, {"words", list}}.dump(2) << "\n";
  } else {
    for (const auto& w : words) out << format_word(w, graph) << "\n";
  }
  return kExitOk;
}

int cmd_order(const Settings& s, std::ostream& out) {
  const DefiningGraph graph = load_graph(s);
  const NormalWord w = to_syllables(parse_word(s.word, graph));
  if (!is_normal(w, graph)) throw InputError("order: the word is not in normal form; normalize it first");
  const SyllableOrder order = syllable_order(w, graph);
  auto name = [&](std::size_t i) {
    NormalWord single;
    single.syllables.push_back(w.syllables[i]);
    return std::to_string(i) + ":" + format_word(single, graph);
  };
  const std::string format = fmt(s, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    Json syllables = Json::array(), pairs = Json::array();
    for (std::size_t i = 0; i < w.size(); ++i) syllables.push_back(name(i));
    for (auto [i, j] : order.pairs()) pairs.push_back({i, j});
    out << Json{{"schema_version", kSchemaVersion}, {"syllables", syllables}, {"precedes", pairs}}.dump(2) << "\n";
  } else {
    for (auto [i, j] : order.pairs()) out << name(i) << " < " << name(j) << "\n";
  }
  return kExitOk;
}

void print_core(const SubgroupCore& core, const std::string& format, std::ostream& out) {
  require_format(format, {"json", "dot", "text"});
  if (format == "json") {
    out << core_to_json(core).dump(2) << "\n";
  } else if (format == "dot") {
    out << export_dot(core.complex, core.graph);
  } else {
    out << "status " << (core.verified() ? "verified_local_isometry" : "budget_exceeded") << "\n"
        << "vertices " << core.complex.vertex_count() << "\n"
        << "edges " << core.complex.edges().size() << "\n"
        << "squares " << core.complex.squares().size() << "\n"
        << "folds " << core.diagnostics.folds << "\n"
        << "squares_added " << core.diagnostics.squares_added << "\n";
  }
}

int cmd_core_build(const Settings& s, std::ostream& out) {
  const DefiningGraph graph = load_graph(s);
  if (s.gens_path.empty()) throw InputError("--gens is required");
  const auto gens = generators_from_json(read_json_file(s.gens_path), graph);
  if (gens.empty()) throw InputError("no generators given");
  CoreOptions options;
  options.cell_budget = s.cell_budget;
  options.shuffle_seed = s.shuffle_seed;
  const SubgroupCore core = build_core(graph, gens, options);
  print_core(core, fmt(s, "json"), out);
  return core.verified() ? kExitOk : kExitUndecided;
}

int cmd_core_check(const Settings& s, std::ostream& out) {
  const SubgroupCore core = load_core(s);
  const auto report = check_local_isometry(core.complex, core.graph);
  const DefiningGraph& graph = core.graph;
  auto dir = [&](Letter l) { return graph.label(l.gen) + (l.sign > 0 ? "+" : "-"); };
  const std::string format = fmt(s, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    Json foldable = Json::array(), corners = Json::array();
    for (const auto& f : report.foldable) foldable.push_back({{"vertex", f.vertex}, {"direction", dir(f.direction)}});
    for (const auto& c : report.open_corners)
      corners.push_back({{"vertex", c.vertex}, {"directions", {dir(c.first), dir(c.second)}}});
    out << Json{{"schema_version", kSchemaVersion},
                {"local_isometry", report.is_local_isometry()},
                {"foldable", foldable},
                {"open_corners", corners},
                {"malformed", report.malformed}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& m : report.malformed) out << "malformed: " << m << "\n";
    for (const auto& f : report.foldable) out << "foldable pair at " << f.vertex << " direction " << dir(f.direction) << "\n";
    for (const auto& c : report.open_corners)
      out << "open corner at " << c.vertex << " between " << dir(c.first) << " and " << dir(c.second) << "\n";
    out << (report.is_local_isometry() ? "local isometry" : "not a local isometry") << "\n";
  }
  return report.is_local_isometry() ? kExitOk : kExitNegative;
}

int cmd_core_member(const Settings& s, std::ostream& out) {
  const SubgroupCore core = load_core(s);
  const bool member = membership(core, parse_word(s.word, core.graph));
  out << (member ? "true" : "false") << "\n";
  return member ? kExitOk : kExitNegative;
}

int cmd_core_enum(const Settings& s, std::ostream& out) {
  const SubgroupCore core = load_core(s);
  const auto elements = enumerate_elements(core, s.max_len, EnumerationOptions{s.enum_budget, s.threads});
  const std::string format = fmt(s, "text");
  require_format(format, {"text", "json", "csv"});
  if (format == "json") {
    Json list = Json::array();
    for (const auto& e : elements) list.push_back(format_word(e, core.graph));
    out << Json{{"schema_version", kSchemaVersion}, {"max_len", s.max_len}, {"count", elements.size()}, {"elements", list}}
               .dump(2)
        << "\n";
  } else if (format == "csv") {
    out << "word,length\n";
    for (const auto& e : elements) out << format_word(e, core.graph) << "," << e.length() << "\n";
  } else {
    for (const auto& e : elements) out << (e.empty() ? "1" : format_word(e, core.graph)) << "\n";
  }
  return kExitOk;
}

int cmd_certify(const Settings& s, std::ostream& out) {
  if (s.model_path.empty()) throw InputError("--model is required");
  if (s.gens_path.empty()) throw InputError("--gens is required");
  const SurfaceModel model = model_from_json(read_json_file(s.model_path));
  if (!s.graph_path.empty() && !(load_graph(s) == model.graph()))
    throw InputError("the graph in --graph differs from the graph of the model");
  const auto gens = generators_from_json(read_json_file(s.gens_path), model.graph());
  if (gens.empty()) throw InputError("no generators given");
  if (!model.admissible()) throw InputError("the surface model is not declared admissible");
  const Certificate cert = certify(model, gens, CertifyOptions{s.cell_budget, s.enum_budget, s.threads});
  const std::string format = fmt(s, "json");
  require_format(format, {"json", "text"});
  if (format == "json") {
    out << certificate_to_json(cert).dump(2) << "\n";
  } else {
    out << to_string(cert.verdict) << ": " << cert.reason << "\n";
    if (cert.witness)
      out << "witness " << format_word(*cert.witness, model.graph()) << " (cyclic reduction "
          << format_word(*cert.witness_core, model.graph()) << ")\n";
    if (cert.verdict == Verdict::certified)
      out << "ell " << cert.ell << "; d >= |h| * " << rational_text(cert.slope) << (cert.offset < 0 ? " - " : " + ")
          << rational_text(abs(cert.offset)) << "\n";
  }
  switch (cert.verdict) {
    case Verdict::certified: return kExitOk;
    case Verdict::refuted: return kExitNegative;
    case Verdict::inconclusive: return kExitUndecided;
  }
  return kExitUndecided;
}

int cmd_rotation_gen(const Settings& s, std::ostream& out) {
  const RotationFamily fam(s.n, s.big_n);
  const std::string format = fmt(s, "json");
  require_format(format, {"json", "text"});
  if (format == "json") {
    Json gens = Json::array();
    for (const auto& w : fam.generators()) gens.push_back(format_word(w, fam.graph()));
    out << Json{{"schema_version", kSchemaVersion},
                {"n", s.n},
                {"N", s.big_n},
                {"model", model_to_json(fam.model())},
                {"generators", gens}}
               .dump(2)
        << "\n";
  } else {
    for (int i = 1; i <= fam.N(); ++i) out << "w" << i << " = " << format_word(fam.generator(i), fam.graph()) << "\n";
  }
  return kExitOk;
}

int cmd_rotation_constants(const Settings& s, std::ostream& out) {
  const RotationFamily fam(s.n, s.big_n);
  const FamilyConstants c = constants(fam);
  const std::string format = fmt(s, "text");
  require_format(format, {"json", "text", "csv"});
  if (format == "json")
    out << Json{{"schema_version", kSchemaVersion}, {"n", s.n}, {"N", s.big_n}, {"b", c.b}, {"d", c.d},
                {"L", c.L}, {"ell_prime", c.ell_prime}, {"ell", c.ell}}
               .dump(2)
        << "\n";
  else if (format == "csv")
    out << "n,N,b,d,L,ell_prime,ell\n"
        << s.n << "," << s.big_n << "," << c.b << "," << c.d << "," << c.L << "," << c.ell_prime << "," << c.ell << "\n";
  else
    out << "b " << c.b << "\nd " << c.d << "\nL " << c.L << "\nell_prime " << c.ell_prime << "\nell " << c.ell << "\n";
  return kExitOk;
}

int cmd_rotation_star(const Settings& s, std::ostream& out) {
  const RotationFamily fam(s.n, s.big_n);
  const StarReport report = verify_star(fam, s.k_max, s.threads);
  const std::string format = fmt(s, "text");
  require_format(format, {"json", "text"});
  if (format == "json") {
    Json violations = Json::array();
    for (const auto& v : report.violations)
      violations.push_back({{"h", format_hword(v.h)}, {"k", v.k}, {"span", labels_json(v.state.contained_in, fam.graph())}});
    out << Json{{"schema_version", kSchemaVersion}, {"checked", report.checked}, {"all_proper", report.all_proper},
                {"violations", violations}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& v : report.violations)
      out << "violation: " << format_hword(v.h) << " k=" << v.k << " span {" << labels_text(v.state.contained_in, fam.graph())
          << "}\n";
    out << "checked " << report.checked << ", violations " << report.violations.size() << ", all spans proper "
        << (report.all_proper ? "yes" : "no") << "\n";
  }
  return report.violations.empty() && report.all_proper ? kExitOk : kExitNegative;
}

int cmd_rotation_bound(const Settings& s, std::ostream& out) {
  const RotationFamily fam(s.n, s.big_n);
  std::vector<HWord> words;
  for (const auto& w : s.words) words.push_back(parse_hword(w, fam));
  if (words.empty()) words = reduced_hwords(fam, 0, s.max_len);
  const std::string format = fmt(s, "csv");
  require_format(format, {"csv", "json"});
  bool ok = true;
  Json rows = Json::array();
  if (format == "csv") out << "h,|h|_H,m,bound,span-proper\n";
  for (const HWord& h : words) {
    const DisplacementBound d = displacement_upper(h, fam);
    std::size_t length = 0;
    for (const auto& b : d.blocks) length += b.size();
    ok = ok && d.blocks_proper && Rational(d.bound) <= d.linear_bound;
    if (format == "csv")
      out << format_hword(h) << "," << length << "," << d.m << "," << d.bound << "," << (d.blocks_proper ? "true" : "false")
          << "\n";
    else
      rows.push_back({{"h", format_hword(h)}, {"length", length}, {"m", d.m}, {"bound", d.bound},
                      {"linear_bound", rational_text(d.linear_bound)}, {"span_proper", d.blocks_proper},
                      {"split_in_m", d.split_in_m}});
  }
  if (format == "json") out << Json{{"schema_version", kSchemaVersion}, {"rows", rows}}.dump(2) << "\n";
  return ok ? kExitOk : kExitNegative;
}

int cmd_rotation_window(const Settings& s, std::ostream& out) {
  const RotationFamily fam(s.n, s.big_n);
  const auto sample = random_hwords(fam, s.samples, s.max_len, s.seed);
  const OrderWindowReport report = verify_order_window(fam, sample);
  const std::string format = fmt(s, "text");
  require_format(format, {"json", "text"});
  if (format == "json")
    out << Json{{"schema_version", kSchemaVersion}, {"words", report.words}, {"pairs_checked", report.pairs_checked},
                {"violations", report.violations.size()}}
               .dump(2)
        << "\n";
  else
    out << "words " << report.words << ", pairs checked " << report.pairs_checked << ", violations "
        << report.violations.size() << "\n";
  return report.violations.empty() ? kExitOk : kExitNegative;
}

int cmd_export(const Settings& s, std::ostream& out) {
  const SubgroupCore core = load_core(s);
  print_core(core, fmt(s, "dot"), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Normal forms, cube-complex cores and convex cocompactness checks for right-angled Artin subgroups",
               "raag"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  app.add_option("--format", s.format, "Output format: json, csv, dot or text")
      ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--threads", s.threads, "Worker threads (RAAG_THREADS overrides)")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Seed for randomized sweeps");

  std::vector<std::pair<CLI::App*, std::function<int()>>> actions;
  auto action = [&](CLI::App* cmd, int (*fn)(const Settings&, std::ostream&)) {
    actions.emplace_back(cmd, [fn, &s, &out] { return fn(s, out); });
  };
  auto graph_option = [&](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("--graph", s.graph_path, "Graph JSON file");
    if (required) o->required();
  };
  auto word_option = [&](CLI::App* cmd) { cmd->add_option("--word", s.word, "Word, e.g. \"a b^-2 c\"")->required(); };

  auto* normalize_cmd = app.add_subcommand("normalize", "Canonical normal form of a word");
  graph_option(normalize_cmd, true);
  word_option(normalize_cmd);
  action(normalize_cmd, cmd_normalize);

  auto* minclass_cmd = app.add_subcommand("minclass", "All minimal-syllable representatives");
  graph_option(minclass_cmd, true);
  word_option(minclass_cmd);
  minclass_cmd->add_option("--budget", s.class_budget, "Maximum class size")->check(CLI::PositiveNumber);
  action(minclass_cmd, cmd_minclass);

  auto* order_cmd = app.add_subcommand("order", "Syllable partial order of a normal word");
  graph_option(order_cmd, true);
  word_option(order_cmd);
  action(order_cmd, cmd_order);

  auto* core_cmd = app.add_subcommand("core", "Subgroup cores");
  core_cmd->require_subcommand(1);
  auto* build_cmd = core_cmd->add_subcommand("build", "Fold and fill the generator loops");
  graph_option(build_cmd, true);
  build_cmd->add_option("--gens", s.gens_path, "Generators JSON file")->required();
  build_cmd->add_option("--budget,--cell-budget", s.cell_budget, "Cell budget")->check(CLI::PositiveNumber);
  build_cmd->add_option("--shuffle-seed", s.shuffle_seed, "Fill corners in a random order");
  action(build_cmd, cmd_core_build);
  auto* check_cmd = core_cmd->add_subcommand("check", "Check the local isometry conditions");
  check_cmd->add_option("--core", s.core_path, "Core JSON (or DOT with --graph)")->required();
  graph_option(check_cmd, false);
  action(check_cmd, cmd_core_check);
  auto* member_cmd = core_cmd->add_subcommand("member", "Membership of a word in the subgroup");
  member_cmd->add_option("--core", s.core_path, "Core JSON (or DOT with --graph)")->required();
  graph_option(member_cmd, false);
  word_option(member_cmd);
  action(member_cmd, cmd_core_member);
  auto* enum_cmd = core_cmd->add_subcommand("enum", "Subgroup elements up to a length");
  enum_cmd->add_option("--core", s.core_path, "Core JSON (or DOT with --graph)")->required();
  graph_option(enum_cmd, false);
  enum_cmd->add_option("--max-len", s.max_len, "Maximum length");
  enum_cmd->add_option("--budget,--enum-budget", s.enum_budget, "Search-node budget")->check(CLI::PositiveNumber);
  action(enum_cmd, cmd_core_enum);

  auto* certify_cmd = app.add_subcommand("certify", "Certify convex cocompactness");
  graph_option(certify_cmd, false);
  certify_cmd->add_option("--model", s.model_path, "Surface model JSON file")->required();
  certify_cmd->add_option("--gens", s.gens_path, "Generators JSON file")->required();
  certify_cmd->add_option("--cell-budget", s.cell_budget, "Cell budget for the core")->check(CLI::PositiveNumber);
  certify_cmd->add_option("--enum-budget", s.enum_budget, "Search-node budget for enumeration")
      ->check(CLI::PositiveNumber);
  action(certify_cmd, cmd_certify);

  auto* rotation_cmd = app.add_subcommand("section8", "The rotation family with small translation length");
  rotation_cmd->alias("rotation");
  rotation_cmd->require_subcommand(1);
  auto family_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", s.n, "Rotation order n >= 2");
    cmd->add_option("--N", s.big_n, "Number of generators N >= 1");
  };
  auto* gen_cmd = rotation_cmd->add_subcommand("gen", "Graph, model and generators");
  family_options(gen_cmd);
  action(gen_cmd, cmd_rotation_gen);
  auto* constants_cmd = rotation_cmd->add_subcommand("constants", "The constants b, d, L, ell', ell");
  family_options(constants_cmd);
  action(constants_cmd, cmd_rotation_constants);
  auto* star_cmd = rotation_cmd->add_subcommand("verify-star", "Check span containment for short subgroup words");
  family_options(star_cmd);
  star_cmd->add_option("--kmax", s.k_max, "Largest word length")->required();
  action(star_cmd, cmd_rotation_star);
  auto* bound_cmd = rotation_cmd->add_subcommand("bound", "Displacement upper bounds");
  family_options(bound_cmd);
  bound_cmd->add_option("--word", s.words, "Word over w1..wN, e.g. \"w1 w2^-1\" (repeatable)");
  bound_cmd->add_option("--max-len", s.max_len, "Without --word: all reduced words up to this length");
  action(bound_cmd, cmd_rotation_bound);
  auto* window_cmd = rotation_cmd->add_subcommand("order-window", "Check ordering of far-apart syllables");
  family_options(window_cmd);
  window_cmd->add_option("--samples", s.samples, "Number of random words");
  window_cmd->add_option("--max-len", s.max_len, "Maximum word length");
  action(window_cmd, cmd_rotation_window);

  auto* export_cmd = app.add_subcommand("export", "Re-emit a core as DOT or JSON");
  export_cmd->add_option("--core", s.core_path, "Core JSON (or DOT with --graph)")->required();
  graph_option(export_cmd, false);
  action(export_cmd, cmd_export);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  if (const char* env = std::getenv("RAAG_THREADS")) {
    try {
      s.threads = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
      err << "error: RAAG_THREADS must be a positive integer\n";
      return kExitInputError;
    }
  }

  try {
    for (auto& [cmd, fn] : actions)
      if (cmd->parsed()) return fn();
    err << "error: no command given\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "inconclusive: " << e.what() << " (" << e.partial() << " produced)\n";
    return kExitUndecided;
  }
}

}  // namespace raag
