#include "csep/run.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "csep/errors.hpp"
#include "csep/patterns.hpp"
#include "csep/ramsey.hpp"
#include "csep/report.hpp"
#include "csep/witness.hpp"

namespace csep {

namespace {

const char* command_name(Command command) {
  switch (command) {
    case Command::check_free: return "check-free";
    case Command::family: return "family";
    case Command::witness: return "witness";
    case Command::verify: return "verify";
    case Command::ramsey_check: return "ramsey-check";
    case Command::gen: return "gen";
  }
  return "unknown";
}

void require_positive(const RunConfig& config) {
  if (config.p < 1 || config.q < 1) throw InputError("p and q must be >= 1");
  if (config.family.budget == 0) throw InputError("budget must be positive");
  if (config.max_vertices < 1) throw InputError("enumeration limit must be positive");
  if (config.workers < 1) throw InputError("worker count must be positive");
}

Graph load_graph(const RunConfig& config) {
  if (config.graph_path.empty()) throw InputError("no input graph given");
  return parse_graph(config.graph_path, config.format);
}

Json graph_summary(const Graph& g) { return Json{{"n", g.order()}, {"m", g.edge_count()}}; }

int check_free(const RunConfig& config, Json& result) {
  require_positive(config);
  const Graph g = load_graph(config);
  const auto check = check_class(g, config.p, config.q);
  result["graph"] = graph_summary(g);
  result["in_class"] = check.member;
  if (check.fs_hit) {
    result["pattern"] = "F_S";
    result["embedding"] = to_json(*check.fs_hit);
  } else if (check.fk_hit) {
    result["pattern"] = "F_K";
    result["embedding"] = to_json(*check.fk_hit);
  }
  return check.member ? kExitOk : kExitPropertyFails;
}

int family(const RunConfig& config, Json& result) {
  require_positive(config);
  const Graph g = load_graph(config);
  const auto fam = full_family(g, config.p, config.q, config.family);
  result["graph"] = graph_summary(g);
  result["family"] = to_json(fam);
  return kExitOk;
}

int witness(const RunConfig& config, Json& result) {
  require_positive(config);
  const Graph g = load_graph(config);
  const auto k_list = parse_vertex_list(config.clique);
  const auto s_list = parse_vertex_list(config.stable);
  const VertexSet k(g.order(), k_list);
  const VertexSet s(g.order(), s_list);
  const auto report = find_separator(g, config.p, config.q, k, s, WitnessOptions{config.family.ramsey, std::nullopt});
  const auto fam = full_family(g, config.p, config.q, config.family);
  const bool separates = report.partition.separates(k, s);
  const bool in_family = fam.contains(report.partition.x_side());
  result["graph"] = graph_summary(g);
  result["K"] = to_json(k);
  result["S"] = to_json(s);
  result["witness"] = to_json(report);
  result["separates"] = separates;
  result["in_family"] = in_family;
  return separates && in_family ? kExitOk : kExitPropertyFails;
}

Json verify_one(const Graph& g, int p, int q, const RunConfig& config, bool& ok) {
  const auto check = check_class(g, p, q);
  const auto fam = full_family(g, p, q, config.family);
  CoverageOptions options;
  options.known_membership = check.member;
  options.workers = config.workers;
  options.max_vertices = config.max_vertices;
  const auto report = verify_family_covers(g, fam, options);
  ok = ok && report.uncovered.empty() && report.witness_agreements == report.witness_runs;
  return to_json(report);
}

int verify(const RunConfig& config, Json& result) {
  require_positive(config);
  bool ok = true;
  if (config.manifest_path.empty()) {
    const Graph g = load_graph(config);
    result["graph"] = graph_summary(g);
    result["coverage"] = verify_one(g, config.p, config.q, config, ok);
    return ok ? kExitOk : kExitPropertyFails;
  }

  std::ifstream in(config.manifest_path);
  if (!in) throw InputError("cannot open manifest " + config.manifest_path);
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!manifest.contains("entries") || !manifest["entries"].is_array())
    throw InputError("manifest needs an 'entries' array");

  Json runs = Json::array();
  for (const auto& entry : manifest["entries"]) {
    try {
      const int n = entry.at("n").get<int>();
      const double prob = entry.at("edge_prob").get<double>();
      const auto seed = entry.at("seed").get<std::uint64_t>();
      const int p = entry.value("p", config.p);
      const int q = entry.value("q", config.q);
      const int tries = entry.value("max_tries", config.max_tries);
      Json run_json = {{"n", n}, {"edge_prob", prob}, {"seed", seed}, {"p", p}, {"q", q}, {"max_tries", tries}};
      if (auto g = gen_in_class(n, prob, p, q, seed, tries)) {
        run_json["graph"] = graph_summary(*g);
        run_json["coverage"] = verify_one(*g, p, q, config, ok);
      } else {
        run_json["skipped"] = "no class member within max_tries";
      }
      runs.push_back(std::move(run_json));
    } catch (const Json::exception& e) {
      throw InputError(std::string("bad manifest entry: ") + e.what());
    }
  }
  result["manifest"] = config.manifest_path;
  result["runs"] = runs;
  return ok ? kExitOk : kExitPropertyFails;
}

int ramsey_check(const RunConfig& config, Json& result) {
  const bool holds = verify_ramsey_property(config.ramsey_r, config.ramsey_q);
  result["r"] = config.ramsey_r;
  result["q"] = config.ramsey_q;
  result["colorings"] = std::uint64_t{1} << (config.ramsey_r * (config.ramsey_r - 1) / 2);
  result["every_coloring_has_monochromatic_clique"] = holds;
  return holds ? kExitOk : kExitPropertyFails;
}

int gen(const RunConfig& config, Json& result) {
  if (config.n < 0) throw InputError("n must be non-negative");
  std::optional<Graph> g;
  if (config.in_class) {
    require_positive(config);
    g = gen_in_class(config.n, config.edge_prob, config.p, config.q, config.seed, config.max_tries);
  } else if (config.triangle_free) {
    g = gen_triangle_free(config.n, config.edge_prob, config.seed);
  } else {
    g = gen_random(config.n, config.edge_prob, config.seed);
  }
  result["n"] = config.n;
  result["edge_prob"] = config.edge_prob;
  result["seed"] = config.seed;
  result["generator"] = config.in_class ? "in-class" : (config.triangle_free ? "triangle-free" : "random");
  if (config.in_class) {
    result["p"] = config.p;
    result["q"] = config.q;
    result["max_tries"] = config.max_tries;
  }
  if (!g) {
    result["found"] = false;
    return kExitPropertyFails;
  }
  result["graph"] = graph_summary(*g);
  result["edges"] = g->edges();
  if (!config.output.empty()) {
    std::ofstream out(config.output);
    if (!out) throw InputError("cannot write " + config.output);
    write_graph(out, *g, config.format);
    result["output"] = config.output;
  }
  return kExitOk;
}

Json params_json(const RunConfig& config) {
  Json params = Json::object();
  switch (config.command) {
    case Command::ramsey_check:
      params["r"] = config.ramsey_r;
      params["q"] = config.ramsey_q;
      return params;
    case Command::gen:
      params["n"] = config.n;
      params["edge_prob"] = config.edge_prob;
      params["seed"] = config.seed;
      break;
    default:
      if (!config.graph_path.empty()) params["graph"] = config.graph_path;
      params["format"] = config.format == GraphFormat::dimacs ? "dimacs" : "edgelist";
      break;
  }
  params["p"] = config.p;
  params["q"] = config.q;
  params["family"] = to_json(config.family);
  return params;
}

}  // namespace

std::vector<int> parse_vertex_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value < 0)
      throw InputError("bad vertex list entry '" + std::string(token) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

RunResult run(const RunConfig& config) {
  Json report = {{"schema", kReportSchema}, {"command", command_name(config.command)}, {"params", params_json(config)}};
  Json result = Json::object();
  int code = kExitOk;
  try {
    switch (config.command) {
      case Command::check_free: code = check_free(config, result); break;
      case Command::family: code = family(config, result); break;
      case Command::witness: code = witness(config, result); break;
      case Command::verify: code = verify(config, result); break;
      case Command::ramsey_check: code = ramsey_check(config, result); break;
      case Command::gen: code = gen(config, result); break;
    }
  } catch (const InputError& e) {
    code = kExitInputError;
    report["error"] = e.what();
  } catch (const ResourceError& e) {
    code = kExitResource;
    report["error"] = e.what();
  } catch (const InvariantError& e) {
    code = kExitPropertyFails;
    report["error"] = e.what();
  }
  static constexpr const char* kStatus[] = {"ok", "property-fails", "input-error", "resource-error"};
  report["status"] = kStatus[code];
  report["exit_code"] = code;
  if (code != kExitInputError && code != kExitResource) report["result"] = std::move(result);
  return {code, report.dump(2) + "\n"};
}

}  // namespace csep
