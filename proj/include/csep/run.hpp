#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csep/graph_io.hpp"
#include "csep/separators.hpp"
#include "csep/testbed.hpp"

namespace csep {

enum class Command { check_free, family, witness, verify, ramsey_check, gen };

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResource = 3;

struct RunConfig {
  Command command = Command::check_free;

  std::string graph_path;
  GraphFormat format = GraphFormat::edgelist;
  /// verify: JSON manifest of generator entries instead of a graph file.
  std::string manifest_path;

  int p = 2;
  int q = 2;
  FamilyOptions family;
  int max_vertices = kDefaultEnumerationLimit;
  int workers = 1;

  // witness
  std::string clique;
  std::string stable;

  // ramsey-check
  int ramsey_r = 0;
  int ramsey_q = 0;

  // gen
  int n = 10;
  double edge_prob = 0.5;
  std::uint64_t seed = 1;
  int max_tries = 100;
  bool in_class = false;
  bool triangle_free = false;
  /// gen: where to write the graph. Empty means inline in the report only.
  std::string output;
};

struct RunResult {
  int exit_code = kExitOk;
  /// Pretty-printed JSON report, newline-terminated.
  std::string report;
};

/// Executes one command. Never throws: errors map to exit codes 2 and 3.
RunResult run(const RunConfig& config);

/// "0,3,5" -> {0, 3, 5}. Empty string -> {}.
std::vector<int> parse_vertex_list(std::string_view text);

}  // namespace csep
