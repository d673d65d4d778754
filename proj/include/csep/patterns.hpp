#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csep/graph.hpp"

namespace csep {

enum class IntraRule { clique, stable, unrestricted };
enum class InterRule { complete, anticomplete, matched };

struct PatternBlock {
  std::string name;
  int size = 0;
  IntraRule rule = IntraRule::stable;
};

struct BlockRule {
  std::string a;
  std::string b;
  InterRule rule = InterRule::anticomplete;
};

/// Required host relation between two pattern vertices.
enum class PairConstraint { edge, non_edge, any };

/// A realized pattern with its vertices grouped by block.
struct PatternGraph {
  Graph graph;
  std::vector<std::pair<std::string, VertexSet>> blocks;

  const VertexSet& block(std::string_view name) const;
};

/**
 * Block-structured pattern: named vertex blocks with an intra-block rule and
 * one inter-block rule per block pair. Pattern vertices are numbered block by
 * block in declaration order; "matched" pairs the i-th vertex of one block
 * with the i-th vertex of the other.
 */
class PatternSpec {
 public:
  PatternSpec(std::vector<PatternBlock> blocks, std::vector<BlockRule> rules);

  const std::vector<PatternBlock>& blocks() const { return blocks_; }
  int block_index(std::string_view name) const;
  InterRule rule(int a, int b) const { return rules_[static_cast<std::size_t>(a * block_count() + b)]; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int vertex_count() const { return static_cast<int>(vertex_block_.size()); }

  int block_of(int pattern_vertex) const { return vertex_block_[static_cast<std::size_t>(pattern_vertex)]; }
  int offset(int block) const { return offsets_[static_cast<std::size_t>(block)]; }

  PairConstraint constraint(int u, int v) const;

  /// Pattern graph with every unrestricted block left stable.
  PatternGraph realize() const;
  /// Pattern-vertex pairs whose adjacency is unrestricted.
  std::vector<Edge> free_pairs() const;

 private:
  std::vector<PatternBlock> blocks_;
  std::vector<InterRule> rules_;
  std::vector<int> offsets_;
  std::vector<int> vertex_block_;
};

/// Host vertices realizing each block, in the block's pattern order.
struct Embedding {
  std::vector<std::pair<std::string, std::vector<int>>> blocks;

  const std::vector<int>& block(std::string_view name) const;
  /// Host vertex per pattern vertex.
  std::vector<int> assignment() const;
  VertexSet image(int host_order) const;
};

PatternSpec fs_spec(int p, int q);
PatternSpec fk_spec(int p, int q);
/// F_{a,b}: the W block carries no adjacency restriction.
PatternSpec fab_spec(int a, int b);

PatternGraph build_fs(int p, int q);
PatternGraph build_fk(int p, int q);

/// First induced embedding of the pattern in deterministic search order, if any.
std::optional<Embedding> contains_induced(const Graph& g, const PatternSpec& spec);

struct ClassCheck {
  bool member = true;
  std::optional<Embedding> fs_hit;
  std::optional<Embedding> fk_hit;
};

/// Membership in the class of graphs that are both F_S^{p,q}-free and F_K^{p,q}-free.
ClassCheck check_class(const Graph& g, int p, int q);
bool is_in_class(const Graph& g, int p, int q);

std::optional<Embedding> contains_fab(const Graph& g, int a, int b);

}  // namespace csep
