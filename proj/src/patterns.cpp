#include "csep/patterns.hpp"

#include <algorithm>
#include <numeric>

#include "csep/errors.hpp"

namespace csep {

const VertexSet& PatternGraph::block(std::string_view name) const {
  for (const auto& [block_name, members] : blocks)
    if (block_name == name) return members;
  throw InputError("pattern has no block named " + std::string(name));
}

PatternSpec::PatternSpec(std::vector<PatternBlock> blocks, std::vector<BlockRule> rules)
    : blocks_(std::move(blocks)) {
  const int count = block_count();
  for (int i = 0; i < count; ++i) {
    const auto& b = blocks_[static_cast<std::size_t>(i)];
    if (b.size < 0) throw InputError("block " + b.name + " has negative size");
    for (int j = 0; j < i; ++j)
      if (blocks_[static_cast<std::size_t>(j)].name == b.name) throw InputError("duplicate block name " + b.name);
    offsets_.push_back(vertex_count());
    vertex_block_.insert(vertex_block_.end(), static_cast<std::size_t>(b.size), i);
  }

  rules_.assign(static_cast<std::size_t>(count * count), InterRule::anticomplete);
  std::vector<bool> seen(static_cast<std::size_t>(count * count), false);
  for (const auto& r : rules) {
    const int a = block_index(r.a);
    const int b = block_index(r.b);
    if (a == b) throw InputError("inter-block rule names block " + r.a + " twice");
    const auto ab = static_cast<std::size_t>(a * count + b);
    const auto ba = static_cast<std::size_t>(b * count + a);
    if (seen[ab]) throw InputError("blocks " + r.a + " and " + r.b + " have more than one rule");
    if (r.rule == InterRule::matched && blocks_[static_cast<std::size_t>(a)].size != blocks_[static_cast<std::size_t>(b)].size)
      throw InputError("matched blocks " + r.a + " and " + r.b + " differ in size");
    seen[ab] = seen[ba] = true;
    rules_[ab] = rules_[ba] = r.rule;
  }
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if (!seen[static_cast<std::size_t>(a * count + b)])
        throw InputError("no rule between blocks " + blocks_[static_cast<std::size_t>(a)].name + " and " +
                         blocks_[static_cast<std::size_t>(b)].name);
}

int PatternSpec::block_index(std::string_view name) const {
  for (int i = 0; i < block_count(); ++i)
    if (blocks_[static_cast<std::size_t>(i)].name == name) return i;
  throw InputError("pattern has no block named " + std::string(name));
}

PairConstraint PatternSpec::constraint(int u, int v) const {
  const int bu = block_of(u);
  const int bv = block_of(v);
  if (bu == bv) {
    switch (blocks_[static_cast<std::size_t>(bu)].rule) {
      case IntraRule::clique: return PairConstraint::edge;
      case IntraRule::stable: return PairConstraint::non_edge;
      case IntraRule::unrestricted: return PairConstraint::any;
    }
  }
  switch (rule(bu, bv)) {
    case InterRule::complete: return PairConstraint::edge;
    case InterRule::anticomplete: return PairConstraint::non_edge;
    case InterRule::matched: return (u - offset(bu) == v - offset(bv)) ? PairConstraint::edge : PairConstraint::non_edge;
  }
  return PairConstraint::any;
}

PatternGraph PatternSpec::realize() const {
  std::vector<Edge> edges;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u + 1; v < vertex_count(); ++v)
      if (constraint(u, v) == PairConstraint::edge) edges.emplace_back(u, v);
  PatternGraph out{Graph(vertex_count(), edges), {}};
  for (int b = 0; b < block_count(); ++b) {
    VertexSet members(vertex_count());
    for (int i = 0; i < blocks_[static_cast<std::size_t>(b)].size; ++i) members.insert(offset(b) + i);
    out.blocks.emplace_back(blocks_[static_cast<std::size_t>(b)].name, std::move(members));
  }
  return out;
}

std::vector<Edge> PatternSpec::free_pairs() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u + 1; v < vertex_count(); ++v)
      if (constraint(u, v) == PairConstraint::any) out.emplace_back(u, v);
  return out;
}

const std::vector<int>& Embedding::block(std::string_view name) const {
  for (const auto& [block_name, hosts] : blocks)
    if (block_name == name) return hosts;
  throw InputError("embedding has no block named " + std::string(name));
}

std::vector<int> Embedding::assignment() const {
  std::vector<int> out;
  for (const auto& [name, hosts] : blocks) out.insert(out.end(), hosts.begin(), hosts.end());
  return out;
}

VertexSet Embedding::image(int host_order) const {
  auto hosts = assignment();
  return VertexSet(host_order, hosts);
}

namespace {

std::vector<BlockRule> four_block_rules(const std::string& k, const std::string& s1, const std::string& s2,
                                        const std::string& s3) {
  return {
      {k, s1, InterRule::matched},      {k, s2, InterRule::complete},      {k, s3, InterRule::anticomplete},
      {s1, s2, InterRule::anticomplete}, {s1, s3, InterRule::anticomplete}, {s2, s3, InterRule::matched},
  };
}

void require_pattern_params(int p, int q) {
  if (p < 1 || q < 1)
    throw InputError("pattern parameters must satisfy p >= 1 and q >= 1 (got p=" + std::to_string(p) +
                     ", q=" + std::to_string(q) + ")");
}

// Backtracking over pattern vertices in block order. Candidate sets are the
// intersection of the host rows demanded by every already-placed vertex.
class InducedSearch {
 public:
  InducedSearch(const Graph& host, const PatternSpec& spec) : host_(host), spec_(spec), k_(spec.vertex_count()) {
    constraints_.resize(static_cast<std::size_t>(k_ * k_), PairConstraint::any);
    for (int u = 0; u < k_; ++u)
      for (int v = 0; v < k_; ++v)
        if (u != v) constraints_[static_cast<std::size_t>(u * k_ + v)] = spec.constraint(u, v);

    for (int v = 0; v < host.order(); ++v) {
      VertexSet row = host.neighbors(v).complement();
      row.erase(v);
      non_neighbors_.push_back(std::move(row));
    }

    // Permuting block indices simultaneously across a component of the
    // "matched" relation is an automorphism, so the first block of each
    // component may be taken in ascending host order.
    const int blocks = spec.block_count();
    std::vector<int> root(static_cast<std::size_t>(blocks));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int b) {
      while (root[static_cast<std::size_t>(b)] != b) b = root[static_cast<std::size_t>(b)];
      return b;
    };
    for (int a = 0; a < blocks; ++a)
      for (int b = a + 1; b < blocks; ++b)
        if (spec.rule(a, b) == InterRule::matched) {
          const int ra = find(a);
          const int rb = find(b);
          if (ra != rb) root[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
        }
    ascending_.assign(static_cast<std::size_t>(k_), false);
    for (int v = 0; v < k_; ++v) {
      const int b = spec.block_of(v);
      ascending_[static_cast<std::size_t>(v)] = find(b) == b && v > spec.offset(b);
    }
    assigned_.assign(static_cast<std::size_t>(k_), -1);
  }

  std::optional<Embedding> run() {
    if (k_ > host_.order()) return std::nullopt;
    VertexSet used(host_.order());
    if (!extend(0, used)) return std::nullopt;
    Embedding out;
    for (int b = 0; b < spec_.block_count(); ++b) {
      const auto& block = spec_.blocks()[static_cast<std::size_t>(b)];
      auto first = assigned_.begin() + spec_.offset(b);
      out.blocks.emplace_back(block.name, std::vector<int>(first, first + block.size));
    }
    return out;
  }

 private:
  bool extend(int depth, VertexSet& used) {
    if (depth == k_) return true;
    VertexSet candidates = host_.vertices() - used;
    for (int j = 0; j < depth; ++j) {
      const int placed = assigned_[static_cast<std::size_t>(j)];
      switch (constraints_[static_cast<std::size_t>(j * k_ + depth)]) {
        case PairConstraint::edge: candidates &= host_.neighbors(placed); break;
        case PairConstraint::non_edge: candidates &= non_neighbors_[static_cast<std::size_t>(placed)]; break;
        case PairConstraint::any: break;
      }
    }
    const int start = ascending_[static_cast<std::size_t>(depth)] ? assigned_[static_cast<std::size_t>(depth - 1)] : -1;
    for (int v = candidates.next(start); v != -1; v = candidates.next(v)) {
      assigned_[static_cast<std::size_t>(depth)] = v;
      used.insert(v);
      if (extend(depth + 1, used)) return true;
      used.erase(v);
    }
    return false;
  }

  const Graph& host_;
  const PatternSpec& spec_;
  int k_;
  std::vector<PairConstraint> constraints_;
  std::vector<VertexSet> non_neighbors_;
  std::vector<bool> ascending_;
  std::vector<int> assigned_;
};

}  // namespace

PatternSpec fs_spec(int p, int q) {
  require_pattern_params(p, q);
  return PatternSpec({{"K", p, IntraRule::clique},
                      {"S1", p, IntraRule::stable},
                      {"S2", q, IntraRule::stable},
                      {"S3", q, IntraRule::stable}},
                     four_block_rules("K", "S1", "S2", "S3"));
}

PatternSpec fk_spec(int p, int q) {
  require_pattern_params(p, q);
  return PatternSpec({{"K", p, IntraRule::clique},
                      {"S1", p, IntraRule::stable},
                      {"S2", q, IntraRule::stable},
                      {"S3", q, IntraRule::clique}},
                     four_block_rules("K", "S1", "S2", "S3"));
}

PatternSpec fab_spec(int a, int b) {
  if (a < 1 || b < 0)
    throw InputError("F_{a,b} needs a >= 1 and b >= 0 (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  return PatternSpec({{"K1", a, IntraRule::clique},
                      {"S1", a, IntraRule::stable},
                      {"S2", b, IntraRule::stable},
                      {"W", b, IntraRule::unrestricted}},
                     four_block_rules("K1", "S1", "S2", "W"));
}

PatternGraph build_fs(int p, int q) { return fs_spec(p, q).realize(); }
PatternGraph build_fk(int p, int q) { return fk_spec(p, q).realize(); }

std::optional<Embedding> contains_induced(const Graph& g, const PatternSpec& spec) {
  return InducedSearch(g, spec).run();
}

ClassCheck check_class(const Graph& g, int p, int q) {
  ClassCheck out;
  out.fs_hit = contains_induced(g, fs_spec(p, q));
  if (!out.fs_hit) out.fk_hit = contains_induced(g, fk_spec(p, q));
  out.member = !out.fs_hit && !out.fk_hit;
  return out;
}

bool is_in_class(const Graph& g, int p, int q) { return check_class(g, p, q).member; }

std::optional<Embedding> contains_fab(const Graph& g, int a, int b) { return contains_induced(g, fab_spec(a, b)); }

}  // namespace csep
