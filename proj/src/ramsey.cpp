#include "csep/ramsey.hpp"

#include <array>
#include <string>
#include <vector>

#include "csep/errors.hpp"

namespace csep {

namespace {

// R(1,1)..R(4,4).
constexpr std::array<std::uint64_t, 4> kExactDiagonal{1, 2, 6, 18};

// Bit index of edge {u, v} (u < v) in the lexicographic edge order of K_r.
int edge_bit(int r, int u, int v) { return u * r - u * (u + 1) / 2 + (v - u - 1); }

void collect_cliques(int r, int q, int start, std::vector<int>& chosen, std::vector<std::uint32_t>& out) {
  if (static_cast<int>(chosen.size()) == q) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j) mask |= std::uint32_t{1} << edge_bit(r, chosen[i], chosen[j]);
    out.push_back(mask);
    return;
  }
  for (int v = start; v < r; ++v) {
    chosen.push_back(v);
    collect_cliques(r, q, v + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

RamseyValue ramsey_upper(int q, RamseyMode mode) {
  if (q < 1) throw InputError("Ramsey parameter q must be >= 1 (got " + std::to_string(q) + ")");
  if (mode == RamseyMode::tight && q <= static_cast<int>(kExactDiagonal.size()))
    return {q, kExactDiagonal[static_cast<std::size_t>(q - 1)], RamseyProvenance::exact_table};
  if (q > kMaxRamseyQ)
    throw ResourceError("2^(2q) does not fit in 64 bits for q=" + std::to_string(q));
  return {q, std::uint64_t{1} << (2 * q), RamseyProvenance::paper_bound};
}

bool verify_ramsey_property(int r, int q) {
  if (r < 0) throw InputError("r must be non-negative");
  if (q < 1) throw InputError("q must be >= 1");
  const int edges = r * (r - 1) / 2;
  if (edges > kMaxRamseyColoringEdges)
    throw ResourceError("K_" + std::to_string(r) + " has " + std::to_string(edges) + " edges; enumeration limit is " +
                        std::to_string(kMaxRamseyColoringEdges));
  if (q > r) return false;

  std::vector<std::uint32_t> cliques;
  std::vector<int> chosen;
  collect_cliques(r, q, 0, chosen, cliques);

  const std::uint64_t colorings = std::uint64_t{1} << edges;
  for (std::uint64_t c = 0; c < colorings; ++c) {
    const auto coloring = static_cast<std::uint32_t>(c);
    bool monochromatic = false;
    for (auto mask : cliques) {
      const auto red = coloring & mask;
      if (red == mask || red == 0) {
        monochromatic = true;
        break;
      }
    }
    if (!monochromatic) return false;
  }
  return true;
}

}  // namespace csep
