#pragma once

#include <cstdint>

namespace csep {

enum class RamseyMode { tight, paper };
enum class RamseyProvenance { exact_table, paper_bound };

/// An integer V such that every 2-coloring of the edges of K_V has a monochromatic K_q.
struct RamseyValue {
  int q = 0;
  std::uint64_t value = 0;
  RamseyProvenance provenance = RamseyProvenance::paper_bound;
};

/// Largest q for which 2^{2q} fits in 64 bits.
inline constexpr int kMaxRamseyQ = 31;

/**
 * Ramsey value used to size S2 in the triple family. RamseyMode::paper is the
 * 2^{2q} bound; tight mode uses the exact diagonal values for q <= 4
 * (1, 2, 6, 18) and falls back to the bound above that.
 */
RamseyValue ramsey_upper(int q, RamseyMode mode = RamseyMode::tight);

/// Largest r whose edge set is small enough to enumerate all colorings.
inline constexpr int kMaxRamseyColoringEdges = 28;

/**
 * Exhaustively checks that every 2-coloring of the edges of K_r contains a
 * monochromatic K_q. Throws ResourceError if K_r has more than 28 edges.
 */
bool verify_ramsey_property(int r, int q);

}  // namespace csep
