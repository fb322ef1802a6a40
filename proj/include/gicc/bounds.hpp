#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gicc/cover.hpp"
#include "gicc/digraph.hpp"
#include "gicc/gic_structure.hpp"

namespace gicc {

inline constexpr std::size_t kMaisVertexLimit = 30;
inline constexpr std::size_t kMinrankArcLimit = 24;
inline constexpr std::size_t kCase2VertexLimit = 12;

/// Order of a maximum acyclic induced sub-digraph: N minus a minimum feedback
/// vertex set found by branching on the vertices of a shortest cycle.
/// Throws SizeGateError above `max_vertices`.
std::size_t mais(const Digraph& d, std::size_t max_vertices = kMaisVertexLimit);

/// Vertices kept by one maximum acyclic induced sub-digraph.
VertexSet mais_witness(const Digraph& d,
                       std::size_t max_vertices = kMaisVertexLimit);

/// Minimum GF(2) rank over matrices with unit diagonal whose off-diagonal
/// support is confined to the arcs. Throws SizeGateError above `max_arcs`.
std::size_t minrank_gf2(const Digraph& d, std::size_t max_arcs = kMinrankArcLimit);

/// Rank over GF(2) of rows packed as bitmasks.
std::size_t gf2_rank(std::vector<std::uint64_t> rows);

enum class Optimality { Case1, Case2, Unknown };

const char* to_string(Optimality o);

/// Decomposition backing a Case 2 verdict.
struct Case2Witness {
  std::vector<Path> cycles;            ///< disjoint cycles among non-inner vertices
  std::vector<CoverPart> parts;        ///< case-1 GICs splitting the inner set
  VertexSet removed;                   ///< K - 1 vertices whose removal leaves D acyclic
};

/// Case 1 when the non-inner vertices induce an acyclic sub-digraph; Case 2
/// when an exhaustive search (N <= max_vertices) finds M >= 1 disjoint
/// non-inner cycles and an (M + 1)-way split of the inner set into disjoint
/// case-1 GICs, all mutually disjoint, along with a matching removal set.
Optimality classify_optimality(const Digraph& d, const VertexSet& inner,
                               Case2Witness* witness = nullptr,
                               std::size_t max_vertices = kCase2VertexLimit);

Optimality certify_theorem4(const GicStructure& g);

/// mais(d) <= every reported length.
bool sandwich_check(const Digraph& d,
                    const std::map<std::string, double>& lengths);

struct BoundsReport {
  std::size_t mais = 0;
  std::optional<std::size_t> minrank;
  std::map<std::string, double> scheme_lengths;
  bool sandwich_ok = false;
  Optimality optimality = Optimality::Unknown;
};

struct BoundsOptions {
  bool with_minrank = false;
  /// Inner set to certify; when absent, a single-part cover covering every
  /// vertex is certified instead.
  std::optional<VertexSet> inner;
  CoverOptions cover;
};

/// Scheme lengths for GICC, cycle cover and clique cover plus the MAIS row.
BoundsReport compute_bounds(const Digraph& d, const BoundsOptions& options = {});

/// Values reported for the six-vertex comparison instance by schemes this
/// library does not implement; documentation only.
struct PublishedComparison {
  static constexpr double composite_coding = 3.5;
  static constexpr double local_chromatic = 4.0;
  static constexpr double fractional_partial_clique = 4.0;
  static constexpr double interlinked_cycle_cover = 4.0;
};

struct ConjectureFinding {
  Digraph graph;
  VertexSet inner;
  std::size_t mais = 0;
  std::size_t gicc_length = 0;
};

struct ConjectureSweepResult {
  std::size_t digraphs = 0;
  std::size_t structures = 0;  ///< validated (digraph, inner) pairs
  std::vector<ConjectureFinding> findings;
};

/// Every digraph on up to `max_exhaustive_n` vertices and every inner set of
/// size >= 2, plus `random_trials` seeded digraphs on up to `max_random_n`
/// vertices: reports validated GICs with mais < N - K + 1.
ConjectureSweepResult conjecture_sweep(std::size_t max_exhaustive_n,
                                       std::size_t random_trials,
                                       std::size_t max_random_n,
                                       std::uint64_t seed);

}  // namespace gicc
