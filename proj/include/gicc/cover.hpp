#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gicc/codec.hpp"
#include "gicc/digraph.hpp"
#include "gicc/generators.hpp"
#include "gicc/gic_structure.hpp"

namespace gicc {

/// An exact routine was asked to run beyond its size limit.
class SizeGateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One GIC part of a cover. `gic` lives on the induced sub-digraph with local
/// labels; `to_parent` maps them back.
struct CoverPart {
  VertexSet vertices;
  VertexSet inner;
  GicStructure gic;
  std::vector<Vertex> to_parent;

  std::size_t k() const { return inner.size(); }
  std::size_t length() const { return vertices.size() - inner.size() + 1; }
};

struct CoverPlan {
  std::size_t vertex_count = 0;
  std::vector<CoverPart> parts;
  VertexSet uncoded;
  bool exact = false;

  std::size_t psi() const { return parts.size(); }
  /// N - sum over parts of (K_i - 1).
  std::size_t length() const;
};

/// Sum over parts of (K_i - 1); equals N - length().
std::size_t savings(const CoverPlan& plan);

struct CoverOptions {
  enum class Mode { Auto, Exact, Heuristic };
  Mode mode = Mode::Auto;
  /// Randomized greedy restarts in heuristic mode.
  std::size_t budget = 32;
  std::uint64_t seed = 0;
  /// Largest N handled by exhaustive part search (Auto switches here).
  std::size_t exact_limit = 10;
  /// Largest N for the exact cycle/clique baselines.
  std::size_t baseline_exact_limit = 12;
};

/// Disjoint GIC parts plus uncoded remainder. Deterministic for a given
/// (d, options). Exact mode maximises savings, then prefers fewer parts.
CoverPlan gicc_cover(const Digraph& d, const CoverOptions& options = {});

/// Builds a part from `vertices` with the given inner set, or nullopt when the
/// induced sub-digraph is not a GIC around it.
std::optional<CoverPart> make_part(const Digraph& d, const VertexSet& vertices,
                                   const VertexSet& inner);

/// Checks disjointness, coverage, and per-part validity.
bool is_valid_plan(const Digraph& d, const CoverPlan& plan);

struct PlanCode {
  std::vector<IndexCode> part_codes;  ///< masks in parent labels
  std::vector<std::pair<Vertex, BitString>> uncoded;

  std::size_t length() const;
};

PlanCode encode_plan(const CoverPlan& plan, const MessageVector& m);

/// Every receiver decodes from the plan's code using only its own side
/// information.
bool plan_round_trip(const Digraph& d, const CoverPlan& plan,
                     const MessageVector& m);

/// Assembles the interlinked-cycle digraph; the inner set is the last vertex
/// of every path.
Instance icc_to_gic(const IccDescription& desc);

struct CyclePacking {
  std::vector<Path> cycles;
  bool exact = false;
};

/// Vertex-disjoint cycles: exact maximum count when N <= exact_limit,
/// shortest-cycle-first greedy otherwise. Returned cycles are chordless.
CyclePacking pack_disjoint_cycles(const Digraph& d,
                                  std::size_t exact_limit = 12);
std::size_t cycle_cover_length(const Digraph& d, std::size_t exact_limit = 12);

struct CliquePartition {
  std::vector<VertexSet> cliques;
  bool exact = false;
};

/// Partition into bidirectionally complete sets: minimum when
/// N <= exact_limit, greedy otherwise.
CliquePartition partition_cliques(const Digraph& d,
                                  std::size_t exact_limit = 12);
std::size_t clique_cover_length(const Digraph& d, std::size_t exact_limit = 12);

}  // namespace gicc
