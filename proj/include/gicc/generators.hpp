#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gicc/digraph.hpp"

namespace gicc {

/// A digraph together with the inner set it was built around.
struct Instance {
  Digraph graph;
  VertexSet inner;
};

/// The class with K inner vertices and 2(K - 1) non-inner ones (N = 3K - 2):
/// inner i in 2..K-1 caches x_{K+i} and x_{3K-i}; K+i caches x_{i+1..K};
/// 3K-i caches x_{1..i-1}; 1 caches x_{K+1}, which caches x_{2..K}; K caches
/// x_{2K}, which caches x_{1..K-1}.
Instance gen_family_vb(std::size_t k);

/// Six-vertex 4-GIC whose code is {1^2^3^4, 5^2^3, 6^3^4}.
Instance gen_fig4a_equivalent();

/// Bidirectional complete digraph on n >= 2 vertices.
Digraph gen_clique(std::size_t n);
/// Directed cycle <1, ..., n, 1>, n >= 2.
Digraph gen_cycle(std::size_t n);

/// Interlinked-cycle description: k disjoint paths P_i and, for each ordered
/// pair (i, j), a connector P_{i,j} running from the last vertex of P_i into
/// P_j at `entry`.
struct IccDescription {
  struct Connector {
    std::vector<Vertex> vertices;  ///< may be empty
    Vertex entry = 0;              ///< vertex of P_j the connector lands on
  };

  std::vector<std::vector<Vertex>> paths;
  std::map<std::pair<std::size_t, std::size_t>, Connector> connectors;

  std::size_t k() const { return paths.size(); }
  std::size_t vertex_count() const;
};

class IccError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Path i and connector (i, j) use 0-based path indices here; vertex labels
/// are shuffled per seed. connector_lengths[i][j] is ignored for i == j.
IccDescription gen_icc(std::size_t k, const std::vector<std::size_t>& path_lengths,
                       const std::vector<std::vector<std::size_t>>& connector_lengths,
                       std::uint64_t seed);

/// Seeded description with path lengths in [1, max_path] and connector
/// lengths in [0, max_connector].
IccDescription gen_icc_random(std::size_t k, std::size_t max_path,
                              std::size_t max_connector, std::uint64_t seed);

std::string serialize_icc(const IccDescription& desc);

/// Each ordered non-self pair becomes an arc with probability p.
Digraph gen_random(std::size_t n, double p, std::uint64_t seed);

/// Uniform integer in [0, bound) straight from the engine output, so streams
/// do not depend on the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
double uniform_unit(std::mt19937_64& rng);

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace gicc
