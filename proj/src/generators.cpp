#include "gicc/generators.hpp"

#include <numeric>

namespace gicc {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Instance gen_family_vb(std::size_t k) {
  if (k < 2) throw std::invalid_argument("family needs K >= 2");
  const auto K = static_cast<Vertex>(k);
  const std::size_t n = 3 * k - 2;
  std::vector<Arc> arcs;
  for (Vertex i = 2; i + 1 <= K; ++i) {
    arcs.push_back({i, K + i});
    arcs.push_back({i, 3 * K - i});
    for (Vertex q = i + 1; q <= K; ++q) arcs.push_back({K + i, q});
    for (Vertex q = 1; q < i; ++q) arcs.push_back({3 * K - i, q});
  }
  arcs.push_back({1, K + 1});
  for (Vertex q = 2; q <= K; ++q) arcs.push_back({K + 1, q});
  arcs.push_back({K, 2 * K});
  for (Vertex q = 1; q < K; ++q) arcs.push_back({2 * K, q});

  VertexSet inner;
  for (Vertex i = 1; i <= K; ++i) inner.insert(i);
  return {Digraph(n, arcs), inner};
}

Instance gen_fig4a_equivalent() {
  const std::vector<Arc> arcs{{1, 4}, {1, 5}, {2, 1}, {2, 6}, {3, 1},
                              {3, 2}, {3, 4}, {4, 1}, {4, 5}, {5, 2},
                              {5, 3}, {6, 3}, {6, 4}};
  return {Digraph(6, arcs), VertexSet{1, 2, 3, 4}};
}

Digraph gen_clique(std::size_t n) {
  if (n < 2) throw std::invalid_argument("clique needs n >= 2");
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

Digraph gen_cycle(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cycle needs n >= 2");
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= n; ++v) {
    arcs.push_back({v, v == n ? 1 : v + 1});
  }
  return Digraph(n, arcs);
}

std::size_t IccDescription::vertex_count() const {
  std::size_t n = 0;
  for (const auto& p : paths) n += p.size();
  for (const auto& [pair, c] : connectors) n += c.vertices.size();
  return n;
}

IccDescription gen_icc(
    std::size_t k, const std::vector<std::size_t>& path_lengths,
    const std::vector<std::vector<std::size_t>>& connector_lengths,
    std::uint64_t seed) {
  if (k < 2) throw IccError("interlinked cycles need k >= 2");
  if (path_lengths.size() != k || connector_lengths.size() != k) {
    throw IccError("length tables must have k rows");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (path_lengths[i] == 0) throw IccError("every path needs a vertex");
    if (connector_lengths[i].size() != k) {
      throw IccError("connector table must be k x k");
    }
  }

  std::mt19937_64 rng(seed);
  IccDescription desc;
  std::size_t n = std::accumulate(path_lengths.begin(), path_lengths.end(),
                                  std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) n += connector_lengths[i][j];
    }
  }
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), Vertex{1});
  seeded_shuffle(labels, rng);
  std::size_t next = 0;

  desc.paths.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t m = 0; m < path_lengths[i]; ++m) {
      desc.paths[i].push_back(labels[next++]);
    }
  }
  // One connector per target path lands on its first vertex so that vertex
  // has an incoming arc; the rest land anywhere on the target.
  std::vector<std::size_t> feeds_first(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t pick = uniform_below(rng, k - 1);
    feeds_first[j] = pick >= j ? pick + 1 : pick;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      IccDescription::Connector c;
      for (std::size_t m = 0; m < connector_lengths[i][j]; ++m) {
        c.vertices.push_back(labels[next++]);
      }
      const auto& target = desc.paths[j];
      c.entry = feeds_first[j] == i
                    ? target.front()
                    : target[uniform_below(rng, target.size())];
      desc.connectors[{i, j}] = std::move(c);
    }
  }
  return desc;
}

IccDescription gen_icc_random(std::size_t k, std::size_t max_path,
                              std::size_t max_connector, std::uint64_t seed) {
  if (max_path == 0) throw IccError("max_path must be positive");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> paths(k);
  for (auto& len : paths) len = 1 + uniform_below(rng, max_path);
  std::vector<std::vector<std::size_t>> connectors(
      k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) connectors[i][j] = uniform_below(rng, max_connector + 1);
    }
  }
  return gen_icc(k, paths, connectors, seed);
}

std::string serialize_icc(const IccDescription& desc) {
  auto join = [](const std::vector<Vertex>& vs) {
    std::string s;
    for (Vertex v : vs) s += " " + std::to_string(v);
    return s;
  };
  std::string out = "k=" + std::to_string(desc.k());
  for (std::size_t i = 0; i < desc.k(); ++i) {
    out += "\nP " + std::to_string(i + 1) + ":" + join(desc.paths[i]);
  }
  for (const auto& [pair, c] : desc.connectors) {
    out += "\nC " + std::to_string(pair.first + 1) + " " +
           std::to_string(pair.second + 1) + ":" + join(c.vertices) +
           " => " + std::to_string(c.entry);
  }
  return out;
}

Digraph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("arc probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (uniform_unit(rng) < p) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

}  // namespace gicc
