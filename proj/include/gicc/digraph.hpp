#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gicc {

/// Receiver label, 1-based. Vertex v requests message x_v.
using Vertex = std::uint32_t;

using VertexSet = std::set<Vertex>;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Thrown when arcs handed to a Digraph violate the unicast model.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unicast side-information digraph. An arc (i -> j) means receiver i caches
/// x_j. No self-loops, no parallel arcs. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count);
  Digraph(std::size_t vertex_count, std::span<const Arc> arcs);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  bool contains(Vertex v) const { return v >= 1 && v <= out_.size(); }
  bool has_arc(Vertex tail, Vertex head) const;

  /// Heads of arcs leaving v, ascending.
  const std::vector<Vertex>& out(Vertex v) const;
  /// Tails of arcs entering v, ascending.
  const std::vector<Vertex>& in(Vertex v) const;

  std::size_t out_degree(Vertex v) const { return out(v).size(); }
  std::size_t in_degree(Vertex v) const { return in(v).size(); }

  /// All arcs, sorted by (tail, head).
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<char> adjacency_;
  std::size_t arc_count_ = 0;
};

/// Ordered vertex sequence. Consecutive pairs are arcs; vertices are distinct
/// except that first == last marks a cycle.
struct Path {
  std::vector<Vertex> vertices;

  bool is_cycle() const {
    return vertices.size() >= 2 && vertices.front() == vertices.back();
  }
  friend bool operator==(const Path&, const Path&) = default;
};

bool is_path_in(const Digraph& d, const Path& p);

std::string to_string(const Path& p);
std::string to_string(const VertexSet& s);

// ---------------------------------------------------------------------------
// Arc-list text format

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, SelfLoop, DuplicateArc, OutOfRange };

  ParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

const char* to_string(ParseError::Kind kind);

Digraph parse_digraph(std::string_view text);
Digraph parse_digraph(std::istream& in);

/// Canonical form: "n=<N>" then one line per tail with out-arcs, tails and
/// heads ascending, LF separated, no trailing newline.
std::string serialize_digraph(const Digraph& d);

// ---------------------------------------------------------------------------
// Queries

VertexSet out_neighbors(const Digraph& d, Vertex v);

/// Induced sub-digraph plus the local -> parent label map.
struct InducedSubgraph {
  Digraph graph;
  /// to_parent[local - 1] is the parent label of local vertex `local`.
  std::vector<Vertex> to_parent;

  Vertex parent_of(Vertex local) const { return to_parent.at(local - 1); }
  std::optional<Vertex> local_of(Vertex parent) const;
};

InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& s);

bool is_acyclic(const Digraph& d);

/// True iff the sub-digraph induced on `keep` (mask indexed by label) is
/// acyclic. keep.size() must be vertex_count() + 1; index 0 is ignored.
bool is_acyclic_on(const Digraph& d, const std::vector<char>& keep);

/// A shortest directed cycle inside the vertices flagged in `keep`, or
/// nullopt when that part is acyclic. Ties resolve to the smallest start.
std::optional<Path> shortest_cycle(const Digraph& d,
                                   const std::vector<char>& keep);
std::optional<Path> shortest_cycle(const Digraph& d);

/// Shortest path from `from` to `to` whose interior lies in `allowed`
/// (mask indexed by label). Returns nullopt when none exists.
std::optional<Path> shortest_restricted_path(const Digraph& d, Vertex from,
                                             Vertex to,
                                             const std::vector<char>& allowed);

/// Every simple cycle, each reported once starting at its smallest vertex.
/// Stops after `cap` cycles.
std::vector<Path> enumerate_simple_cycles(const Digraph& d,
                                          std::size_t cap = 1'000'000);

struct PathCount {
  std::uint64_t count = 0;
  bool overflow = false;

  friend bool operator==(const PathCount&, const PathCount&) = default;
};

inline constexpr std::uint64_t kDefaultPathCap = 1'000'000;

/// Number of simple from -> to paths whose internal vertices all lie in
/// `allowed_interior`. Uses DAG counting when the interior is acyclic and
/// capped DFS otherwise; `overflow` is set once the count exceeds `cap`.
PathCount count_interior_restricted_paths(const Digraph& d, Vertex from,
                                          Vertex to,
                                          const VertexSet& allowed_interior,
                                          std::uint64_t cap = kDefaultPathCap);

/// Same count by plain DFS enumeration, regardless of interior shape.
PathCount count_interior_restricted_paths_dfs(const Digraph& d, Vertex from,
                                              Vertex to,
                                              const VertexSet& allowed_interior,
                                              std::uint64_t cap = kDefaultPathCap);

/// Up to `limit` such paths in DFS order (ascending heads).
std::vector<Path> enumerate_interior_restricted_paths(
    const Digraph& d, Vertex from, Vertex to, const VertexSet& allowed_interior,
    std::size_t limit);

/// Label mask of size vertex_count() + 1 with the members of s set.
std::vector<char> to_mask(const Digraph& d, const VertexSet& s);

}  // namespace gicc
