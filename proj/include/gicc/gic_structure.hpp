#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gicc/digraph.hpp"

namespace gicc {

/// Directed rooted tree inside a host digraph. Leaves are the inner vertices
/// other than the root; every non-root internal vertex is non-inner.
class RootedTree {
 public:
  RootedTree() = default;
  explicit RootedTree(Vertex root);

  Vertex root() const { return root_; }
  const std::map<Vertex, Vertex>& parent_of() const { return parent_; }
  const std::map<Vertex, std::size_t>& depth_of() const { return depth_; }

  bool contains(Vertex v) const { return depth_.contains(v); }
  std::size_t height() const;

  /// Tree vertices, ascending.
  VertexSet vertices() const;
  VertexSet children(Vertex v) const;
  std::vector<Arc> arcs() const;

  /// Leaves in the subtree hanging from v (v excluded).
  VertexSet leaves_below(Vertex v) const;
  bool is_leaf(Vertex v) const;

  void attach(Vertex child, Vertex parent);
  /// Drops v and everything below it.
  void erase_subtree(Vertex v);

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  Vertex root_ = 0;
  std::map<Vertex, Vertex> parent_;
  std::map<Vertex, std::size_t> depth_;
  std::map<Vertex, VertexSet> children_;
};

/// A validated K-GIC: digraph, inner vertex set, one tree per inner vertex.
/// Only validate_gic produces these.
class GicStructure {
 public:
  const Digraph& digraph() const { return digraph_; }
  const VertexSet& inner() const { return inner_; }
  const std::map<Vertex, RootedTree>& trees() const { return trees_; }
  const RootedTree& tree(Vertex root) const { return trees_.at(root); }

  std::size_t vertex_count() const { return digraph_.vertex_count(); }
  std::size_t inner_count() const { return inner_.size(); }
  bool is_inner(Vertex v) const { return inner_.contains(v); }
  /// Non-inner vertices, ascending.
  std::vector<Vertex> non_inner() const;

 private:
  friend struct GicAccess;
  Digraph digraph_;
  VertexSet inner_;
  std::map<Vertex, RootedTree> trees_;
};

enum class ViolationKind {
  InnerPairUnreachable,
  ICycle,
  PPathMultiplicity,
  ExtraArc,
  TreeConstructionFailure,
};

const char* to_string(ViolationKind kind);

struct ViolationReport {
  ViolationKind kind = ViolationKind::TreeConstructionFailure;
  /// Vertex sequences that replay the counterexample on the input digraph.
  std::vector<Path> witness;
  /// Set when a P-path count hit the enumeration cap.
  bool overflow = false;
  std::string detail;
};

std::string render_text(const ViolationReport& report);

/// Thrown by build_tree when some inner vertex cannot be reached.
class TreeError : public std::runtime_error {
 public:
  TreeError(ViolationReport report);
  const ViolationReport& report() const { return report_; }

 private:
  ViolationReport report_;
};

/// Breadth-first tree from `root`, ascending-label tie-break, never passing
/// through another inner vertex, pruned to branches that end at inner leaves.
RootedTree build_tree(const Digraph& d, const VertexSet& inner, Vertex root);

/// Inner vertices lying on a cycle whose other vertices are all non-inner.
VertexSet detect_i_cycles(const Digraph& d, const VertexSet& inner);

struct PPathCounts {
  std::map<std::pair<Vertex, Vertex>, PathCount> counts;
};

PPathCounts check_p_path_uniqueness(const Digraph& d, const VertexSet& inner,
                                    std::uint64_t cap = kDefaultPathCap);

using Validation = std::variant<GicStructure, ViolationReport>;

Validation validate_gic(const Digraph& d, const VertexSet& inner,
                        std::uint64_t cap = kDefaultPathCap);

inline bool is_valid(const Validation& v) {
  return std::holds_alternative<GicStructure>(v);
}

/// Every non-inner tree vertex has children equal to its out-neighbourhood in
/// every tree holding it, and every root's children equal its own.
bool check_tree_consistency(const GicStructure& g);

}  // namespace gicc
