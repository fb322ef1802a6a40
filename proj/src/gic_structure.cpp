#include "gicc/gic_structure.hpp"

#include <algorithm>
#include <deque>

namespace gicc {

// ---------------------------------------------------------------------------
// RootedTree

RootedTree::RootedTree(Vertex root) : root_(root) { depth_[root] = 0; }

std::size_t RootedTree::height() const {
  std::size_t h = 0;
  for (const auto& [v, depth] : depth_) h = std::max(h, depth);
  return h;
}

VertexSet RootedTree::vertices() const {
  VertexSet out;
  for (const auto& [v, depth] : depth_) out.insert(v);
  return out;
}

VertexSet RootedTree::children(Vertex v) const {
  auto it = children_.find(v);
  return it == children_.end() ? VertexSet{} : it->second;
}

std::vector<Arc> RootedTree::arcs() const {
  std::vector<Arc> out;
  for (const auto& [child, parent] : parent_) out.push_back({parent, child});
  std::sort(out.begin(), out.end());
  return out;
}

bool RootedTree::is_leaf(Vertex v) const {
  if (!contains(v)) return false;
  auto it = children_.find(v);
  return it == children_.end() || it->second.empty();
}

VertexSet RootedTree::leaves_below(Vertex v) const {
  VertexSet leaves;
  std::vector<Vertex> stack;
  for (Vertex c : children(v)) stack.push_back(c);
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (is_leaf(u)) {
      leaves.insert(u);
      continue;
    }
    for (Vertex c : children(u)) stack.push_back(c);
  }
  return leaves;
}

void RootedTree::attach(Vertex child, Vertex parent) {
  if (!contains(parent)) throw std::logic_error("parent not in tree");
  if (contains(child)) throw std::logic_error("vertex already in tree");
  parent_[child] = parent;
  depth_[child] = depth_.at(parent) + 1;
  children_[parent].insert(child);
}

void RootedTree::erase_subtree(Vertex v) {
  if (v == root_) throw std::logic_error("cannot erase the root");
  for (Vertex c : children(v)) erase_subtree(c);
  children_.erase(v);
  auto p = parent_.find(v);
  if (p != parent_.end()) {
    auto& siblings = children_[p->second];
    siblings.erase(v);
    if (siblings.empty()) children_.erase(p->second);
    parent_.erase(p);
  }
  depth_.erase(v);
}

// ---------------------------------------------------------------------------
// GicStructure

std::vector<Vertex> GicStructure::non_inner() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= digraph_.vertex_count(); ++v) {
    if (!inner_.contains(v)) out.push_back(v);
  }
  return out;
}

struct GicAccess {
  static GicStructure make(const Digraph& d, const VertexSet& inner,
                           std::map<Vertex, RootedTree> trees) {
    GicStructure g;
    g.digraph_ = d;
    g.inner_ = inner;
    g.trees_ = std::move(trees);
    return g;
  }
};

// ---------------------------------------------------------------------------
// Violations

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InnerPairUnreachable:
      return "inner-pair-unreachable";
    case ViolationKind::ICycle:
      return "i-cycle";
    case ViolationKind::PPathMultiplicity:
      return "p-path-multiplicity";
    case ViolationKind::ExtraArc:
      return "extra-arc";
    case ViolationKind::TreeConstructionFailure:
      return "tree-construction-failure";
  }
  return "unknown";
}

std::string render_text(const ViolationReport& report) {
  std::string out = std::string("violation: ") + to_string(report.kind);
  if (report.overflow) out += " (count overflow)";
  if (!report.detail.empty()) out += "\n  " + report.detail;
  for (const Path& p : report.witness) out += "\n  witness " + to_string(p);
  return out;
}

TreeError::TreeError(ViolationReport report)
    : std::runtime_error(render_text(report)), report_(std::move(report)) {}

// ---------------------------------------------------------------------------
// Tree construction

RootedTree build_tree(const Digraph& d, const VertexSet& inner, Vertex root) {
  if (!inner.contains(root)) {
    throw std::invalid_argument("tree root must be an inner vertex");
  }
  const std::size_t n = d.vertex_count();
  const auto is_inner = to_mask(d, inner);

  std::vector<Vertex> parent(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> order{root};
  std::deque<Vertex> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex h : d.out(u)) {
      if (seen[h]) continue;
      seen[h] = 1;
      parent[h] = u;
      order.push_back(h);
      if (!is_inner[h]) queue.push_back(h);
    }
  }

  for (Vertex j : inner) {
    if (j != root && !seen[j]) {
      ViolationReport r;
      r.kind = ViolationKind::InnerPairUnreachable;
      r.witness.push_back(Path{{root, j}});
      r.detail = "no path from " + std::to_string(root) + " to " +
                 std::to_string(j) + " avoiding other inner vertices";
      throw TreeError(std::move(r));
    }
  }

  // Keep only branches that terminate at inner leaves.
  std::vector<char> keep(n + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (v == root) continue;
    if (is_inner[v]) keep[v] = 1;
    if (keep[v]) keep[parent[v]] = 1;
  }

  RootedTree tree(root);
  for (Vertex v : order) {
    if (v != root && keep[v]) tree.attach(v, parent[v]);
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Conditions

namespace {

std::vector<char> non_inner_mask(const Digraph& d, const VertexSet& inner) {
  std::vector<char> mask(d.vertex_count() + 1, 1);
  mask[0] = 0;
  for (Vertex v : inner) mask[v] = 0;
  return mask;
}

std::optional<Path> i_cycle_through(const Digraph& d,
                                    const std::vector<char>& non_inner,
                                    Vertex i) {
  return shortest_restricted_path(d, i, i, non_inner);
}

void check_inner(const Digraph& d, const VertexSet& inner) {
  if (inner.empty()) throw std::invalid_argument("inner vertex set is empty");
  for (Vertex v : inner) {
    if (!d.contains(v)) {
      throw std::out_of_range("inner vertex " + std::to_string(v) +
                              " outside the digraph");
    }
  }
}

VertexSet complement(const Digraph& d, const VertexSet& s) {
  VertexSet out;
  for (Vertex v = 1; v <= d.vertex_count(); ++v) {
    if (!s.contains(v)) out.insert(v);
  }
  return out;
}

}  // namespace

VertexSet detect_i_cycles(const Digraph& d, const VertexSet& inner) {
  check_inner(d, inner);
  const auto non_inner = non_inner_mask(d, inner);
  VertexSet offending;
  for (Vertex i : inner) {
    if (i_cycle_through(d, non_inner, i)) offending.insert(i);
  }
  return offending;
}

PPathCounts check_p_path_uniqueness(const Digraph& d, const VertexSet& inner,
                                    std::uint64_t cap) {
  check_inner(d, inner);
  if (inner.size() < 2) {
    throw std::invalid_argument("P-paths need at least two inner vertices");
  }
  const VertexSet interior = complement(d, inner);
  PPathCounts out;
  for (Vertex i : inner) {
    for (Vertex j : inner) {
      if (i == j) continue;
      out.counts[{i, j}] =
          count_interior_restricted_paths(d, i, j, interior, cap);
    }
  }
  return out;
}

Validation validate_gic(const Digraph& d, const VertexSet& inner,
                        std::uint64_t cap) {
  check_inner(d, inner);

  std::map<Vertex, RootedTree> trees;
  for (Vertex root : inner) {
    try {
      trees.emplace(root, build_tree(d, inner, root));
    } catch (const TreeError& e) {
      return e.report();
    }
  }

  const auto non_inner = non_inner_mask(d, inner);
  for (Vertex i : inner) {
    if (auto cycle = i_cycle_through(d, non_inner, i)) {
      ViolationReport r;
      r.kind = ViolationKind::ICycle;
      r.witness.push_back(*cycle);
      r.detail = "cycle through inner vertex " + std::to_string(i) +
                 " with no other inner vertex";
      return r;
    }
  }

  if (inner.size() >= 2) {
    const VertexSet interior = complement(d, inner);
    for (Vertex i : inner) {
      for (Vertex j : inner) {
        if (i == j) continue;
        PathCount c = count_interior_restricted_paths(d, i, j, interior, cap);
        if (c.count == 1 && !c.overflow) continue;
        ViolationReport r;
        r.kind = ViolationKind::PPathMultiplicity;
        r.overflow = c.overflow;
        r.witness = enumerate_interior_restricted_paths(d, i, j, interior, 2);
        r.detail = (c.overflow ? std::string("more than ") +
                                     std::to_string(cap)
                               : std::to_string(c.count)) +
                   " P-paths from " + std::to_string(i) + " to " +
                   std::to_string(j);
        return r;
      }
    }
  }

  // Union of tree arcs must be the whole arc set, and every vertex must sit
  // in some tree.
  std::vector<char> covered_arc(d.vertex_count() * d.vertex_count(), 0);
  std::vector<char> covered_vertex(d.vertex_count() + 1, 0);
  for (const auto& [root, tree] : trees) {
    for (Vertex v : tree.vertices()) covered_vertex[v] = 1;
    for (const Arc& a : tree.arcs()) {
      covered_arc[(a.tail - 1) * d.vertex_count() + (a.head - 1)] = 1;
    }
  }
  for (const Arc& a : d.arcs()) {
    if (!covered_arc[(a.tail - 1) * d.vertex_count() + (a.head - 1)]) {
      ViolationReport r;
      r.kind = ViolationKind::ExtraArc;
      r.witness.push_back(Path{{a.tail, a.head}});
      r.detail = "arc " + std::to_string(a.tail) + " -> " +
                 std::to_string(a.head) + " lies in no tree";
      return r;
    }
  }
  for (Vertex v = 1; v <= d.vertex_count(); ++v) {
    if (!covered_vertex[v]) {
      ViolationReport r;
      r.kind = ViolationKind::ExtraArc;
      r.witness.push_back(Path{{v}});
      r.detail = "vertex " + std::to_string(v) + " lies in no tree";
      return r;
    }
  }

  return GicAccess::make(d, inner, std::move(trees));
}

bool check_tree_consistency(const GicStructure& g) {
  const Digraph& d = g.digraph();
  for (const auto& [root, tree] : g.trees()) {
    if (tree.children(root) != out_neighbors(d, root)) return false;
    for (Vertex v : tree.vertices()) {
      if (g.is_inner(v)) continue;
      if (tree.children(v) != out_neighbors(d, v)) return false;
    }
  }
  return true;
}

}  // namespace gicc
