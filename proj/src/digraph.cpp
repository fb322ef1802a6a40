#include "gicc/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <istream>
#include <iterator>
#include <sstream>

namespace gicc {

Digraph::Digraph(std::size_t vertex_count)
    : out_(vertex_count),
      in_(vertex_count),
      adjacency_(vertex_count * vertex_count, 0) {}

Digraph::Digraph(std::size_t vertex_count, std::span<const Arc> arcs)
    : Digraph(vertex_count) {
  for (const Arc& a : arcs) {
    if (!contains(a.tail) || !contains(a.head)) {
      throw GraphError("arc " + std::to_string(a.tail) + " -> " +
                       std::to_string(a.head) + " has an endpoint outside 1.." +
                       std::to_string(vertex_count));
    }
    if (a.tail == a.head) {
      throw GraphError("self-loop on vertex " + std::to_string(a.tail));
    }
    char& cell = adjacency_[(a.tail - 1) * vertex_count + (a.head - 1)];
    if (cell) {
      throw GraphError("duplicate arc " + std::to_string(a.tail) + " -> " +
                       std::to_string(a.head));
    }
    cell = 1;
    out_[a.tail - 1].push_back(a.head);
    in_[a.head - 1].push_back(a.tail);
    ++arc_count_;
  }
  for (auto& heads : out_) std::sort(heads.begin(), heads.end());
  for (auto& tails : in_) std::sort(tails.begin(), tails.end());
}

void Digraph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(vertex_count()));
  }
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (!contains(tail) || !contains(head)) return false;
  return adjacency_[(tail - 1) * vertex_count() + (head - 1)] != 0;
}

const std::vector<Vertex>& Digraph::out(Vertex v) const {
  check_vertex(v);
  return out_[v - 1];
}

const std::vector<Vertex>& Digraph::in(Vertex v) const {
  check_vertex(v);
  return in_[v - 1];
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (std::size_t t = 0; t < out_.size(); ++t) {
    for (Vertex h : out_[t]) result.push_back({static_cast<Vertex>(t + 1), h});
  }
  return result;
}

bool is_path_in(const Digraph& d, const Path& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  for (Vertex v : vs) {
    if (!d.contains(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!d.has_arc(vs[i], vs[i + 1])) return false;
  }
  std::size_t distinct_span = vs.size();
  if (p.is_cycle()) --distinct_span;
  std::vector<Vertex> sorted(vs.begin(), vs.begin() + distinct_span);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string to_string(const Path& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.vertices[i]);
  }
  return s + ">";
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      kind_(kind),
      line_(line) {}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Malformed:
      return "malformed";
    case ParseError::Kind::SelfLoop:
      return "self-loop";
    case ParseError::Kind::DuplicateArc:
      return "duplicate-arc";
    case ParseError::Kind::OutOfRange:
      return "out-of-range";
  }
  return "unknown";
}

namespace {

std::optional<std::uint64_t> parse_unsigned(std::string_view token) {
  if (token.empty()) return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> split_single_spaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(' ', start);
    tokens.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return tokens;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  using Kind = ParseError::Kind;
  std::optional<std::size_t> n;
  std::vector<Arc> arcs;
  std::set<Arc> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (end == text.size() && line.empty()) break;

    if (line.empty() || line.front() == '#') continue;

    if (!n) {
      if (!line.starts_with("n=")) {
        throw ParseError(Kind::Malformed, line_no, "expected \"n=<N>\"");
      }
      auto value = parse_unsigned(line.substr(2));
      if (!value || *value == 0) {
        throw ParseError(Kind::Malformed, line_no,
                         "vertex count must be a positive integer");
      }
      n = *value;
      continue;
    }

    auto tokens = split_single_spaces(line);
    if (tokens.size() < 3 || tokens[1] != "->") {
      throw ParseError(Kind::Malformed, line_no,
                       "expected \"<tail> -> <head> ...\"");
    }
    auto parse_label = [&](std::string_view token) -> Vertex {
      auto value = parse_unsigned(token);
      if (!value) {
        throw ParseError(Kind::Malformed, line_no,
                         "bad vertex label \"" + std::string(token) + "\"");
      }
      if (*value < 1 || *value > *n) {
        throw ParseError(Kind::OutOfRange, line_no,
                         "vertex " + std::to_string(*value) + " outside 1.." +
                             std::to_string(*n));
      }
      return static_cast<Vertex>(*value);
    };
    Vertex tail = parse_label(tokens[0]);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      Vertex head = parse_label(tokens[i]);
      if (head == tail) {
        throw ParseError(Kind::SelfLoop, line_no,
                         "self-loop on vertex " + std::to_string(tail));
      }
      Arc arc{tail, head};
      if (!seen.insert(arc).second) {
        throw ParseError(Kind::DuplicateArc, line_no,
                         "duplicate arc " + std::to_string(tail) + " -> " +
                             std::to_string(head));
      }
      arcs.push_back(arc);
    }
  }
  if (!n) throw ParseError(Kind::Malformed, line_no, "missing \"n=<N>\" line");
  return Digraph(*n, arcs);
}

Digraph parse_digraph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_digraph(text);
}

std::string serialize_digraph(const Digraph& d) {
  std::string out = "n=" + std::to_string(d.vertex_count());
  for (Vertex v = 1; v <= d.vertex_count(); ++v) {
    const auto& heads = d.out(v);
    if (heads.empty()) continue;
    out += "\n" + std::to_string(v) + " ->";
    for (Vertex h : heads) out += " " + std::to_string(h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Queries

VertexSet out_neighbors(const Digraph& d, Vertex v) {
  const auto& heads = d.out(v);
  return VertexSet(heads.begin(), heads.end());
}

std::optional<Vertex> InducedSubgraph::local_of(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<Vertex>(it - to_parent.begin() + 1);
}

InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& s) {
  InducedSubgraph result;
  result.to_parent.assign(s.begin(), s.end());
  std::vector<Vertex> local(d.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < result.to_parent.size(); ++i) {
    Vertex v = result.to_parent[i];
    if (!d.contains(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " not in digraph");
    }
    local[v] = static_cast<Vertex>(i + 1);
  }
  std::vector<Arc> arcs;
  for (Vertex v : result.to_parent) {
    for (Vertex h : d.out(v)) {
      if (local[h]) arcs.push_back({local[v], local[h]});
    }
  }
  result.graph = Digraph(result.to_parent.size(), arcs);
  return result;
}

std::vector<char> to_mask(const Digraph& d, const VertexSet& s) {
  std::vector<char> mask(d.vertex_count() + 1, 0);
  for (Vertex v : s) {
    if (d.contains(v)) mask[v] = 1;
  }
  return mask;
}

bool is_acyclic_on(const Digraph& d, const std::vector<char>& keep) {
  // Kahn's algorithm on the kept vertices.
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> indeg(n + 1, 0);
  std::size_t kept = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (!keep[v]) continue;
    ++kept;
    for (Vertex t : d.in(v)) {
      if (keep[t]) ++indeg[v];
    }
  }
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (keep[v] && indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex h : d.out(v)) {
      if (keep[h] && --indeg[h] == 0) ready.push_back(h);
    }
  }
  return removed == kept;
}

bool is_acyclic(const Digraph& d) {
  return is_acyclic_on(d, std::vector<char>(d.vertex_count() + 1, 1));
}

std::optional<Path> shortest_restricted_path(const Digraph& d, Vertex from,
                                             Vertex to,
                                             const std::vector<char>& allowed) {
  const std::size_t n = d.vertex_count();
  std::vector<Vertex> parent(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  std::deque<Vertex> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex h : d.out(u)) {
      if (h == to) {
        Path p;
        p.vertices.push_back(to);
        for (Vertex x = u; x != from; x = parent[x]) p.vertices.push_back(x);
        p.vertices.push_back(from);
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
      }
      if (!seen[h] && allowed[h]) {
        seen[h] = 1;
        parent[h] = u;
        queue.push_back(h);
      }
    }
  }
  return std::nullopt;
}

std::optional<Path> shortest_cycle(const Digraph& d,
                                   const std::vector<char>& keep) {
  std::optional<Path> best;
  for (Vertex v = 1; v <= d.vertex_count(); ++v) {
    if (!keep[v]) continue;
    auto p = shortest_restricted_path(d, v, v, keep);
    if (p && (!best || p->vertices.size() < best->vertices.size())) {
      best = std::move(p);
      if (best->vertices.size() == 3) break;  // a digon cannot be beaten
    }
  }
  return best;
}

std::optional<Path> shortest_cycle(const Digraph& d) {
  return shortest_cycle(d, std::vector<char>(d.vertex_count() + 1, 1));
}

std::vector<Path> enumerate_simple_cycles(const Digraph& d, std::size_t cap) {
  const std::size_t n = d.vertex_count();
  std::vector<Path> cycles;
  std::vector<char> on_stack(n + 1, 0);
  std::vector<Vertex> stack;

  // Cycles rooted at their minimum vertex; only larger vertices are explored.
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex root, Vertex u) {
    for (Vertex h : d.out(u)) {
      if (cycles.size() >= cap) return;
      if (h == root) {
        Path p{stack};
        p.vertices.push_back(root);
        cycles.push_back(std::move(p));
      } else if (h > root && !on_stack[h]) {
        on_stack[h] = 1;
        stack.push_back(h);
        dfs(root, h);
        stack.pop_back();
        on_stack[h] = 0;
      }
    }
  };
  for (Vertex root = 1; root <= n && cycles.size() < cap; ++root) {
    stack = {root};
    on_stack[root] = 1;
    dfs(root, root);
    on_stack[root] = 0;
  }
  return cycles;
}

namespace {

void check_restricted_endpoints(const Digraph& d, Vertex from, Vertex to,
                                const VertexSet& allowed) {
  if (!d.contains(from) || !d.contains(to)) {
    throw std::out_of_range("path endpoint outside the digraph");
  }
  if (from == to) throw std::invalid_argument("path endpoints must differ");
  if (allowed.contains(from) || allowed.contains(to)) {
    throw std::invalid_argument("path endpoints must not be interior vertices");
  }
}

}  // namespace

PathCount count_interior_restricted_paths_dfs(const Digraph& d, Vertex from,
                                              Vertex to,
                                              const VertexSet& allowed_interior,
                                              std::uint64_t cap) {
  check_restricted_endpoints(d, from, to, allowed_interior);
  const auto allowed = to_mask(d, allowed_interior);
  std::vector<char> visited(d.vertex_count() + 1, 0);
  PathCount result;

  std::function<void(Vertex)> dfs = [&](Vertex u) {
    for (Vertex h : d.out(u)) {
      if (result.overflow) return;
      if (h == to) {
        if (++result.count > cap) result.overflow = true;
      } else if (allowed[h] && !visited[h]) {
        visited[h] = 1;
        dfs(h);
        visited[h] = 0;
      }
    }
  };
  dfs(from);
  return result;
}

PathCount count_interior_restricted_paths(const Digraph& d, Vertex from,
                                          Vertex to,
                                          const VertexSet& allowed_interior,
                                          std::uint64_t cap) {
  check_restricted_endpoints(d, from, to, allowed_interior);
  const auto allowed = to_mask(d, allowed_interior);
  if (!is_acyclic_on(d, allowed)) {
    return count_interior_restricted_paths_dfs(d, from, to, allowed_interior,
                                               cap);
  }

  // Interior is a DAG and the endpoints sit outside it, so every walk is a
  // simple path. Count walks in reverse topological order, saturating at
  // cap + 1.
  const std::size_t n = d.vertex_count();
  const std::uint64_t saturate = cap + 1;
  std::vector<std::size_t> indeg(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (!allowed[v]) continue;
    for (Vertex t : d.in(v)) {
      if (allowed[t]) ++indeg[v];
    }
  }
  std::vector<Vertex> order;
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (allowed[v] && indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (Vertex h : d.out(v)) {
      if (allowed[h] && --indeg[h] == 0) ready.push_back(h);
    }
  }
  std::vector<std::uint64_t> to_target(n + 1, 0);
  auto accumulate = [&](Vertex u) {
    std::uint64_t total = 0;
    for (Vertex h : d.out(u)) {
      std::uint64_t add = h == to ? 1 : (allowed[h] ? to_target[h] : 0);
      total = std::min(saturate, total + add);
    }
    return total;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    to_target[*it] = accumulate(*it);
  }
  PathCount result;
  result.count = accumulate(from);
  result.overflow = result.count > cap;
  return result;
}

std::vector<Path> enumerate_interior_restricted_paths(
    const Digraph& d, Vertex from, Vertex to, const VertexSet& allowed_interior,
    std::size_t limit) {
  check_restricted_endpoints(d, from, to, allowed_interior);
  const auto allowed = to_mask(d, allowed_interior);
  std::vector<char> visited(d.vertex_count() + 1, 0);
  std::vector<Path> paths;
  std::vector<Vertex> stack{from};

  std::function<void(Vertex)> dfs = [&](Vertex u) {
    for (Vertex h : d.out(u)) {
      if (paths.size() >= limit) return;
      if (h == to) {
        Path p{stack};
        p.vertices.push_back(to);
        paths.push_back(std::move(p));
      } else if (allowed[h] && !visited[h]) {
        visited[h] = 1;
        stack.push_back(h);
        dfs(h);
        stack.pop_back();
        visited[h] = 0;
      }
    }
  };
  dfs(from);
  return paths;
}

}  // namespace gicc
