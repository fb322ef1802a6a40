#include "gicc/cover.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

namespace gicc {

namespace {

using Mask = std::uint32_t;

constexpr std::size_t kMaskLimit = 24;

/// Out/in neighbourhoods as bitmasks over 0-based indices (v - 1).
struct BitGraph {
  std::vector<Mask> out;
  std::vector<Mask> in;

  explicit BitGraph(const Digraph& d) : out(d.vertex_count()), in(d.vertex_count()) {
    for (const Arc& a : d.arcs()) {
      out[a.tail - 1] |= Mask{1} << (a.head - 1);
      in[a.head - 1] |= Mask{1} << (a.tail - 1);
    }
  }

  Mask reach(Mask start, Mask within, const std::vector<Mask>& adj) const {
    Mask seen = start;
    Mask frontier = start;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) {
        next |= adj[std::countr_zero(f)];
      }
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool strongly_connected(Mask u) const {
    Mask low = u & (~u + 1);
    return reach(low, u, out) == u && reach(low, u, in) == u;
  }
};

VertexSet to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m) + 1));
  return s;
}

/// Lexicographically better: more savings, then fewer parts.
struct Score {
  std::size_t savings = 0;
  std::size_t parts = 0;

  bool better_than(const Score& o) const {
    if (savings != o.savings) return savings > o.savings;
    return parts < o.parts;
  }
};

Score score_of(const CoverPlan& plan) { return {savings(plan), plan.psi()}; }

CoverPlan assemble_plan(const Digraph& d, std::vector<CoverPart> parts,
                        bool exact) {
  CoverPlan plan;
  plan.vertex_count = d.vertex_count();
  plan.exact = exact;
  std::sort(parts.begin(), parts.end(),
            [](const CoverPart& a, const CoverPart& b) {
              return *a.vertices.begin() < *b.vertices.begin();
            });
  std::vector<char> used(d.vertex_count() + 1, 0);
  for (const auto& p : parts) {
    for (Vertex v : p.vertices) used[v] = 1;
  }
  for (Vertex v = 1; v <= d.vertex_count(); ++v) {
    if (!used[v]) plan.uncoded.insert(v);
  }
  plan.parts = std::move(parts);
  return plan;
}

// ---------------------------------------------------------------------------
// Exact search over vertex subsets

CoverPlan exact_cover(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  const BitGraph bg(d);
  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);

  // Largest inner set making D[U] a GIC, per vertex subset U.
  std::vector<Mask> best_inner(std::size_t{1} << n, 0);
  std::vector<Mask> subs;
  for (Mask u = 1; u <= full && u != 0; ++u) {
    if (std::popcount(u) < 2 || !bg.strongly_connected(u)) continue;
    auto sub = induced_subgraph(d, to_set(u));
    subs.clear();
    for (Mask v = u;; v = (v - 1) & u) {
      if (std::popcount(v) >= 2) subs.push_back(v);
      if (v == 0) break;
    }
    std::stable_sort(subs.begin(), subs.end(), [](Mask a, Mask b) {
      return std::popcount(a) > std::popcount(b);
    });
    for (Mask v : subs) {
      VertexSet inner;
      for (Vertex p : to_set(v)) inner.insert(*sub.local_of(p));
      if (is_valid(validate_gic(sub.graph, inner))) {
        best_inner[u] = v;
        break;
      }
    }
    if (u == full) break;
  }

  // Partition DP on the lowest remaining vertex: leave it uncoded or put it
  // in a GIC part.
  const std::size_t states = std::size_t{1} << n;
  std::vector<Score> best(states);
  std::vector<Mask> choice(states, 0);
  for (Mask mask = 1; mask <= full && mask != 0; ++mask) {
    Mask low = mask & (~mask + 1);
    Score s = best[mask & ~low];
    Mask pick = 0;
    Mask rest = mask & ~low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask u = sub | low;
      if (best_inner[u]) {
        Score cand = best[mask & ~u];
        cand.savings += std::popcount(best_inner[u]) - 1;
        cand.parts += 1;
        if (cand.better_than(s)) {
          s = cand;
          pick = u;
        }
      }
      if (sub == 0) break;
    }
    best[mask] = s;
    choice[mask] = pick;
    if (mask == full) break;
  }

  std::vector<CoverPart> parts;
  for (Mask mask = full; mask;) {
    Mask low = mask & (~mask + 1);
    Mask u = choice[mask];
    if (!u) {
      mask &= ~low;
      continue;
    }
    auto part = make_part(d, to_set(u), to_set(best_inner[u]));
    if (!part) throw std::logic_error("exact cover lost a part");
    parts.push_back(std::move(*part));
    mask &= ~u;
  }
  return assemble_plan(d, std::move(parts), true);
}

// ---------------------------------------------------------------------------
// Heuristic search

std::optional<CoverPart> part_from_trees(const Digraph& d,
                                         const VertexSet& available,
                                         const VertexSet& inner) {
  auto sub = induced_subgraph(d, available);
  VertexSet local_inner;
  for (Vertex v : inner) local_inner.insert(*sub.local_of(v));

  // First try: every vertex the BFS trees touch.
  VertexSet spanned = inner;
  bool reachable = true;
  for (Vertex root : local_inner) {
    try {
      for (Vertex v : build_tree(sub.graph, local_inner, root).vertices()) {
        spanned.insert(sub.parent_of(v));
      }
    } catch (const TreeError&) {
      reachable = false;
      break;
    }
  }
  if (!reachable) return std::nullopt;
  if (auto part = make_part(d, spanned, inner)) return part;

  // Second try: only shortest P-paths between inner pairs.
  VertexSet minimal = inner;
  std::vector<char> allowed(sub.graph.vertex_count() + 1, 1);
  allowed[0] = 0;
  for (Vertex v : local_inner) allowed[v] = 0;
  for (Vertex i : local_inner) {
    for (Vertex j : local_inner) {
      if (i == j) continue;
      auto p = shortest_restricted_path(sub.graph, i, j, allowed);
      if (!p) return std::nullopt;
      for (Vertex v : p->vertices) minimal.insert(sub.parent_of(v));
    }
  }
  if (minimal == spanned) return std::nullopt;
  return make_part(d, minimal, inner);
}

std::optional<CoverPart> grow_from(const Digraph& d, const VertexSet& available,
                                   Vertex seed, const std::vector<Vertex>& order) {
  std::vector<char> ok(d.vertex_count() + 1, 0);
  for (Vertex v : available) ok[v] = 1;
  auto cycle = shortest_restricted_path(d, seed, seed, ok);
  if (!cycle) return std::nullopt;

  std::optional<CoverPart> best =
      part_from_trees(d, available, VertexSet{seed, cycle->vertices[1]});
  if (!best) {
    // A chordless cycle is always a 2-GIC.
    VertexSet on_cycle(cycle->vertices.begin(), cycle->vertices.end());
    best = make_part(d, on_cycle, VertexSet{seed, cycle->vertices[1]});
    if (!best) return std::nullopt;
  }
  for (Vertex c : order) {
    if (best->inner.contains(c)) continue;
    VertexSet inner = best->inner;
    inner.insert(c);
    if (auto bigger = part_from_trees(d, available, inner)) {
      best = std::move(bigger);
    }
  }
  return best;
}

CoverPlan greedy_run(const Digraph& d, std::mt19937_64& rng) {
  VertexSet available;
  for (Vertex v = 1; v <= d.vertex_count(); ++v) available.insert(v);
  std::vector<CoverPart> parts;
  constexpr std::size_t kSeedsPerStep = 8;

  while (available.size() >= 2) {
    std::vector<Vertex> order(available.begin(), available.end());
    seeded_shuffle(order, rng);
    std::optional<CoverPart> best;
    for (std::size_t s = 0; s < std::min(kSeedsPerStep, order.size()); ++s) {
      auto cand = grow_from(d, available, order[s], order);
      if (cand && (!best || cand->k() > best->k() ||
                   (cand->k() == best->k() &&
                    cand->vertices.size() < best->vertices.size()))) {
        best = std::move(cand);
      }
    }
    if (!best) break;
    for (Vertex v : best->vertices) available.erase(v);
    parts.push_back(std::move(*best));
  }
  return assemble_plan(d, std::move(parts), false);
}

CoverPlan plan_from_cliques(const Digraph& d, std::size_t exact_limit) {
  std::vector<CoverPart> parts;
  for (const auto& clique : partition_cliques(d, exact_limit).cliques) {
    if (clique.size() < 2) continue;
    if (auto part = make_part(d, clique, clique)) parts.push_back(std::move(*part));
  }
  return assemble_plan(d, std::move(parts), false);
}

CoverPlan plan_from_cycles(const Digraph& d, std::size_t exact_limit) {
  std::vector<CoverPart> parts;
  for (const auto& cycle : pack_disjoint_cycles(d, exact_limit).cycles) {
    VertexSet vs(cycle.vertices.begin(), cycle.vertices.end());
    VertexSet inner{cycle.vertices[0], cycle.vertices[1]};
    if (auto part = make_part(d, vs, inner)) parts.push_back(std::move(*part));
  }
  return assemble_plan(d, std::move(parts), false);
}

CoverPlan heuristic_cover(const Digraph& d, const CoverOptions& options) {
  CoverPlan best = plan_from_cliques(d, options.baseline_exact_limit);
  auto consider = [&](CoverPlan cand) {
    if (score_of(cand).better_than(score_of(best))) best = std::move(cand);
  };
  consider(plan_from_cycles(d, options.baseline_exact_limit));
  for (std::size_t r = 0; r < options.budget; ++r) {
    std::mt19937_64 rng(options.seed * 0x100000001b3ULL + r);
    consider(greedy_run(d, rng));
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t CoverPlan::length() const { return vertex_count - savings(*this); }

std::size_t savings(const CoverPlan& plan) {
  std::size_t s = 0;
  for (const auto& p : plan.parts) s += p.k() - 1;
  return s;
}

std::optional<CoverPart> make_part(const Digraph& d, const VertexSet& vertices,
                                   const VertexSet& inner) {
  if (inner.empty()) return std::nullopt;
  auto sub = induced_subgraph(d, vertices);
  VertexSet local_inner;
  for (Vertex v : inner) {
    auto local = sub.local_of(v);
    if (!local) return std::nullopt;
    local_inner.insert(*local);
  }
  auto result = validate_gic(sub.graph, local_inner);
  if (!is_valid(result)) return std::nullopt;
  return CoverPart{vertices, inner, std::get<GicStructure>(std::move(result)),
                   std::move(sub.to_parent)};
}

CoverPlan gicc_cover(const Digraph& d, const CoverOptions& options) {
  const std::size_t n = d.vertex_count();
  bool exact = false;
  switch (options.mode) {
    case CoverOptions::Mode::Exact:
      if (n > options.exact_limit || n > kMaskLimit) {
        throw SizeGateError("exact cover is limited to " +
                            std::to_string(std::min(options.exact_limit, kMaskLimit)) +
                            " vertices");
      }
      exact = true;
      break;
    case CoverOptions::Mode::Auto:
      exact = n <= std::min(options.exact_limit, kMaskLimit);
      break;
    case CoverOptions::Mode::Heuristic:
      break;
  }
  return exact ? exact_cover(d) : heuristic_cover(d, options);
}

bool is_valid_plan(const Digraph& d, const CoverPlan& plan) {
  if (plan.vertex_count != d.vertex_count()) return false;
  std::vector<int> seen(d.vertex_count() + 1, 0);
  auto mark = [&](Vertex v) {
    if (!d.contains(v)) return false;
    return ++seen[v] == 1;
  };
  for (const auto& part : plan.parts) {
    for (Vertex v : part.vertices) {
      if (!mark(v)) return false;
    }
    if (!std::includes(part.vertices.begin(), part.vertices.end(),
                       part.inner.begin(), part.inner.end())) {
      return false;
    }
    if (!make_part(d, part.vertices, part.inner)) return false;
  }
  for (Vertex v : plan.uncoded) {
    if (!mark(v)) return false;
  }
  for (Vertex v = 1; v <= d.vertex_count(); ++v) {
    if (seen[v] != 1) return false;
  }
  return true;
}

std::size_t PlanCode::length() const {
  std::size_t total = uncoded.size();
  for (const auto& c : part_codes) total += c.length();
  return total;
}

namespace {

MessageVector restrict_messages(const CoverPart& part, const MessageVector& m) {
  MessageVector local{m.t, {}};
  for (Vertex p : part.to_parent) local.payloads.push_back(m[p]);
  return local;
}

}  // namespace

PlanCode encode_plan(const CoverPlan& plan, const MessageVector& m) {
  if (m.size() != plan.vertex_count) {
    throw CodecError("message vector does not match the plan");
  }
  PlanCode out;
  for (const auto& part : plan.parts) {
    IndexCode code = encode(part.gic, restrict_messages(part, m));
    for (auto& sym : code.symbols) {
      VertexSet global;
      for (Vertex v : sym.mask) global.insert(part.to_parent[v - 1]);
      sym.mask = std::move(global);
    }
    out.part_codes.push_back(std::move(code));
  }
  for (Vertex v : plan.uncoded) out.uncoded.emplace_back(v, m[v]);
  return out;
}

bool plan_round_trip(const Digraph& d, const CoverPlan& plan,
                     const MessageVector& m) {
  const PlanCode code = encode_plan(plan, m);
  for (std::size_t p = 0; p < plan.parts.size(); ++p) {
    const auto& part = plan.parts[p];
    // Back to local labels for the part decoder.
    IndexCode local = code.part_codes[p];
    for (auto& sym : local.symbols) {
      VertexSet mask;
      for (Vertex v : sym.mask) {
        auto it = std::lower_bound(part.to_parent.begin(), part.to_parent.end(), v);
        mask.insert(static_cast<Vertex>(it - part.to_parent.begin() + 1));
      }
      sym.mask = std::move(mask);
    }
    for (Vertex lv = 1; lv <= part.to_parent.size(); ++lv) {
      const Vertex gv = part.to_parent[lv - 1];
      // The receiver hands over what it caches; the part decoder only reads
      // the entries inside its own sub-digraph.
      SideInfo global_side = side_information(d, m, gv);
      SideInfo local_side;
      for (Vertex q : part.gic.digraph().out(lv)) {
        auto it = global_side.find(part.to_parent[q - 1]);
        if (it == global_side.end()) return false;
        local_side.emplace(q, it->second);
      }
      try {
        if (decode(part.gic, local, lv, local_side) != m[gv]) return false;
      } catch (const CodecError&) {
        return false;
      }
    }
  }
  for (const auto& [v, payload] : code.uncoded) {
    if (payload != m[v]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Interlinked cycles

Instance icc_to_gic(const IccDescription& desc) {
  const std::size_t k = desc.k();
  if (k < 2) throw IccError("interlinked cycles need k >= 2");
  const std::size_t n = desc.vertex_count();
  std::vector<int> owner(n + 1, 0);
  auto claim = [&](Vertex v) {
    if (v < 1 || v > n) {
      throw IccError("vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(n));
    }
    if (owner[v]++) {
      throw IccError("vertex " + std::to_string(v) + " used twice");
    }
  };
  for (const auto& p : desc.paths) {
    if (p.empty()) throw IccError("empty path");
    for (Vertex v : p) claim(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && !desc.connectors.contains({i, j})) {
        throw IccError("missing connector " + std::to_string(i + 1) + " -> " +
                       std::to_string(j + 1));
      }
    }
  }

  std::vector<Arc> arcs;
  for (const auto& p : desc.paths) {
    for (std::size_t m = 0; m + 1 < p.size(); ++m) arcs.push_back({p[m], p[m + 1]});
  }
  for (const auto& [pair, c] : desc.connectors) {
    const auto [i, j] = pair;
    if (i >= k || j >= k || i == j) throw IccError("bad connector index");
    for (Vertex v : c.vertices) claim(v);
    const auto& target = desc.paths[j];
    if (std::find(target.begin(), target.end(), c.entry) == target.end()) {
      throw IccError("connector entry " + std::to_string(c.entry) +
                     " not on path " + std::to_string(j + 1));
    }
    Vertex prev = desc.paths[i].back();
    for (Vertex v : c.vertices) {
      arcs.push_back({prev, v});
      prev = v;
    }
    arcs.push_back({prev, c.entry});
  }

  Digraph graph(n, arcs);
  for (const auto& p : desc.paths) {
    if (graph.in_degree(p.front()) == 0) {
      throw IccError("first vertex " + std::to_string(p.front()) +
                     " has no incoming arc");
    }
  }
  VertexSet inner;
  for (const auto& p : desc.paths) inner.insert(p.back());
  return {std::move(graph), std::move(inner)};
}

// ---------------------------------------------------------------------------
// Baselines

CyclePacking pack_disjoint_cycles(const Digraph& d, std::size_t exact_limit) {
  const std::size_t n = d.vertex_count();
  CyclePacking out;
  if (n <= std::min(exact_limit, kMaskLimit)) {
    out.exact = true;
    const BitGraph bg(d);
    const std::size_t states = std::size_t{1} << n;
    // ends[mask]: vertices v such that a path from the lowest vertex of mask
    // visits exactly mask and stops at v.
    std::vector<Mask> ends(states, 0);
    std::vector<char> hamiltonian(states, 0);
    for (std::size_t s = 0; s < n; ++s) ends[Mask{1} << s] = Mask{1} << s;
    for (std::size_t mask = 1; mask < states; ++mask) {
      const Mask m = static_cast<Mask>(mask);
      if (!ends[m]) continue;
      const Mask low = m & (~m + 1);
      const Mask higher = ~(low | (low - 1));
      for (Mask e = ends[m]; e; e &= e - 1) {
        const std::size_t v = std::countr_zero(e);
        if (std::popcount(m) >= 2 && (bg.out[v] & low)) hamiltonian[m] = 1;
        for (Mask nx = bg.out[v] & higher & ~m; nx; nx &= nx - 1) {
          ends[m | (nx & (~nx + 1))] |= nx & (~nx + 1);
        }
      }
    }
    std::vector<std::size_t> best(states, 0);
    std::vector<Mask> choice(states, 0);
    for (std::size_t mask = 1; mask < states; ++mask) {
      const Mask m = static_cast<Mask>(mask);
      const Mask low = m & (~m + 1);
      std::size_t b = best[m & ~low];
      Mask pick = 0;
      const Mask rest = m & ~low;
      for (Mask sub = rest;; sub = (sub - 1) & rest) {
        const Mask u = sub | low;
        if (hamiltonian[u] && 1 + best[m & ~u] > b) {
          b = 1 + best[m & ~u];
          pick = u;
        }
        if (sub == 0) break;
      }
      best[m] = b;
      choice[m] = pick;
    }
    for (Mask m = static_cast<Mask>(states - 1); m;) {
      const Mask low = m & (~m + 1);
      const Mask u = choice[m];
      if (!u) {
        m &= ~low;
        continue;
      }
      auto keep = to_mask(d, to_set(u));
      out.cycles.push_back(*shortest_cycle(d, keep));
      m &= ~u;
    }
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const Path& a, const Path& b) { return a.vertices < b.vertices; });
    return out;
  }

  std::vector<char> keep(n + 1, 1);
  keep[0] = 0;
  while (auto c = shortest_cycle(d, keep)) {
    for (Vertex v : c->vertices) keep[v] = 0;
    out.cycles.push_back(std::move(*c));
  }
  return out;
}

std::size_t cycle_cover_length(const Digraph& d, std::size_t exact_limit) {
  return d.vertex_count() - pack_disjoint_cycles(d, exact_limit).cycles.size();
}

CliquePartition partition_cliques(const Digraph& d, std::size_t exact_limit) {
  const std::size_t n = d.vertex_count();
  CliquePartition out;
  auto bidirectional = [&](Vertex a, Vertex b) {
    return d.has_arc(a, b) && d.has_arc(b, a);
  };
  if (n <= std::min(exact_limit, kMaskLimit)) {
    out.exact = true;
    const std::size_t states = std::size_t{1} << n;
    std::vector<Mask> mutual(n, 0);
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = 1; b <= n; ++b) {
        if (a != b && bidirectional(a, b)) mutual[a - 1] |= Mask{1} << (b - 1);
      }
    }
    std::vector<char> clique(states, 0);
    for (std::size_t mask = 1; mask < states; ++mask) {
      const Mask m = static_cast<Mask>(mask);
      const Mask low = m & (~m + 1);
      const Mask rest = m & ~low;
      clique[m] = rest == 0 ||
                  (clique[rest] &&
                   (mutual[std::countr_zero(low)] & rest) == rest);
    }
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(states, kInf);
    std::vector<Mask> choice(states, 0);
    best[0] = 0;
    for (std::size_t mask = 1; mask < states; ++mask) {
      const Mask m = static_cast<Mask>(mask);
      const Mask low = m & (~m + 1);
      const Mask rest = m & ~low;
      for (Mask sub = rest;; sub = (sub - 1) & rest) {
        const Mask u = sub | low;
        if (clique[u] && best[m & ~u] + 1 < best[m]) {
          best[m] = best[m & ~u] + 1;
          choice[m] = u;
        }
        if (sub == 0) break;
      }
    }
    for (Mask m = static_cast<Mask>(states - 1); m; m &= ~choice[m]) {
      out.cliques.push_back(to_set(choice[m]));
    }
    return out;
  }

  std::vector<char> assigned(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (assigned[v]) continue;
    VertexSet clique{v};
    assigned[v] = 1;
    for (Vertex u = v + 1; u <= n; ++u) {
      if (assigned[u]) continue;
      bool fits = std::all_of(clique.begin(), clique.end(),
                              [&](Vertex c) { return bidirectional(u, c); });
      if (fits) {
        clique.insert(u);
        assigned[u] = 1;
      }
    }
    out.cliques.push_back(std::move(clique));
  }
  return out;
}

std::size_t clique_cover_length(const Digraph& d, std::size_t exact_limit) {
  return partition_cliques(d, exact_limit).cliques.size();
}

}  // namespace gicc
