#include "gicc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

namespace gicc {

// ---------------------------------------------------------------------------
// MAIS via minimum feedback vertex set

namespace {

class FeedbackSearch {
 public:
  explicit FeedbackSearch(const Digraph& d) : d_(d), n_(d.vertex_count()) {}

  std::vector<char> run() {
    std::vector<char> alive(n_ + 1, 1);
    alive[0] = 0;
    std::vector<char> forced(n_ + 1, 0);
    std::vector<char> removed(n_ + 1, 0);
    best_removed_.assign(n_ + 1, 1);
    best_removed_[0] = 0;
    best_ = n_ + 1;  // sentinel; removing every vertex always works
    {
      // Greedy upper bound: drop one vertex of a shortest cycle at a time.
      std::vector<char> a = alive;
      std::vector<char> r(n_ + 1, 0);
      std::size_t count = 0;
      while (auto c = shortest_cycle(d_, a)) {
        a[c->vertices.front()] = 0;
        r[c->vertices.front()] = 1;
        ++count;
      }
      best_ = count;
      best_removed_ = r;
    }
    search(alive, forced, removed, 0);
    return best_removed_;
  }

 private:
  /// Drops vertices that cannot lie on a cycle inside `alive`.
  void trim(std::vector<char>& alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 1; v <= n_; ++v) {
        if (!alive[v]) continue;
        bool has_in = false;
        bool has_out = false;
        for (Vertex t : d_.in(v)) has_in = has_in || alive[t];
        for (Vertex h : d_.out(v)) has_out = has_out || alive[h];
        if (!has_in || !has_out) {
          alive[v] = 0;
          changed = true;
        }
      }
    }
  }

  /// Disjoint cycles found greedily; each needs its own deletion.
  std::size_t lower_bound(const std::vector<char>& alive) const {
    std::vector<char> a = alive;
    std::size_t count = 0;
    while (auto c = shortest_cycle(d_, a)) {
      for (Vertex v : c->vertices) a[v] = 0;
      ++count;
    }
    return count;
  }

  void search(std::vector<char> alive, std::vector<char> forced,
              std::vector<char>& removed, std::size_t removed_count) {
    if (removed_count >= best_) return;
    trim(alive);

    std::vector<char> forced_alive(n_ + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) forced_alive[v] = alive[v] && forced[v];
    if (!is_acyclic_on(d_, forced_alive)) return;

    auto cycle = shortest_cycle(d_, alive);
    if (!cycle) {
      best_ = removed_count;
      best_removed_ = removed;
      return;
    }
    if (removed_count + lower_bound(alive) >= best_) return;

    cycle->vertices.pop_back();
    for (Vertex v : cycle->vertices) {
      if (forced[v]) continue;
      alive[v] = 0;
      removed[v] = 1;
      search(alive, forced, removed, removed_count + 1);
      removed[v] = 0;
      alive[v] = 1;
      forced[v] = 1;  // later branches keep v
    }
  }

  const Digraph& d_;
  const std::size_t n_;
  std::size_t best_ = 0;
  std::vector<char> best_removed_;
};

void check_mais_gate(const Digraph& d, std::size_t max_vertices) {
  if (d.vertex_count() > max_vertices) {
    throw SizeGateError("exact MAIS is limited to " +
                        std::to_string(max_vertices) + " vertices");
  }
}

}  // namespace

VertexSet mais_witness(const Digraph& d, std::size_t max_vertices) {
  check_mais_gate(d, max_vertices);
  auto removed = FeedbackSearch(d).run();
  VertexSet kept;
  for (Vertex v = 1; v <= d.vertex_count(); ++v) {
    if (!removed[v]) kept.insert(v);
  }
  return kept;
}

std::size_t mais(const Digraph& d, std::size_t max_vertices) {
  return mais_witness(d, max_vertices).size();
}

// ---------------------------------------------------------------------------
// Minrank over GF(2)

std::size_t gf2_rank(std::vector<std::uint64_t> rows) {
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] == 0) continue;
    const std::uint64_t pivot = rows[r] & (~rows[r] + 1);
    for (std::size_t s = r + 1; s < rows.size(); ++s) {
      if (rows[s] & pivot) rows[s] ^= rows[r];
    }
    ++rank;
  }
  return rank;
}

std::size_t minrank_gf2(const Digraph& d, std::size_t max_arcs) {
  if (d.arc_count() > max_arcs) {
    throw SizeGateError("minrank enumeration is limited to " +
                        std::to_string(max_arcs) + " arcs");
  }
  if (d.vertex_count() > 64) throw SizeGateError("minrank needs N <= 64");
  const std::size_t n = d.vertex_count();
  if (n == 0) return 0;

  const auto arcs = d.arcs();
  std::vector<std::uint64_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;

  // Gray-code walk: consecutive fillings differ in one free entry.
  std::size_t best = gf2_rank(rows);
  const std::uint64_t total = std::uint64_t{1} << arcs.size();
  for (std::uint64_t step = 1; step < total && best > 1; ++step) {
    const Arc& a = arcs[std::countr_zero(step)];
    rows[a.tail - 1] ^= std::uint64_t{1} << (a.head - 1);
    best = std::min(best, gf2_rank(rows));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Optimality classes

const char* to_string(Optimality o) {
  switch (o) {
    case Optimality::Case1:
      return "optimal-case1";
    case Optimality::Case2:
      return "optimal-case2";
    case Optimality::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

class Case2Search {
 public:
  Case2Search(const Digraph& d, const VertexSet& inner) : d_(d), inner_(inner) {
    for (Vertex v = 1; v <= d.vertex_count(); ++v) {
      if (!inner.contains(v)) non_inner_.insert(v);
    }
    auto sub = induced_subgraph(d, non_inner_);
    for (const Path& c : enumerate_simple_cycles(sub.graph, 100'000)) {
      VertexSet vs;
      for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        vs.insert(sub.parent_of(c.vertices[i]));
      }
      if (std::find(cycle_sets_.begin(), cycle_sets_.end(), vs) ==
          cycle_sets_.end()) {
        cycle_sets_.push_back(vs);
        Path global;
        for (Vertex v : c.vertices) global.vertices.push_back(sub.parent_of(v));
        cycles_.push_back(std::move(global));
      }
    }
  }

  bool run(Case2Witness* out) {
    std::vector<std::size_t> chosen;
    return choose_cycles(0, chosen, VertexSet{}, out);
  }

 private:
  bool choose_cycles(std::size_t from, std::vector<std::size_t>& chosen,
                     const VertexSet& used, Case2Witness* out) {
    if (!chosen.empty() && try_partitions(chosen, used, out)) return true;
    for (std::size_t c = from; c < cycle_sets_.size(); ++c) {
      if (intersects(cycle_sets_[c], used)) continue;
      if (chosen.size() + 2 > inner_.size()) break;  // need M + 1 <= K blocks
      VertexSet next = used;
      next.insert(cycle_sets_[c].begin(), cycle_sets_[c].end());
      chosen.push_back(c);
      if (choose_cycles(c + 1, chosen, next, out)) return true;
      chosen.pop_back();
    }
    return false;
  }

  bool try_partitions(const std::vector<std::size_t>& chosen,
                      const VertexSet& used, Case2Witness* out) {
    const std::size_t blocks = chosen.size() + 1;
    std::vector<Vertex> inner(inner_.begin(), inner_.end());
    std::vector<std::size_t> label(inner.size(), 0);
    // Restricted growth strings enumerate set partitions.
    std::function<bool(std::size_t, std::size_t)> rec =
        [&](std::size_t pos, std::size_t max_label) -> bool {
      if (pos == inner.size()) {
        if (max_label != blocks) return false;
        std::vector<VertexSet> parts(blocks);
        for (std::size_t i = 0; i < inner.size(); ++i) {
          parts[label[i]].insert(inner[i]);
        }
        VertexSet pool;
        for (Vertex v : non_inner_) {
          if (!used.contains(v)) pool.insert(v);
        }
        std::vector<CoverPart> built;
        return assign_parts(parts, 0, pool, built, chosen, out);
      }
      for (std::size_t l = 0; l <= std::min(max_label, blocks - 1); ++l) {
        label[pos] = l;
        if (rec(pos + 1, std::max(max_label, l + 1))) return true;
      }
      return false;
    };
    return rec(0, 0);
  }

  bool assign_parts(const std::vector<VertexSet>& blocks, std::size_t b,
                    const VertexSet& pool, std::vector<CoverPart>& built,
                    const std::vector<std::size_t>& chosen, Case2Witness* out) {
    if (b == blocks.size()) return finish(built, chosen, out);
    std::vector<Vertex> avail(pool.begin(), pool.end());
    const std::size_t subsets = std::size_t{1} << avail.size();
    for (std::size_t s = 0; s < subsets; ++s) {
      VertexSet extra;
      for (std::size_t i = 0; i < avail.size(); ++i) {
        if (s >> i & 1) extra.insert(avail[i]);
      }
      VertexSet vs = blocks[b];
      vs.insert(extra.begin(), extra.end());
      if (!is_acyclic_on(d_, to_mask(d_, extra))) continue;
      auto part = make_part(d_, vs, blocks[b]);
      if (!part) continue;
      VertexSet rest;
      for (Vertex v : pool) {
        if (!extra.contains(v)) rest.insert(v);
      }
      built.push_back(std::move(*part));
      if (assign_parts(blocks, b + 1, rest, built, chosen, out)) return true;
      built.pop_back();
    }
    return false;
  }

  /// Looks for one vertex per cycle and K_i - 1 inner vertices per part whose
  /// removal leaves the whole digraph acyclic.
  bool finish(const std::vector<CoverPart>& built,
              const std::vector<std::size_t>& chosen, Case2Witness* out) {
    std::vector<std::vector<Vertex>> options;
    for (std::size_t c : chosen) {
      options.emplace_back(cycle_sets_[c].begin(), cycle_sets_[c].end());
    }
    for (const auto& p : built) {
      options.emplace_back(p.inner.begin(), p.inner.end());  // vertex kept
    }
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      VertexSet removed;
      for (std::size_t c = 0; c < chosen.size(); ++c) {
        removed.insert(options[c][pick[c]]);
      }
      for (std::size_t p = 0; p < built.size(); ++p) {
        for (Vertex v : built[p].inner) {
          if (v != options[chosen.size() + p][pick[chosen.size() + p]]) {
            removed.insert(v);
          }
        }
      }
      std::vector<char> keep(d_.vertex_count() + 1, 1);
      keep[0] = 0;
      for (Vertex v : removed) keep[v] = 0;
      if (is_acyclic_on(d_, keep)) {
        if (out) {
          out->cycles.clear();
          for (std::size_t c : chosen) out->cycles.push_back(cycles_[c]);
          out->parts = built;
          out->removed = removed;
        }
        return true;
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) return false;
    }
  }

  static bool intersects(const VertexSet& a, const VertexSet& b) {
    for (Vertex v : a) {
      if (b.contains(v)) return true;
    }
    return false;
  }

  const Digraph& d_;
  const VertexSet& inner_;
  VertexSet non_inner_;
  std::vector<VertexSet> cycle_sets_;
  std::vector<Path> cycles_;
};

}  // namespace

Optimality classify_optimality(const Digraph& d, const VertexSet& inner,
                               Case2Witness* witness,
                               std::size_t max_vertices) {
  std::vector<char> non_inner(d.vertex_count() + 1, 1);
  non_inner[0] = 0;
  for (Vertex v : inner) non_inner[v] = 0;
  if (is_acyclic_on(d, non_inner)) return Optimality::Case1;
  if (d.vertex_count() > max_vertices || inner.size() < 2) {
    return Optimality::Unknown;
  }
  return Case2Search(d, inner).run(witness) ? Optimality::Case2
                                            : Optimality::Unknown;
}

Optimality certify_theorem4(const GicStructure& g) {
  return classify_optimality(g.digraph(), g.inner());
}

bool sandwich_check(const Digraph& d,
                    const std::map<std::string, double>& lengths) {
  const auto lower = static_cast<double>(mais(d));
  return std::all_of(lengths.begin(), lengths.end(),
                     [&](const auto& kv) { return lower <= kv.second; });
}

BoundsReport compute_bounds(const Digraph& d, const BoundsOptions& options) {
  BoundsReport r;
  r.mais = mais(d);
  if (options.with_minrank) r.minrank = minrank_gf2(d);

  const CoverPlan plan = gicc_cover(d, options.cover);
  const auto gicc = static_cast<double>(plan.length());
  r.scheme_lengths["gicc"] = gicc;
  r.scheme_lengths["cycle-cover"] = static_cast<double>(
      cycle_cover_length(d, options.cover.baseline_exact_limit));
  r.scheme_lengths["clique-cover"] = static_cast<double>(
      clique_cover_length(d, options.cover.baseline_exact_limit));

  if (options.inner) {
    auto v = validate_gic(d, *options.inner);
    if (is_valid(v)) r.optimality = certify_theorem4(std::get<GicStructure>(v));
  } else if (plan.psi() == 1 && plan.uncoded.empty()) {
    r.optimality = certify_theorem4(plan.parts.front().gic);
  }

  const auto lower = static_cast<double>(r.mais);
  r.sandwich_ok = std::all_of(r.scheme_lengths.begin(), r.scheme_lengths.end(),
                              [&](const auto& kv) { return lower <= kv.second; });
  if (r.minrank) {
    r.sandwich_ok = r.sandwich_ok && r.mais <= *r.minrank &&
                    static_cast<double>(*r.minrank) <= gicc;
  }
  if (r.optimality != Optimality::Unknown && !options.inner) {
    r.sandwich_ok = r.sandwich_ok && lower == gicc;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Conjecture sweep

namespace {

void sweep_digraph(const Digraph& d, ConjectureSweepResult& result) {
  ++result.digraphs;
  const std::size_t n = d.vertex_count();
  std::optional<std::size_t> lower;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
    if (n > 1 && std::popcount(m) < 2) continue;
    VertexSet inner;
    for (Vertex v = 1; v <= n; ++v) {
      if (m >> (v - 1) & 1) inner.insert(v);
    }
    auto v = validate_gic(d, inner);
    if (!is_valid(v)) continue;
    ++result.structures;
    if (!lower) lower = mais(d);
    const std::size_t length = n - inner.size() + 1;
    if (*lower < length) result.findings.push_back({d, inner, *lower, length});
  }
}

}  // namespace

ConjectureSweepResult conjecture_sweep(std::size_t max_exhaustive_n,
                                       std::size_t random_trials,
                                       std::size_t max_random_n,
                                       std::uint64_t seed) {
  ConjectureSweepResult result;
  for (std::size_t n = 1; n <= max_exhaustive_n; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = 1; v <= n; ++v) {
        if (u != v) pairs.emplace_back(u, v);
      }
    }
    if (pairs.size() > 24) throw SizeGateError("exhaustive sweep too large");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (bits >> i & 1) arcs.push_back({pairs[i].first, pairs[i].second});
      }
      sweep_digraph(Digraph(n, arcs), result);
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < random_trials && max_random_n >= 2; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, max_random_n - 1);
    const double p = 0.15 + 0.5 * uniform_unit(rng);
    sweep_digraph(gen_random(n, p, rng()), result);
  }
  return result;
}

}  // namespace gicc
