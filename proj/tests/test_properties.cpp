// Invariants checked over a seeded pool of validated structures: cover parts
// of random digraphs, interlinked-cycle instances, and the family members.
#include <doctest.h>

#include "gicc/bounds.hpp"
#include "gicc/codec.hpp"
#include "gicc/cover.hpp"
#include "gicc/generators.hpp"
#include "oracles.hpp"

using namespace gicc;

namespace {

std::vector<GicStructure> structure_pool() {
  std::vector<GicStructure> pool;
  auto add = [&](const Digraph& d, const VertexSet& inner) {
    auto v = validate_gic(d, inner);
    REQUIRE(is_valid(v));
    pool.push_back(std::get<GicStructure>(std::move(v)));
  };
  for (std::uint64_t seed = 0; pool.size() < 150 && seed < 2000; ++seed) {
    const Digraph d = gen_random(4 + seed % 7, 0.25 + 0.05 * (seed % 5), seed);
    for (const CoverPart& p : gicc_cover(d).parts) pool.push_back(p.gic);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = icc_to_gic(gen_icc_random(2 + seed % 3, 3, 2, seed));
    add(inst.graph, inst.inner);
  }
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto fam = gen_family_vb(k);
    add(fam.graph, fam.inner);
  }
  const auto fig = gen_fig4a_equivalent();
  add(fig.graph, fig.inner);
  return pool;
}

const std::vector<GicStructure>& pool() {
  static const std::vector<GicStructure> p = structure_pool();
  return p;
}

}  // namespace

TEST_CASE("pool size") { CHECK(pool().size() >= 200); }

TEST_CASE("validated structures satisfy both conditions and cover the digraph") {
  for (const auto& g : pool()) {
    const Digraph& d = g.digraph();
    CHECK(detect_i_cycles(d, g.inner()).empty());
    for (const auto& [pair, c] : check_p_path_uniqueness(d, g.inner()).counts) {
      CHECK(c.count == 1);
    }
    std::set<Arc> covered;
    for (const auto& [root, tree] : g.trees()) {
      for (const Arc& a : tree.arcs()) covered.insert(a);
    }
    const auto arcs = d.arcs();
    CHECK(std::set<Arc>(arcs.begin(), arcs.end()) == covered);
  }
}

TEST_CASE("tree shape") {
  for (const auto& g : pool()) {
    const std::size_t bound = g.vertex_count() - g.inner_count() + 1;
    for (const auto& [root, tree] : g.trees()) {
      CHECK(tree.depth_of().at(root) == 0);
      CHECK(tree.height() >= 1);
      CHECK(tree.height() <= bound);
      VertexSet leaves;
      for (const auto& [child, parent] : tree.parent_of()) {
        CHECK(g.digraph().has_arc(parent, child));
        CHECK(tree.depth_of().at(child) == tree.depth_of().at(parent) + 1);
        if (parent != root) CHECK_FALSE(g.is_inner(parent));
        if (tree.is_leaf(child)) leaves.insert(child);
      }
      VertexSet expected = g.inner();
      expected.erase(root);
      CHECK(leaves == expected);
    }
  }
}

TEST_CASE("child sets match out-neighbourhoods") {
  for (const auto& g : pool()) {
    CHECK(check_tree_consistency(g));
    for (const auto& [root, tree] : g.trees()) {
      CHECK(tree.children(root) == out_neighbors(g.digraph(), root));
      for (const auto& [v, depth] : tree.depth_of()) {
        if (!g.is_inner(v)) CHECK(tree.children(v) == out_neighbors(g.digraph(), v));
      }
    }
  }
}

TEST_CASE("shared vertices fan out to neither root") {
  std::size_t shared = 0;
  for (const auto& g : pool()) {
    for (Vertex v : g.non_inner()) {
      for (const auto& [i, ti] : g.trees()) {
        for (const auto& [j, tj] : g.trees()) {
          if (i >= j || !ti.contains(v) || !tj.contains(v)) continue;
          ++shared;
          for (const VertexSet& leaves : {ti.leaves_below(v), tj.leaves_below(v)}) {
            CHECK_FALSE(leaves.contains(i));
            CHECK_FALSE(leaves.contains(j));
          }
          CHECK(ti.leaves_below(v) == tj.leaves_below(v));
        }
      }
    }
  }
  CHECK(shared > 0);
}

TEST_CASE("every cycle meets zero or at least two inner vertices") {
  for (const auto& g : pool()) {
    if (g.vertex_count() > 10) continue;
    for (const Path& c : enumerate_simple_cycles(g.digraph())) {
      std::size_t inner = 0;
      for (std::size_t k = 0; k + 1 < c.vertices.size(); ++k) {
        inner += g.is_inner(c.vertices[k]) ? 1 : 0;
      }
      CHECK(inner != 1);
    }
  }
}

TEST_CASE("telescoping mask identity") {
  for (const auto& g : pool()) {
    for (Vertex i : g.inner()) {
      const VertexSet out = out_neighbors(g.digraph(), i);
      VertexSet outside;
      for (Vertex q : out) {
        if (!g.is_inner(q)) outside.insert(q);
      }
      VertexSet missing;
      for (Vertex q : g.inner()) {
        if (q != i && !out.contains(q)) missing.insert(q);
      }
      CHECK(z_mask(g, i) == symmetric_difference(outside, missing));
    }
  }
}

TEST_CASE("codes decode and match their masks") {
  std::uint64_t seed = 0;
  for (const auto& g : pool()) {
    CHECK(symbolic_decode_check(g));
    const std::size_t n = g.vertex_count();
    if (n <= 6) {
      for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
        CHECK(round_trip(g, MessageVector::from_pattern(n, p)));
      }
    }
    for (std::size_t t : {1, 8, 33}) {
      const auto m = MessageVector::random(n, t, ++seed);
      CHECK(round_trip(g, m));
      std::uint64_t ops = 0;
      const auto code = encode(g, m, &ops);
      CHECK(code.length() == n - g.inner_count() + 1);
      CHECK(ops <= xor_cost_bound(g, t));
      for (const auto& s : code.symbols) {
        BitString expect(t);
        for (Vertex v : s.mask) expect ^= m[v];
        CHECK(s.payload == expect);
      }
    }
  }
}

TEST_CASE("encoding is linear") {
  std::uint64_t seed = 1000;
  for (const auto& g : pool()) {
    const std::size_t n = g.vertex_count();
    const auto a = MessageVector::random(n, 16, ++seed);
    const auto b = MessageVector::random(n, 16, ++seed);
    MessageVector sum = a;
    for (std::size_t i = 0; i < n; ++i) sum.payloads[i] ^= b.payloads[i];
    const auto ca = encode(g, a);
    const auto cb = encode(g, b);
    const auto cs = encode(g, sum);
    for (std::size_t s = 0; s < cs.length(); ++s) {
      CHECK(cs.symbols[s].payload == (ca.symbols[s].payload ^ cb.symbols[s].payload));
    }
  }
}

TEST_CASE("mask correctness over random instance/message pairs") {
  std::mt19937_64 rng(2024);
  const auto& p = pool();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& g = p[uniform_below(rng, p.size())];
    const std::size_t t = 1 + uniform_below(rng, 40);
    const auto m = MessageVector::random(g.vertex_count(), t, rng());
    for (const auto& s : encode(g, m).symbols) {
      BitString expect(t);
      for (Vertex v : s.mask) expect ^= m[v];
      CHECK(s.payload == expect);
    }
  }
}

TEST_CASE("validation is a pure function") {
  for (const auto& g : pool()) {
    auto again = validate_gic(g.digraph(), g.inner());
    REQUIRE(is_valid(again));
    CHECK(std::get<GicStructure>(again).trees() == g.trees());
  }
}

TEST_CASE("optimality and bounds on the pool") {
  for (const auto& g : pool()) {
    const std::size_t n = g.vertex_count();
    const std::size_t length = n - g.inner_count() + 1;
    CHECK(certify_theorem4(g) == Optimality::Case1);
    CHECK(mais(g.digraph()) == length);
    if (g.digraph().arc_count() <= 16) CHECK(minrank_gf2(g.digraph()) == length);
  }
}
