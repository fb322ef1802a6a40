#include <doctest.h>

#include "gicc/cover.hpp"
#include "gicc/generators.hpp"
#include "oracles.hpp"

using namespace gicc;

namespace {

std::vector<Arc> arcs(std::initializer_list<std::pair<Vertex, Vertex>> list) {
  std::vector<Arc> out;
  for (auto [t, h] : list) out.push_back({t, h});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("family K=2") {
  const auto fam = gen_family_vb(2);
  CHECK(fam.graph.vertex_count() == 4);
  CHECK(fam.graph.arcs() == arcs({{1, 3}, {3, 2}, {2, 4}, {4, 1}}));
  CHECK(fam.inner == VertexSet{1, 2});
}

TEST_CASE("family K=4 arc list") {
  const auto fam = gen_family_vb(4);
  const auto expected = arcs({{1, 5}, {5, 2}, {5, 3}, {5, 4}, {2, 6}, {2, 10},
                              {6, 3}, {6, 4}, {3, 7}, {3, 9}, {7, 4}, {9, 1},
                              {9, 2}, {4, 8}, {8, 1}, {8, 2}, {8, 3}, {10, 1}});
  CHECK(fam.graph.vertex_count() == 10);
  CHECK(fam.graph.arcs() == expected);
  // The enumerated rule set yields 18 arcs; a count of 17 miscounts it.
  CHECK(fam.graph.arc_count() == 18);
  CHECK(is_valid(validate_gic(fam.graph, fam.inner)));
}

TEST_CASE("family shape for every K") {
  for (std::size_t k = 2; k <= 9; ++k) {
    const auto fam = gen_family_vb(k);
    const auto& d = fam.graph;
    CHECK(d.vertex_count() == 3 * k - 2);
    for (Vertex u = 1; u <= d.vertex_count(); ++u) {
      for (Vertex v : d.out(u)) {
        CHECK_FALSE(d.has_arc(v, u));  // no digons
        CHECK((fam.inner.contains(u) || fam.inner.contains(v)));
      }
    }
    CHECK(is_valid(validate_gic(d, fam.inner)));
  }
  CHECK_THROWS_AS(gen_family_vb(1), std::invalid_argument);
}

TEST_CASE("reconstruction instance") {
  const auto fig = gen_fig4a_equivalent();
  CHECK(fig.graph.vertex_count() == 6);
  CHECK(fig.graph.arc_count() == 13);
  CHECK(fig.inner == VertexSet{1, 2, 3, 4});
  CHECK(oracle::mais(fig.graph) == 3);
}

TEST_CASE("cliques and cycles") {
  CHECK(gen_clique(2) == parse_digraph("n=2\n1 -> 2\n2 -> 1"));
  CHECK(gen_clique(5).arc_count() == 20);
  CHECK(gen_cycle(4) == parse_digraph("n=4\n1 -> 2\n2 -> 3\n3 -> 4\n4 -> 1"));
  CHECK_THROWS_AS(gen_clique(1), std::invalid_argument);
  CHECK_THROWS_AS(gen_cycle(1), std::invalid_argument);

  VertexSet all{1, 2, 3, 4, 5};
  CHECK(is_valid(validate_gic(gen_clique(5), all)));
  const auto c6 = validate_gic(gen_cycle(6), {1, 2});
  REQUIRE(is_valid(c6));
  CHECK(std::get<GicStructure>(c6).vertex_count() - 2 + 1 == 5);
}

TEST_CASE("random digraphs") {
  CHECK(gen_random(6, 0.0, 1).arc_count() == 0);
  CHECK(gen_random(6, 1.0, 1) == gen_clique(6));
  CHECK(gen_random(9, 0.4, 77) == gen_random(9, 0.4, 77));
  CHECK_FALSE(gen_random(9, 0.4, 77) == gen_random(9, 0.4, 78));
  CHECK_THROWS(gen_random(4, 1.5, 0));
}

TEST_CASE("seeded helpers") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_below(rng, 7) < 7);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform_unit(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  std::vector<int> a{1, 2, 3, 4, 5, 6};
  std::vector<int> b = a;
  std::mt19937_64 r1(9), r2(9);
  seeded_shuffle(a, r1);
  seeded_shuffle(b, r2);
  CHECK(a == b);
}

TEST_CASE("icc descriptions") {
  const auto digon = gen_icc(2, {1, 1}, {{0, 0}, {0, 0}}, 0);
  CHECK(digon.vertex_count() == 2);
  const auto inst = icc_to_gic(digon);
  CHECK(inst.graph == gen_clique(2));
  CHECK(inst.inner == VertexSet{1, 2});

  const auto d3 = gen_icc(3, {2, 1, 1}, {{0, 1, 0}, {0, 0, 2}, {1, 0, 0}}, 4);
  CHECK(d3.vertex_count() == 4 + 4);
  const auto i3 = icc_to_gic(d3);
  CHECK(is_valid(validate_gic(i3.graph, i3.inner)));

  CHECK_THROWS_AS(gen_icc(1, {1}, {{0}}, 0), IccError);
  CHECK_THROWS_AS(gen_icc(2, {0, 1}, {{0, 0}, {0, 0}}, 0), IccError);
  CHECK_THROWS_AS(gen_icc(2, {1, 1}, {{0, 0}}, 0), IccError);
}

TEST_CASE("icc descriptions satisfy the structural points") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t k = 2 + seed % 3;
    const auto desc = gen_icc_random(k, 3, 2, seed);
    CHECK(desc.k() == k);
    VertexSet seen;
    std::size_t total = 0;
    for (const auto& p : desc.paths) {
      seen.insert(p.begin(), p.end());
      total += p.size();
    }
    for (const auto& [pair, c] : desc.connectors) {
      seen.insert(c.vertices.begin(), c.vertices.end());
      total += c.vertices.size();
      const auto& target = desc.paths[pair.second];
      CHECK(std::find(target.begin(), target.end(), c.entry) != target.end());
    }
    CHECK(seen.size() == total);
    CHECK(total == desc.vertex_count());
    CHECK(desc.connectors.size() == k * (k - 1));
    const auto inst = icc_to_gic(desc);
    for (const auto& p : desc.paths) CHECK(inst.graph.in_degree(p.front()) >= 1);
    CHECK(serialize_icc(desc) == serialize_icc(gen_icc_random(k, 3, 2, seed)));
  }
}
