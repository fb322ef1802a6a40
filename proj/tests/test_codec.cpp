#include <doctest.h>

#include "gicc/codec.hpp"
#include "gicc/generators.hpp"

using namespace gicc;

namespace {

GicStructure gic(const Digraph& d, const VertexSet& inner) {
  auto v = validate_gic(d, inner);
  REQUIRE(is_valid(v));
  return std::get<GicStructure>(std::move(v));
}

GicStructure fig4a() {
  const auto inst = gen_fig4a_equivalent();
  return gic(inst.graph, inst.inner);
}

std::vector<VertexSet> masks(const IndexCode& code) {
  std::vector<VertexSet> out;
  for (const auto& s : code.symbols) out.push_back(s.mask);
  return out;
}

}  // namespace

TEST_CASE("bit strings") {
  BitString b(12);
  CHECK(b.is_zero());
  b.set(0, true);
  b.set(11, true);
  CHECK(b.to_hex() == "8010");
  CHECK(BitString::from_hex("8010", 12) == b);
  CHECK_THROWS_AS(BitString::from_hex("8011", 12), CodecError);  // padding
  CHECK_THROWS_AS(BitString::from_hex("801", 12), CodecError);
  CHECK_THROWS_AS(BitString::from_hex("80G0", 12), CodecError);
  CHECK_THROWS_AS(BitString::from_hex("80A0", 12), CodecError);
  CHECK(BitString::from_binary("01").to_hex() == "40");
  BitString c(8);
  CHECK_THROWS_AS(b ^= c, CodecError);
}

TEST_CASE("message files") {
  const auto m = parse_messages("t=4\n30\nf0\n");
  CHECK(m.t == 4);
  CHECK(m.size() == 2);
  CHECK(serialize_messages(m) == "t=4\n30\nf0");
  CHECK_THROWS_AS(parse_messages("4\n30"), CodecError);
  CHECK_THROWS_AS(parse_messages("t=0\n"), CodecError);
  CHECK_THROWS_AS(parse_messages("t=8\nzz"), CodecError);
}

TEST_CASE("fig4a symbols") {
  const auto g = fig4a();
  const auto code = encode(g, MessageVector::zeros(6, 1));
  CHECK(masks(code) ==
        std::vector<VertexSet>{{1, 2, 3, 4}, {2, 3, 5}, {3, 4, 6}});
  for (const auto& s : code.symbols) CHECK(s.payload.is_zero());
  CHECK(code_length(g) == 3);
  CHECK(xor_cost_bound(g, 1) == 7);
  CHECK(render_symbols(code) ==
        "mask=1,2,3,4 payload=00\nmask=2,3,5 payload=00\nmask=3,4,6 payload=00");
}

TEST_CASE("digon symbol") {
  const auto g = gic(gen_clique(2), {1, 2});
  MessageVector m;
  m.t = 2;
  m.payloads = {BitString::from_binary("01"), BitString::from_binary("11")};
  const auto code = encode(g, m);
  REQUIRE(code.length() == 1);
  CHECK(code.symbols[0].mask == VertexSet{1, 2});
  CHECK(code.symbols[0].payload == BitString::from_binary("10"));
  CHECK(xor_cost_bound(g, 1) == 1);
  CHECK(code_length(g) == 1);
}

TEST_CASE("family lengths and cost bound") {
  const auto fam4 = gen_family_vb(4);
  const auto g4 = gic(fam4.graph, fam4.inner);
  CHECK(encode(g4, MessageVector::zeros(10, 1)).length() == 7);
  std::size_t out_sum = 0;
  for (Vertex v : g4.non_inner()) out_sum += fam4.graph.out_degree(v);
  CHECK(out_sum == 12);
  CHECK(xor_cost_bound(g4, 8) == 120);
  const auto fam8 = gen_family_vb(8);
  CHECK(code_length(gic(fam8.graph, fam8.inner)) == 15);
}

TEST_CASE("instrumented xor count stays within the bound") {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto fam = gen_family_vb(k);
    const auto g = gic(fam.graph, fam.inner);
    for (std::size_t t : {1, 8, 64}) {
      std::uint64_t ops = 0;
      encode(g, MessageVector::random(g.vertex_count(), t, k * t), &ops);
      CHECK(ops <= xor_cost_bound(g, t));
    }
  }
}

TEST_CASE("non-inner decoding") {
  const auto g = fig4a();
  for (std::uint64_t pattern = 0; pattern < 64; ++pattern) {
    const auto m = MessageVector::from_pattern(6, pattern);
    const auto code = encode(g, m);
    CHECK(decode_noninner(g, code, 5, side_information(g.digraph(), m, 5)) == m[5]);
  }
  const auto m = MessageVector::random(6, 8, 3);
  const auto code = encode(g, m);
  auto side = side_information(g.digraph(), m, 5);
  side.erase(2);
  CHECK_THROWS_AS(decode_noninner(g, code, 5, side), CodecError);

  const auto fam = gen_family_vb(4);
  const auto g4 = gic(fam.graph, fam.inner);
  const auto m4 = MessageVector::random(10, 16, 9);
  const auto side10 = side_information(fam.graph, m4, 10);
  CHECK(side10.size() == 1);
  CHECK(side10.contains(1));
  CHECK(decode_noninner(g4, encode(g4, m4), 10, side10) == m4[10]);
}

TEST_CASE("inner decoding") {
  const auto g = fig4a();
  CHECK(z_mask(g, 2) == VertexSet{3, 4, 6});
  CHECK(symmetric_difference({1, 2, 3, 4}, z_mask(g, 2)) == VertexSet{1, 2, 6});
  CHECK(z_mask(g, 3).empty());
  const auto m = MessageVector::random(6, 16, 21);
  const auto code = encode(g, m);
  for (Vertex i : {1u, 2u, 3u, 4u}) {
    CHECK(decode_inner(g, code, i, side_information(g.digraph(), m, i)) == m[i]);
  }
  auto side = side_information(g.digraph(), m, 2);
  side.erase(6);
  CHECK_THROWS_AS(decode_inner(g, code, 2, side), CodecError);

  const auto dg = gic(gen_clique(2), {1, 2});
  CHECK(z_mask(dg, 1).empty());
  const auto md = MessageVector::random(2, 8, 1);
  CHECK(decode_inner(dg, encode(dg, md), 1, side_information(dg.digraph(), md, 1)) ==
        md[1]);
}

TEST_CASE("decoding rejects a corrupted code") {
  const auto g = fig4a();
  const auto m = MessageVector::random(6, 8, 5);
  auto code = encode(g, m);
  code.symbols[2].mask.insert(1);  // w_6 feeds Z_2
  CHECK_THROWS_AS(decode_inner(g, code, 2, side_information(g.digraph(), m, 2)),
                  CodecError);
  code = encode(g, m);
  code.symbols.pop_back();
  CHECK_THROWS(decode_noninner(g, code, 6, side_information(g.digraph(), m, 6)));
}

TEST_CASE("exhaustive round trips") {
  const auto g = fig4a();
  for (std::uint64_t p = 0; p < 64; ++p) {
    CHECK(round_trip(g, MessageVector::from_pattern(6, p)));
  }
  const auto dg = gic(gen_clique(2), {1, 2});
  for (std::uint64_t p = 0; p < 4; ++p) {
    CHECK(round_trip(dg, MessageVector::from_pattern(2, p)));
  }
  CHECK(symbolic_decode_check(g));
  CHECK(symbolic_decode_check(dg));
}

TEST_CASE("family round trips") {
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto fam = gen_family_vb(k);
    const auto g = gic(fam.graph, fam.inner);
    CHECK(symbolic_decode_check(g));
    for (std::size_t t : {1, 8, 64}) {
      for (std::uint64_t s = 0; s < 20; ++s) {
        CHECK(round_trip(g, MessageVector::random(g.vertex_count(), t, s)));
      }
    }
  }
}

TEST_CASE("linearity and zero code") {
  const auto fam = gen_family_vb(5);
  const auto g = gic(fam.graph, fam.inner);
  for (std::size_t t : {1, 7, 64}) {
    const auto a = MessageVector::random(g.vertex_count(), t, 100 + t);
    const auto b = MessageVector::random(g.vertex_count(), t, 200 + t);
    MessageVector sum = a;
    for (std::size_t i = 0; i < sum.size(); ++i) sum.payloads[i] ^= b.payloads[i];
    const auto ca = encode(g, a);
    const auto cb = encode(g, b);
    const auto cs = encode(g, sum);
    for (std::size_t s = 0; s < cs.length(); ++s) {
      CHECK(cs.symbols[s].payload == (ca.symbols[s].payload ^ cb.symbols[s].payload));
    }
    for (const auto& s : encode(g, MessageVector::zeros(g.vertex_count(), t)).symbols) {
      CHECK(s.payload.is_zero());
    }
  }
}
