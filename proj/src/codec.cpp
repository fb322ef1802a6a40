#include "gicc/codec.hpp"

#include <algorithm>
#include <charconv>

namespace gicc {

// ---------------------------------------------------------------------------
// BitString

BitString::BitString(std::size_t bits) : bits_(bits), bytes_((bits + 7) / 8) {}

bool BitString::get(std::size_t k) const {
  if (k >= bits_) throw std::out_of_range("bit index out of range");
  return (bytes_[k / 8] >> (7 - k % 8)) & 1u;
}

void BitString::set(std::size_t k, bool value) {
  if (k >= bits_) throw std::out_of_range("bit index out of range");
  const auto bit = static_cast<std::uint8_t>(1u << (7 - k % 8));
  if (value) {
    bytes_[k / 8] |= bit;
  } else {
    bytes_[k / 8] &= static_cast<std::uint8_t>(~bit);
  }
}

bool BitString::is_zero() const {
  return std::all_of(bytes_.begin(), bytes_.end(),
                     [](std::uint8_t b) { return b == 0; });
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.bits_ != bits_) throw CodecError("bit length mismatch");
  for (std::size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
  return *this;
}

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xf];
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bits) {
  BitString out(bits);
  if (hex.size() != out.bytes_.size() * 2) {
    throw CodecError("expected " + std::to_string(out.bytes_.size() * 2) +
                     " hex digits for " + std::to_string(bits) + " bits");
  }
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  for (std::size_t i = 0; i < out.bytes_.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw CodecError("invalid lowercase hex digit");
    out.bytes_[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  if (bits % 8 != 0) {
    const auto padding = static_cast<std::uint8_t>((1u << (8 - bits % 8)) - 1);
    if (out.bytes_.back() & padding) {
      throw CodecError("nonzero padding bits");
    }
  }
  return out;
}

BitString BitString::from_binary(std::string_view binary) {
  BitString out(binary.size());
  for (std::size_t k = 0; k < binary.size(); ++k) {
    if (binary[k] != '0' && binary[k] != '1') {
      throw CodecError("binary string may only contain 0 and 1");
    }
    out.set(k, binary[k] == '1');
  }
  return out;
}

BitString BitString::random(std::size_t bits, std::mt19937_64& rng) {
  BitString out(bits);
  for (auto& b : out.bytes_) b = static_cast<std::uint8_t>(rng() >> 56);
  if (bits % 8 != 0) {
    out.bytes_.back() &= static_cast<std::uint8_t>(0xff << (8 - bits % 8));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Messages

MessageVector MessageVector::zeros(std::size_t n, std::size_t t) {
  return {t, std::vector<BitString>(n, BitString(t))};
}

MessageVector MessageVector::random(std::size_t n, std::size_t t,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MessageVector m{t, {}};
  m.payloads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.payloads.push_back(BitString::random(t, rng));
  return m;
}

MessageVector MessageVector::from_pattern(std::size_t n,
                                          std::uint64_t pattern) {
  MessageVector m = zeros(n, 1);
  for (std::size_t i = 0; i < n; ++i) m.payloads[i].set(0, (pattern >> i) & 1);
  return m;
}

MessageVector parse_messages(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty() || !lines[0].starts_with("t=")) {
    throw CodecError("message file must start with \"t=<bits>\"");
  }
  std::size_t t = 0;
  auto tv = lines[0].substr(2);
  auto [ptr, ec] = std::from_chars(tv.data(), tv.data() + tv.size(), t);
  if (ec != std::errc{} || ptr != tv.data() + tv.size() || t == 0) {
    throw CodecError("t must be a positive integer");
  }
  MessageVector m{t, {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      m.payloads.push_back(BitString::from_hex(lines[i], t));
    } catch (const CodecError& e) {
      throw CodecError("message line " + std::to_string(i + 1) + ": " +
                       e.what());
    }
  }
  return m;
}

std::string serialize_messages(const MessageVector& m) {
  std::string out = "t=" + std::to_string(m.t);
  for (const auto& p : m.payloads) out += "\n" + p.to_hex();
  return out;
}

// ---------------------------------------------------------------------------
// Encoding

std::string render_symbols(const IndexCode& code) {
  std::string out;
  for (const auto& s : code.symbols) {
    if (!out.empty()) out += "\n";
    out += "mask=";
    bool first = true;
    for (Vertex v : s.mask) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    out += " payload=" + s.payload.to_hex();
  }
  return out;
}

BitString xor_over(const MessageVector& m, const VertexSet& mask,
                   std::uint64_t* xor_ops) {
  BitString acc(m.t);
  bool first = true;
  for (Vertex v : mask) {
    if (first) {
      acc = m[v];
      first = false;
      continue;
    }
    acc ^= m[v];
    if (xor_ops) *xor_ops += m.t;
  }
  return acc;
}

namespace {

void check_sizes(const GicStructure& g, const MessageVector& m) {
  if (m.size() != g.vertex_count()) {
    throw CodecError("message vector has " + std::to_string(m.size()) +
                     " payloads for " + std::to_string(g.vertex_count()) +
                     " vertices");
  }
  for (const auto& p : m.payloads) {
    if (p.bits() != m.t) throw CodecError("payload length differs from t");
  }
}

VertexSet noninner_mask(const Digraph& d, Vertex j) {
  VertexSet mask = out_neighbors(d, j);
  mask.insert(j);
  return mask;
}

/// Position of w_j in the code: w_I at 0, then non-inner vertices ascending.
std::size_t symbol_index(const GicStructure& g, Vertex j) {
  std::size_t inner_below = 0;
  for (Vertex i : g.inner()) {
    if (i < j) ++inner_below;
  }
  return 1 + (j - 1 - inner_below);
}

const CodedSymbol& symbol_for(const GicStructure& g, const IndexCode& code,
                              Vertex j) {
  std::size_t idx = symbol_index(g, j);
  if (idx >= code.symbols.size()) throw CodecError("code is too short");
  return code.symbols[idx];
}

const BitString& side_entry(const SideInfo& side, Vertex q, Vertex receiver) {
  auto it = side.find(q);
  if (it == side.end()) {
    throw CodecError("receiver " + std::to_string(receiver) +
                     " lacks side information for x_" + std::to_string(q));
  }
  return it->second;
}

}  // namespace

IndexCode encode(const GicStructure& g, const MessageVector& m,
                 std::uint64_t* xor_ops) {
  check_sizes(g, m);
  IndexCode code{m.t, {}};
  code.symbols.reserve(code_length(g));
  code.symbols.push_back({g.inner(), xor_over(m, g.inner(), xor_ops)});
  for (Vertex j : g.non_inner()) {
    VertexSet mask = noninner_mask(g.digraph(), j);
    BitString payload = xor_over(m, mask, xor_ops);
    code.symbols.push_back({std::move(mask), std::move(payload)});
  }
  return code;
}

std::size_t code_length(const GicStructure& g) {
  return g.vertex_count() - g.inner_count() + 1;
}

std::uint64_t xor_cost_bound(const GicStructure& g, std::size_t t) {
  std::uint64_t ops = g.inner_count() - 1;
  for (Vertex v : g.non_inner()) ops += g.digraph().out_degree(v);
  return ops * t;
}

// ---------------------------------------------------------------------------
// Decoding

SideInfo side_information(const Digraph& d, const MessageVector& m, Vertex v) {
  SideInfo side;
  for (Vertex q : d.out(v)) side.emplace(q, m[q]);
  return side;
}

BitString decode_noninner(const GicStructure& g, const IndexCode& code,
                          Vertex j, const SideInfo& side) {
  if (!g.digraph().contains(j) || g.is_inner(j)) {
    throw CodecError("vertex " + std::to_string(j) + " is not non-inner");
  }
  const CodedSymbol& w = symbol_for(g, code, j);
  BitString x = w.payload;
  for (Vertex q : g.digraph().out(j)) x ^= side_entry(side, q, j);
  return x;
}

VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

VertexSet z_mask(const GicStructure& g, Vertex i) {
  VertexSet mask;
  for (Vertex j : g.tree(i).vertices()) {
    if (g.is_inner(j)) continue;
    mask = symmetric_difference(mask, noninner_mask(g.digraph(), j));
  }
  return mask;
}

BitString decode_inner(const GicStructure& g, const IndexCode& code, Vertex i,
                       const SideInfo& side) {
  if (!g.is_inner(i)) {
    throw CodecError("vertex " + std::to_string(i) + " is not inner");
  }
  if (code.symbols.empty()) throw CodecError("empty code");

  // w_I xor Z_i, tracked at payload and mask level.
  BitString acc = code.symbols.front().payload;
  VertexSet mask = code.symbols.front().mask;
  for (Vertex j : g.tree(i).vertices()) {
    if (g.is_inner(j)) continue;
    const CodedSymbol& w = symbol_for(g, code, j);
    acc ^= w.payload;
    mask = symmetric_difference(mask, w.mask);
  }

  VertexSet expected = out_neighbors(g.digraph(), i);
  expected.insert(i);
  if (mask != expected) {
    throw CodecError("receiver " + std::to_string(i) + " combination has mask " +
                     to_string(mask) + ", expected " + to_string(expected));
  }
  for (Vertex q : mask) {
    if (q != i) acc ^= side_entry(side, q, i);
  }
  return acc;
}

BitString decode(const GicStructure& g, const IndexCode& code, Vertex v,
                 const SideInfo& side) {
  return g.is_inner(v) ? decode_inner(g, code, v, side)
                       : decode_noninner(g, code, v, side);
}

bool round_trip(const GicStructure& g, const MessageVector& m) {
  const IndexCode code = encode(g, m);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    try {
      if (decode(g, code, v, side_information(g.digraph(), m, v)) != m[v]) {
        return false;
      }
    } catch (const CodecError&) {
      return false;
    }
  }
  return true;
}

bool symbolic_decode_check(const GicStructure& g) {
  const Digraph& d = g.digraph();
  for (Vertex j : g.non_inner()) {
    VertexSet residue = noninner_mask(d, j);
    for (Vertex q : d.out(j)) residue.erase(q);
    if (residue != VertexSet{j}) return false;
  }
  for (Vertex i : g.inner()) {
    VertexSet residue = symmetric_difference(g.inner(), z_mask(g, i));
    for (Vertex q : d.out(i)) residue.erase(q);
    if (residue != VertexSet{i}) return false;
  }
  return true;
}

}  // namespace gicc
