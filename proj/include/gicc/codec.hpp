#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gicc/digraph.hpp"
#include "gicc/gic_structure.hpp"

namespace gicc {

/// Fixed-length bit string. Bit k lives in byte k / 8, most significant bit
/// first; padding bits in the last byte are always zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t bits);

  std::size_t bits() const { return bits_; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool get(std::size_t k) const;
  void set(std::size_t k, bool value);
  bool is_zero() const;

  /// XOR in place; both operands must have the same length.
  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }
  friend bool operator==(const BitString&, const BitString&) = default;

  /// Lowercase hex of ceil(bits / 8) bytes.
  std::string to_hex() const;
  static BitString from_hex(std::string_view hex, std::size_t bits);
  /// "0101..." style, bit 0 first.
  static BitString from_binary(std::string_view binary);
  static BitString random(std::size_t bits, std::mt19937_64& rng);

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint8_t> bytes_;
};

/// x_1..x_N, each t bits long.
struct MessageVector {
  std::size_t t = 1;
  std::vector<BitString> payloads;

  const BitString& operator[](Vertex v) const { return payloads.at(v - 1); }
  std::size_t size() const { return payloads.size(); }

  static MessageVector zeros(std::size_t n, std::size_t t);
  static MessageVector random(std::size_t n, std::size_t t, std::uint64_t seed);
  /// The vector whose bit 0 of x_v is bit (v - 1) of `pattern`; t = 1.
  static MessageVector from_pattern(std::size_t n, std::uint64_t pattern);
};

/// "t=<bits>" then one lowercase hex line per message.
MessageVector parse_messages(std::string_view text);
std::string serialize_messages(const MessageVector& m);

struct CodedSymbol {
  VertexSet mask;
  BitString payload;

  friend bool operator==(const CodedSymbol&, const CodedSymbol&) = default;
};

/// w_I first, then w_j for every non-inner j ascending.
struct IndexCode {
  std::size_t t = 1;
  std::vector<CodedSymbol> symbols;

  std::size_t length() const { return symbols.size(); }
};

/// One "mask=<v,v,...> payload=<hex>" line per symbol.
std::string render_symbols(const IndexCode& code);

class CodecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// XOR of the messages over a mask; counts t bit operations per XOR when
/// `xor_ops` is given.
BitString xor_over(const MessageVector& m, const VertexSet& mask,
                   std::uint64_t* xor_ops = nullptr);

IndexCode encode(const GicStructure& g, const MessageVector& m,
                 std::uint64_t* xor_ops = nullptr);

/// N - K + 1.
std::size_t code_length(const GicStructure& g);

/// t * ((K - 1) + sum over non-inner v of |N+(v)|).
std::uint64_t xor_cost_bound(const GicStructure& g, std::size_t t);

/// Side information handed to one receiver: message per cached vertex.
using SideInfo = std::map<Vertex, BitString>;

SideInfo side_information(const Digraph& d, const MessageVector& m, Vertex v);

BitString decode_noninner(const GicStructure& g, const IndexCode& code,
                          Vertex j, const SideInfo& side);

BitString decode_inner(const GicStructure& g, const IndexCode& code, Vertex i,
                       const SideInfo& side);

/// Dispatches on whether v is inner.
BitString decode(const GicStructure& g, const IndexCode& code, Vertex v,
                 const SideInfo& side);

bool round_trip(const GicStructure& g, const MessageVector& m);

/// Mask of Z_i: symmetric difference of the w_j masks over non-inner
/// vertices of T_i.
VertexSet z_mask(const GicStructure& g, Vertex i);

/// Mask-level decodability for every receiver; independent of t.
bool symbolic_decode_check(const GicStructure& g);

VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b);

}  // namespace gicc
