#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rhhh {

enum class Granularity : uint8_t { Byte, Bit };

enum class HierarchyKind : uint8_t { SrcByte, SrcBit, TwoDimByte };

// One packet's identity. dst is meaningful only under a 2D hierarchy and must
// be zero otherwise; the ingest layer enforces the match.
struct PacketKey {
  uint32_t src = 0;
  uint32_t dst = 0;
};

// A lattice node: how many leading bits each dimension keeps.
struct PrefixPattern {
  uint8_t src_len = 0; // 0..32
  uint8_t dst_len = 0; // 0..32, always 0 in 1D
  friend bool operator==(const PrefixPattern&, const PrefixPattern&) = default;
};

// A masked key. Bits outside the pattern lengths are zero.
struct Prefix {
  PrefixPattern pattern;
  uint32_t src_bits = 0;
  uint32_t dst_bits = 0;
  friend bool operator==(const Prefix&, const Prefix&) = default;
};

constexpr uint32_t prefix_mask(uint8_t len) {
  return len == 0 ? 0u : ~uint32_t{0} << (32 - len);
}

// Packs the masked bits of a prefix into one hashable word. Prefixes are only
// compared inside a single lattice node, whose pattern is fixed, so the
// pattern itself need not be part of the key.
constexpr uint64_t pack_bits(const Prefix& p) {
  return (static_cast<uint64_t>(p.src_bits) << 32) | p.dst_bits;
}

constexpr Prefix unpack_bits(PrefixPattern pattern, uint64_t bits) {
  return Prefix{pattern, static_cast<uint32_t>(bits >> 32), static_cast<uint32_t>(bits)};
}

// The prefix lattice for one hierarchy: every mask combination, its level, and
// a deterministic node order (level ascending, then src_len/dst_len descending)
// that fixes table indices and output iteration. Immutable after construction.
class HierarchySpec {
public:
  static const HierarchySpec& of(HierarchyKind kind);
  // Only 1D byte, 1D bit and 2D byte exist; 2D bit is a configuration error.
  static const HierarchySpec& make(int dims, Granularity granularity);

  HierarchyKind kind() const { return kind_; }
  int dims() const { return dims_; }
  Granularity granularity() const { return granularity_; }
  int node_count() const { return static_cast<int>(nodes_.size()); } // H
  int depth() const { return depth_; }                               // L
  int step_bits() const { return step_; }

  std::span<const PrefixPattern> nodes() const { return nodes_; }
  bool contains(PrefixPattern p) const { return node_index_or(p) >= 0; }
  // Index of a pattern in nodes(); throws std::invalid_argument if absent.
  int node_index(PrefixPattern p) const;
  // Generalization steps from fully specified; throws if the pattern is not a node.
  int level_of(PrefixPattern p) const;
  // All nodes whose level_of equals level; throws for out-of-range levels.
  std::span<const PrefixPattern> nodes_at_level(int level) const;

private:
  HierarchySpec(HierarchyKind kind, int dims, Granularity granularity);
  int node_index_or(PrefixPattern p) const;

  HierarchyKind kind_;
  int dims_;
  Granularity granularity_;
  int step_;
  int depth_;
  std::vector<PrefixPattern> nodes_;
  std::vector<int> level_offset_; // nodes_[level_offset_[l] .. level_offset_[l+1])
  int index_by_len_[33][33];
};

// Masks a key down to a pattern.
constexpr Prefix generalize(PacketKey key, PrefixPattern pattern) {
  return Prefix{pattern, key.src & prefix_mask(pattern.src_len),
                key.dst & prefix_mask(pattern.dst_len)};
}

// True iff p generalizes q (p "<=" q): in every dimension p's bits are a
// possibly equal prefix of q's bits. Reflexive and transitive.
constexpr bool generalizes(const Prefix& p, const Prefix& q) {
  return p.pattern.src_len <= q.pattern.src_len &&
         p.pattern.dst_len <= q.pattern.dst_len &&
         (q.src_bits & prefix_mask(p.pattern.src_len)) == p.src_bits &&
         (q.dst_bits & prefix_mask(p.pattern.dst_len)) == p.dst_bits;
}

constexpr bool strictly_generalizes(const Prefix& p, const Prefix& q) {
  return !(p == q) && generalizes(p, q);
}

// G(q|pset): the members of pset strictly below q with no other pset member
// strictly between them and q. Output elements are pairwise incomparable.
std::vector<Prefix> best_generalized(const Prefix& q, std::span<const Prefix> pset);

// Greatest lower bound: the most general common descendant of a and b, taking
// the more specific pattern per dimension, or nullopt when the bit strings are
// incompatible (callers treat that as an item with count 0).
std::optional<Prefix> glb(const Prefix& a, const Prefix& b);

// Rendering: "a.b.c.d/len" in 1D, "src/len|dst/len" in 2D.
std::string to_string(const Prefix& p, int dims);
std::string to_string(PacketKey key, int dims);

// Strict dotted-quad parser; nullopt on any malformed input.
std::optional<uint32_t> parse_ipv4(std::string_view text);

} // namespace rhhh
