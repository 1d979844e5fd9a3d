#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <utility>

namespace wseuler {

/// Node ids are 1-based; 0 is reserved for "none".
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0;

/// An ordered node pair. Successor functions act on these.
struct DirectedEdge {
  NodeId tail = kNoNode;
  NodeId head = kNoNode;

  DirectedEdge reversed() const { return {head, tail}; }

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// An undirected edge in the order it was read from the stream.
struct UndirectedEdge {
  NodeId u = kNoNode;
  NodeId v = kNoNode;

  NodeId low() const { return u < v ? u : v; }
  NodeId high() const { return u < v ? v : u; }
  /// (min, max) form used for set membership.
  UndirectedEdge canonical() const { return {low(), high()}; }
  bool same_pair(const UndirectedEdge& o) const {
    return low() == o.low() && high() == o.high();
  }

  friend auto operator<=>(const UndirectedEdge&, const UndirectedEdge&) = default;
};

/// Output record (v1, v2, s): the successor of edge (v1, v2) is (v2, s).
struct SuccessorTriple {
  NodeId v1 = kNoNode;
  NodeId v2 = kNoNode;
  NodeId s = kNoNode;

  DirectedEdge edge() const { return {v1, v2}; }
  DirectedEdge successor() const { return {v2, s}; }

  friend auto operator<=>(const SuccessorTriple&, const SuccessorTriple&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const DirectedEdge& e) {
  return os << '(' << e.tail << ',' << e.head << ')';
}
inline std::ostream& operator<<(std::ostream& os, const UndirectedEdge& e) {
  return os << '{' << e.u << ',' << e.v << '}';
}
inline std::ostream& operator<<(std::ostream& os, const SuccessorTriple& t) {
  return os << '(' << t.v1 << ',' << t.v2 << ',' << t.s << ')';
}

/// Packs an unordered pair into one key, for hash sets over edges.
inline std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct DirectedEdgeHash {
  std::size_t operator()(const DirectedEdge& e) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(e.tail) << 32) | e.head);
  }
};

}  // namespace wseuler
