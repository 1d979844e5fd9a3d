#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wseuler/types.hpp"

namespace wseuler {

/// A simple cycle (v1, ..., vk), k >= 3, read cyclically: v0 = vk, v(k+1) = v1.
struct CycleRecord {
  std::vector<NodeId> nodes;

  std::size_t size() const { return nodes.size(); }

  /// Cyclic index; any integer offset is accepted.
  NodeId at(std::ptrdiff_t i) const {
    const auto k = static_cast<std::ptrdiff_t>(nodes.size());
    return nodes[static_cast<std::size_t>(((i % k) + k) % k)];
  }

  /// Edge entering position i, (v(i-1), v(i)).
  DirectedEdge in_edge(std::size_t i) const {
    return {at(static_cast<std::ptrdiff_t>(i) - 1), nodes[i]};
  }
  /// Edge leaving position i, (v(i), v(i+1)).
  DirectedEdge out_edge(std::size_t i) const {
    return {nodes[i], at(static_cast<std::ptrdiff_t>(i) + 1)};
  }
};

/// The internal edge buffer. Kept acyclic: every insertion that closes a
/// cycle returns that cycle and removes its edges.
///
/// Stored as a rooted forest with one parent pointer per node. Finding the
/// tree path between two nodes climbs from both ends; linking two trees
/// reroots the shallower one. All operations are O(tree depth) <= O(n).
class CycleForest {
 public:
  explicit CycleForest(std::uint32_t node_count);

  /// Adds e. If e closes a cycle, the cycle is returned and all of its edges
  /// (including e) are gone from the forest on return. The cycle starts at
  /// e.v, follows the tree path to e.u and closes with (e.u, e.v).
  ///
  /// Throws std::logic_error if e is already present or out of range.
  std::optional<CycleRecord> insert(const UndirectedEdge& e);

  bool contains(NodeId a, NodeId b) const;

  /// Edges currently held, canonical (min, max) form, sorted.
  std::vector<UndirectedEdge> remaining_edges() const;

  std::uint32_t node_count() const { return n_; }
  std::uint64_t live_edge_count() const { return live_; }
  /// Maximum size reached, counted after each insertion before any removal.
  std::uint64_t peak_edge_count() const { return peak_; }

 private:
  void next_stamp();
  void evert(NodeId root_to_be);

  std::uint32_t n_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> mark_a_;
  std::vector<std::uint32_t> mark_b_;
  std::uint32_t stamp_ = 0;
  std::uint64_t live_ = 0;
  std::uint64_t peak_ = 0;
};

}  // namespace wseuler
