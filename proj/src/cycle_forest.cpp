#include "wseuler/cycle_forest.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wseuler {

CycleForest::CycleForest(std::uint32_t node_count)
    : n_(node_count),
      parent_(static_cast<std::size_t>(node_count) + 1, kNoNode),
      mark_a_(static_cast<std::size_t>(node_count) + 1, 0),
      mark_b_(static_cast<std::size_t>(node_count) + 1, 0) {}

bool CycleForest::contains(NodeId a, NodeId b) const {
  if (a == kNoNode || b == kNoNode || a > n_ || b > n_) return false;
  return parent_[a] == b || parent_[b] == a;
}

void CycleForest::next_stamp() {
  if (++stamp_ == 0) {
    std::fill(mark_a_.begin(), mark_a_.end(), 0);
    std::fill(mark_b_.begin(), mark_b_.end(), 0);
    stamp_ = 1;
  }
}

void CycleForest::evert(NodeId node) {
  NodeId prev = kNoNode;
  NodeId cur = node;
  while (cur != kNoNode) {
    NodeId next = parent_[cur];
    parent_[cur] = prev;
    prev = cur;
    cur = next;
  }
}

std::optional<CycleRecord> CycleForest::insert(const UndirectedEdge& e) {
  const NodeId u = e.u;
  const NodeId v = e.v;
  if (u == kNoNode || v == kNoNode || u > n_ || v > n_ || u == v) {
    throw std::logic_error("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  if (contains(u, v)) {
    throw std::logic_error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} already in forest");
  }

  // Climb from both endpoints in lockstep until one walker steps onto a node
  // the other has visited (the lowest common ancestor) or both hit a root.
  next_stamp();
  NodeId x = v;
  NodeId y = u;
  mark_a_[x] = stamp_;
  mark_b_[y] = stamp_;
  std::uint64_t depth_v = 0;
  std::uint64_t depth_u = 0;
  NodeId lca = kNoNode;
  for (;;) {
    bool moved = false;
    if (parent_[x] != kNoNode) {
      x = parent_[x];
      ++depth_v;
      moved = true;
      if (mark_b_[x] == stamp_) {
        lca = x;
        break;
      }
      mark_a_[x] = stamp_;
    }
    if (parent_[y] != kNoNode) {
      y = parent_[y];
      ++depth_u;
      moved = true;
      if (mark_a_[y] == stamp_) {
        lca = y;
        break;
      }
      mark_b_[y] = stamp_;
    }
    if (!moved) break;
  }

  ++live_;
  peak_ = std::max(peak_, live_);

  if (lca == kNoNode) {
    // Different trees: hang the shallower side below the other endpoint.
    if (depth_v <= depth_u) {
      evert(v);
      parent_[v] = u;
    } else {
      evert(u);
      parent_[u] = v;
    }
    return std::nullopt;
  }

  CycleRecord cycle;
  for (NodeId w = v; w != lca; w = parent_[w]) cycle.nodes.push_back(w);
  cycle.nodes.push_back(lca);
  const std::size_t split = cycle.nodes.size();
  for (NodeId w = u; w != lca; w = parent_[w]) cycle.nodes.push_back(w);
  std::reverse(cycle.nodes.begin() + static_cast<std::ptrdiff_t>(split), cycle.nodes.end());

  // Every node on the path except the lca loses its parent edge.
  for (NodeId w : cycle.nodes) {
    if (w != lca) parent_[w] = kNoNode;
  }
  live_ -= cycle.size();
  return cycle;
}

std::vector<UndirectedEdge> CycleForest::remaining_edges() const {
  std::vector<UndirectedEdge> out;
  out.reserve(live_);
  for (NodeId w = 1; w <= n_; ++w) {
    if (parent_[w] != kNoNode) out.push_back(UndirectedEdge{w, parent_[w]}.canonical());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wseuler
