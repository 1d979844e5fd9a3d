#include "wseuler/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace wseuler {

namespace {

std::string edge_str(const DirectedEdge& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// SuccessorFunction

SuccessorFunction SuccessorFunction::from_pairs(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  SuccessorFunction f;
  f.edges_.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].first == pairs[i - 1].first) {
      throw std::invalid_argument("edge " + edge_str(pairs[i].first) + " mapped twice");
    }
    f.edges_.push_back(pairs[i].first);
  }
  f.next_.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [e, img] = pairs[i];
    if (img.tail != e.head) {
      throw std::invalid_argument("successor " + edge_str(img) + " does not start at head of " + edge_str(e));
    }
    auto it = std::lower_bound(f.edges_.begin(), f.edges_.end(), img);
    if (it == f.edges_.end() || *it != img) {
      throw std::invalid_argument("successor " + edge_str(img) + " is not in the edge set");
    }
    f.next_[i] = static_cast<std::size_t>(it - f.edges_.begin());
  }
  return f;
}

bool SuccessorFunction::contains(const DirectedEdge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t SuccessorFunction::index_of(const DirectedEdge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw std::out_of_range("edge " + edge_str(e) + " not in domain");
  return static_cast<std::size_t>(it - edges_.begin());
}

DirectedEdge SuccessorFunction::operator()(const DirectedEdge& e) const {
  return edges_[next_[index_of(e)]];
}

bool SuccessorFunction::is_bijective() const {
  std::vector<std::uint8_t> hit(next_.size(), 0);
  for (auto j : next_) {
    if (hit[j]) return false;
    hit[j] = 1;
  }
  return true;
}

std::vector<SuccessorFunction::Pair> SuccessorFunction::pairs() const {
  std::vector<Pair> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out.emplace_back(edges_[i], edges_[next_[i]]);
  return out;
}

// ---------------------------------------------------------------------------
// Orbits

std::size_t ClassPartition::block_of(const DirectedEdge& e) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), e)) return b;
  }
  throw std::out_of_range("edge " + edge_str(e) + " not in partition");
}

std::vector<std::size_t> orbit_ids(const SuccessorFunction& f) {
  if (!f.is_bijective()) throw NotBijectiveError("successor function is not bijective");
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(f.size(), kUnset);
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < f.size(); ++start) {
    if (id[start] != kUnset) continue;
    std::size_t cur = start;
    while (id[cur] == kUnset) {
      id[cur] = orbits;
      cur = f.next_index(cur);
    }
    if (cur != start) throw std::logic_error("orbit walk did not return to its start");
    ++orbits;
  }
  return id;
}

ClassPartition orbit_partition(const SuccessorFunction& f) {
  const auto id = orbit_ids(f);
  const std::size_t count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  ClassPartition p;
  p.blocks.resize(count);
  // edges() is sorted, so blocks come out sorted and in order of first element.
  for (std::size_t i = 0; i < f.size(); ++i) p.blocks[id[i]].push_back(f.edges()[i]);
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

SuccessorFunction swap_successors(const SuccessorFunction& f,
                                  std::span<const SuccessorFunction::Pair> pairs) {
  if (pairs.empty()) return f;
  std::vector<std::size_t> id;
  try {
    id = orbit_ids(f);
  } catch (const NotBijectiveError&) {
    throw SwapPreconditionError("swap requires a bijective successor function");
  }

  auto index = [&](const DirectedEdge& e) {
    if (!f.contains(e)) throw SwapPreconditionError("edge " + edge_str(e) + " not in domain");
    return f.index_of(e);
  };

  const std::size_t home = id[index(pairs.front().first)];
  std::unordered_set<std::size_t> used_edges;
  std::unordered_set<std::size_t> used_orbits;
  for (const auto& [e, e2] : pairs) {
    const auto i = index(e);
    const auto i2 = index(e2);
    if (e.head != e2.head) {
      throw SwapPreconditionError("swap pair " + edge_str(e) + "/" + edge_str(e2) + " does not share a head node");
    }
    if (id[i] != home) throw SwapPreconditionError("edge " + edge_str(e) + " is outside the merging orbit");
    if (id[i2] == home) throw SwapPreconditionError("edge " + edge_str(e2) + " shares the merging orbit");
    if (!used_orbits.insert(id[i2]).second) {
      throw SwapPreconditionError("two partner edges lie in one orbit (" + edge_str(e2) + ")");
    }
    if (!used_edges.insert(i).second) throw SwapPreconditionError("edge " + edge_str(e) + " swapped twice");
  }

  auto out = f.pairs();
  for (const auto& [e, e2] : pairs) {
    const auto i = f.index_of(e);
    const auto i2 = f.index_of(e2);
    out[i].second = f.edges()[f.next_index(i2)];
    out[i2].second = f.edges()[f.next_index(i)];
  }
  auto swapped = SuccessorFunction::from_pairs(std::move(out));
  if (!swapped.is_bijective()) throw std::logic_error("swap produced a non-bijective function");
  return swapped;
}

SuccessorFunction cycle_successor_function(std::span<const CycleRecord> cycles) {
  std::vector<SuccessorFunction::Pair> pairs;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) pairs.emplace_back(c.out_edge(i), c.out_edge((i + 1) % c.size()));
  }
  return SuccessorFunction::from_pairs(std::move(pairs));
}

SuccessorFunction successor_function_from_triples(std::span<const SuccessorTriple> triples) {
  std::vector<SuccessorFunction::Pair> pairs;
  pairs.reserve(triples.size());
  for (const auto& t : triples) pairs.emplace_back(t.edge(), t.successor());
  return SuccessorFunction::from_pairs(std::move(pairs));
}

// ---------------------------------------------------------------------------
// Tour verification

const char* to_string(Failure f) {
  switch (f) {
    case Failure::missing_edge: return "missing-edge";
    case Failure::duplicate_edge: return "duplicate-edge";
    case Failure::bad_successor_head: return "bad-successor-head";
    case Failure::not_bijective: return "not-bijective";
    case Failure::multiple_classes: return "multiple-classes";
    case Failure::foreign_edge: return "foreign-edge";
  }
  return "unknown";
}

namespace {

Verdict fail(Failure f, std::vector<DirectedEdge> witness, std::string detail) {
  Verdict v;
  v.ok = false;
  v.failure = f;
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

}  // namespace

Verdict verify_tour(std::span<const SuccessorTriple> triples, std::uint32_t node_count,
                    std::span<const UndirectedEdge> edges) {
  // Graph edge -> index of the triple that carries it.
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::unordered_map<std::uint64_t, std::size_t> carrier;
  carrier.reserve(edges.size() * 2);
  for (const auto& e : edges) carrier.emplace(pair_key(e.u, e.v), kNone);

  auto in_range = [&](NodeId x) { return x >= 1 && x <= node_count; };

  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    const auto e = t.edge();
    auto it = (in_range(t.v1) && in_range(t.v2)) ? carrier.find(pair_key(t.v1, t.v2)) : carrier.end();
    if (it == carrier.end()) return fail(Failure::foreign_edge, {e}, "triple edge is not a graph edge");
    if (it->second != kNone) {
      return fail(Failure::duplicate_edge, {triples[it->second].edge(), e}, "graph edge written twice");
    }
    it->second = i;
  }
  for (const auto& e : edges) {
    if (carrier.at(pair_key(e.u, e.v)) == kNone) {
      return fail(Failure::missing_edge, {{e.u, e.v}}, "graph edge never written");
    }
  }

  // Successor must be a graph edge, and in the orientation the tour uses.
  std::vector<std::size_t> next(triples.size());
  std::vector<std::size_t> indegree(triples.size(), 0);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    const auto succ = t.successor();
    auto it = in_range(t.s) ? carrier.find(pair_key(t.v2, t.s)) : carrier.end();
    if (t.s == t.v2 || it == carrier.end()) {
      return fail(Failure::bad_successor_head, {t.edge(), succ}, "successor is not an edge leaving the head");
    }
    const auto j = it->second;
    if (triples[j].edge() != succ) {
      return fail(Failure::not_bijective, {t.edge(), succ},
                  "successor names an edge the tour traverses as " + edge_str(triples[j].edge()));
    }
    next[i] = j;
    if (++indegree[j] > 1) {
      return fail(Failure::not_bijective, {t.edge(), succ}, "edge is the successor of two edges");
    }
  }

  if (!triples.empty()) {
    std::size_t cur = 0;
    std::size_t steps = 0;
    do {
      cur = next[cur];
      ++steps;
    } while (cur != 0);
    if (steps != triples.size()) {
      // Report a representative of some other orbit.
      std::vector<std::uint8_t> seen(triples.size(), 0);
      cur = 0;
      do {
        seen[cur] = 1;
        cur = next[cur];
      } while (cur != 0);
      const auto other = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
      return fail(Failure::multiple_classes, {triples[0].edge(), triples[other].edge()},
                  "first orbit has " + std::to_string(steps) + " of " + std::to_string(triples.size()) + " edges");
    }
  }
  return Verdict{};
}

// ---------------------------------------------------------------------------
// Oracle

EulerianConditions eulerian_conditions(std::uint32_t node_count, std::span<const UndirectedEdge> edges) {
  EulerianConditions out;
  std::vector<std::uint64_t> degree(static_cast<std::size_t>(node_count) + 1, 0);
  std::vector<NodeId> parent(static_cast<std::size_t>(node_count) + 1);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
    parent[find(e.u)] = find(e.v);
  }
  NodeId root = kNoNode;
  for (NodeId v = 1; v <= node_count; ++v) {
    if (degree[v] == 0) continue;
    if (degree[v] % 2 != 0) out.even_degrees = false;
    const auto r = find(v);
    if (root == kNoNode) {
      root = r;
    } else if (r != root) {
      out.connected = false;
    }
  }
  return out;
}

std::optional<std::vector<NodeId>> hierholzer_oracle(std::uint32_t node_count,
                                                     std::span<const UndirectedEdge> edges) {
  if (!eulerian_conditions(node_count, edges).eulerian()) return std::nullopt;
  if (edges.empty()) return std::vector<NodeId>{};

  // Incidence lists over edge indices.
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj(static_cast<std::size_t>(node_count) + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].emplace_back(edges[i].v, i);
    adj[edges[i].v].emplace_back(edges[i].u, i);
  }
  std::vector<std::uint8_t> used(edges.size(), 0);
  std::vector<std::size_t> cursor(adj.size(), 0);
  std::vector<NodeId> stack{edges.front().u};
  std::vector<NodeId> walk;
  walk.reserve(edges.size() + 1);
  while (!stack.empty()) {
    const NodeId v = stack.back();
    auto& c = cursor[v];
    while (c < adj[v].size() && used[adj[v][c].second]) ++c;
    if (c == adj[v].size()) {
      walk.push_back(v);
      stack.pop_back();
    } else {
      used[adj[v][c].second] = 1;
      stack.push_back(adj[v][c].first);
    }
  }
  if (walk.size() != edges.size() + 1) return std::nullopt;
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace wseuler
