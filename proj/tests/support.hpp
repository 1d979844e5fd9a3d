#pragma once

// Shared helpers for the unit, property and acceptance suites.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "wseuler/euler_core.hpp"
#include "wseuler/gen.hpp"
#include "wseuler/stream_io.hpp"
#include "wseuler/verify.hpp"

namespace wseuler::testing {

inline std::vector<UndirectedEdge> edges_of(std::initializer_list<std::pair<NodeId, NodeId>> list) {
  std::vector<UndirectedEdge> out;
  for (auto [u, v] : list) out.push_back({u, v});
  return out;
}

inline std::string graph_text(std::uint32_t n, const std::vector<UndirectedEdge>& edges) {
  std::ostringstream os;
  write_graph(os, n, edges);
  return os.str();
}

struct RunResult {
  std::string output;
  std::vector<SuccessorTriple> triples;
  RunStats stats;
  std::optional<AlgoErrorKind> error;
  std::uint64_t consumed = 0;
  bool exhausted = false;
  std::uint64_t records = 0;
};

/// Serializes the graph, streams it back through EdgeReader and runs the engine.
inline RunResult run_graph(std::uint32_t n, const std::vector<UndirectedEdge>& edges, Mode mode,
                           RunObserver* observer = nullptr) {
  std::istringstream in(graph_text(n, edges));
  std::ostringstream out;
  EdgeReader reader(in);
  TripleWriter writer(out);
  RunResult r;
  try {
    r.stats = run(reader, writer, mode, observer);
  } catch (const AlgoError& e) {
    r.error = e.kind();
  }
  writer.close();
  r.output = out.str();
  std::istringstream back(r.output);
  r.triples = read_triples(back);
  r.consumed = reader.consumed();
  r.exhausted = reader.exhausted();
  r.records = writer.records();
  return r;
}

/// Collects every cycle the engine merges, in order.
class CycleRecorder : public RunObserver {
 public:
  void on_cycle_merged(const EulerEngine&, const CycleRecord& c) override { cycles.push_back(c); }
  std::vector<CycleRecord> cycles;
};

/// Random edge-disjoint simple cycles over nodes 1..nodes, roughly
/// target_edges edges in total. Short cycles over a small node set make
/// many cycles share nodes.
inline std::vector<CycleRecord> random_cycles(std::mt19937_64& rng, std::uint32_t nodes,
                                              std::size_t target_edges, std::size_t max_len = 7) {
  std::vector<CycleRecord> cycles;
  std::unordered_set<std::uint64_t> used;
  std::size_t total = 0;
  std::vector<NodeId> perm(nodes);
  for (std::uint32_t i = 0; i < nodes; ++i) perm[i] = i + 1;
  int misses = 0;
  while (total + 3 <= target_edges && misses < 200) {
    const std::size_t hi = std::min<std::size_t>({max_len, nodes, target_edges - total});
    const std::size_t len = 3 + uniform_below(rng, hi - 2);
    for (std::size_t i = 0; i < len; ++i) std::swap(perm[i], perm[i + uniform_below(rng, nodes - i)]);
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) ok = used.count(pair_key(perm[i], perm[(i + 1) % len])) == 0;
    if (!ok) {
      ++misses;
      continue;
    }
    misses = 0;
    CycleRecord c;
    c.nodes.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(len));
    for (std::size_t i = 0; i < len; ++i) used.insert(pair_key(perm[i], perm[(i + 1) % len]));
    total += len;
    cycles.push_back(std::move(c));
  }
  return cycles;
}

/// A random bijective successor function on the orientation given by the
/// cycles: at every node in-edges are matched to out-edges uniformly.
inline SuccessorFunction random_bijection(std::mt19937_64& rng, const std::vector<CycleRecord>& cycles) {
  std::map<NodeId, std::vector<DirectedEdge>> in, out;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto e = c.out_edge(i);
      out[e.tail].push_back(e);
      in[e.head].push_back(e);
    }
  }
  std::vector<SuccessorFunction::Pair> pairs;
  for (auto& [v, ins] : in) {
    auto& outs = out[v];
    for (std::size_t i = outs.size(); i > 1; --i) std::swap(outs[i - 1], outs[uniform_below(rng, i)]);
    for (std::size_t i = 0; i < ins.size(); ++i) pairs.emplace_back(ins[i], outs[i]);
  }
  return SuccessorFunction::from_pairs(std::move(pairs));
}

/// Reachability closure by plain iteration from every edge: reach[a][b] is
/// true iff b = f^k(a) for some k >= 1.
inline std::vector<std::vector<bool>> reachability(const SuccessorFunction& f) {
  const auto m = f.size();
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t cur = a;
    for (std::size_t step = 0; step < m; ++step) {
      cur = f.next_index(cur);
      reach[a][cur] = true;
    }
  }
  return reach;
}

}  // namespace wseuler::testing
