#include "wseuler/gen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace wseuler {

const char* to_string(Fault f) {
  switch (f) {
    case Fault::none: return "none";
    case Fault::odd_degree: return "odd-degree";
    case Fault::disconnected: return "disconnected";
  }
  return "none";
}

const char* to_string(Order o) {
  switch (o) {
    case Order::shuffled: return "shuffled";
    case Order::cycle_interleaved: return "cycle-interleaved";
    case Order::sorted: return "sorted";
  }
  return "shuffled";
}

std::optional<Fault> parse_fault(const std::string& s) {
  for (auto f : {Fault::none, Fault::odd_degree, Fault::disconnected}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<Order> parse_order(const std::string& s) {
  for (auto o : {Order::shuffled, Order::cycle_interleaved, Order::sorted}) {
    if (s == to_string(o)) return o;
  }
  return std::nullopt;
}

std::uint64_t max_even_edges(std::uint64_t n) {
  if (n < 3) return 0;
  const std::uint64_t complete = n * (n - 1) / 2;
  // K_n is Eulerian for odd n; for even n drop a perfect matching.
  return n % 2 == 1 ? complete : complete - n / 2;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

template <typename T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

// Lengths 1 and 2 cannot be closed by a simple cycle.
bool closable_remainder(std::uint64_t r) { return r == 0 || r >= 3; }

class CycleBuilder {
 public:
  CycleBuilder(std::vector<NodeId> nodes, std::mt19937_64& rng) : nodes_(std::move(nodes)), rng_(rng) {}

  std::vector<std::vector<NodeId>> build(std::uint64_t target) {
    std::vector<std::vector<NodeId>> cycles;
    if (target == 0) return cycles;
    const std::uint64_t cnt = nodes_.size();

    shuffle_in_place(nodes_, rng_);
    std::uint64_t base_len = std::min<std::uint64_t>(cnt, target);
    while (!closable_remainder(target - base_len)) --base_len;
    std::vector<NodeId> base(nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(base_len));
    add_cycle(base);
    cycles.push_back(std::move(base));
    anchors_.assign(nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(base_len));

    std::uint64_t remaining = target - base_len;
    int failures = 0;
    while (remaining >= 3 && failures < 400) {
      auto cycle = try_cycle(remaining);
      if (cycle.empty()) {
        ++failures;
        continue;
      }
      failures = 0;
      remaining -= cycle.size();
      add_cycle(cycle);
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

 private:
  bool used(NodeId a, NodeId b) const { return used_.count(pair_key(a, b)) != 0; }

  void add_cycle(const std::vector<NodeId>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) used_.insert(pair_key(c[i], c[(i + 1) % c.size()]));
  }

  // A node w not on the path with {from, w} unused (and {w, close_to} unused
  // when close_to is set). Random probes first, then a full sweep.
  NodeId pick_next(NodeId from, NodeId close_to, const std::unordered_set<NodeId>& on_path) {
    auto ok = [&](NodeId w) {
      return on_path.count(w) == 0 && !used(from, w) && (close_to == kNoNode || !used(w, close_to));
    };
    for (int probe = 0; probe < 24; ++probe) {
      const NodeId w = nodes_[uniform_below(rng_, nodes_.size())];
      if (ok(w)) return w;
    }
    const auto start = uniform_below(rng_, nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const NodeId w = nodes_[(start + k) % nodes_.size()];
      if (ok(w)) return w;
    }
    return kNoNode;
  }

  std::vector<NodeId> try_cycle(std::uint64_t remaining) {
    const std::uint64_t cnt = nodes_.size();
    std::uint64_t hi = std::min<std::uint64_t>(cnt, remaining);
    if (hi != remaining) {
      hi = std::min<std::uint64_t>(hi, remaining - 3);
    }
    if (hi < 3) return {};
    std::uint64_t length = 3 + uniform_below(rng_, hi - 2);
    if (!closable_remainder(remaining - length)) length = remaining;
    if (length > cnt) return {};

    const NodeId start = anchors_[uniform_below(rng_, anchors_.size())];
    std::vector<NodeId> path{start};
    std::unordered_set<NodeId> on_path{start};
    while (path.size() < length) {
      const bool last = path.size() + 1 == length;
      const NodeId w = pick_next(path.back(), last ? start : kNoNode, on_path);
      if (w == kNoNode) return {};
      path.push_back(w);
      on_path.insert(w);
    }
    return path;
  }

  std::vector<NodeId> nodes_;
  std::vector<NodeId> anchors_;
  std::mt19937_64& rng_;
  std::unordered_set<std::uint64_t> used_;
};

std::vector<std::vector<NodeId>> eulerian_cycles(NodeId first, std::uint32_t count, std::uint64_t target,
                                                 std::mt19937_64& rng) {
  std::vector<NodeId> nodes(count);
  std::iota(nodes.begin(), nodes.end(), first);
  return CycleBuilder(std::move(nodes), rng).build(target);
}

void check_target(std::uint64_t nodes, std::uint64_t target) {
  if (target == 0) return;
  if (nodes < 3) throw GenError("at least 3 nodes are needed for a nonempty Eulerian graph");
  if (target < 3) throw GenError("a nonempty Eulerian simple graph has at least 3 edges");
  if (target > max_even_edges(nodes)) {
    throw GenError(std::to_string(target) + " edges exceed the capacity of an Eulerian simple graph on " +
                   std::to_string(nodes) + " nodes (" + std::to_string(max_even_edges(nodes)) + ")");
  }
}

}  // namespace

GeneratedGraph generate(const GenSpec& spec) {
  if (spec.nodes == 0) throw GenError("node count must be positive");
  std::mt19937_64 rng(spec.seed);
  GeneratedGraph g;
  g.node_count = spec.nodes;

  if (spec.fault == Fault::disconnected) {
    if (spec.nodes < 6) throw GenError("a disconnected instance needs at least 6 nodes");
    const std::uint32_t n1 = spec.nodes / 2;
    const std::uint32_t n2 = spec.nodes - n1;
    std::uint64_t m1 = std::max<std::uint64_t>(3, spec.target_edges * n1 / spec.nodes);
    m1 = std::min(m1, max_even_edges(n1));
    std::uint64_t m2 = spec.target_edges > m1 ? spec.target_edges - m1 : 3;
    m2 = std::clamp<std::uint64_t>(m2, 3, max_even_edges(n2));
    check_target(n1, m1);
    check_target(n2, m2);
    g.cycles = eulerian_cycles(1, n1, m1, rng);
    auto more = eulerian_cycles(n1 + 1, n2, m2, rng);
    g.cycles.insert(g.cycles.end(), more.begin(), more.end());
  } else {
    check_target(spec.nodes, spec.target_edges);
    if (spec.fault == Fault::odd_degree && spec.target_edges == 0) {
      throw GenError("an odd-degree instance needs a nonempty base graph");
    }
    g.cycles = eulerian_cycles(1, spec.nodes, spec.target_edges, rng);
  }

  // Directed edge lists per cycle, in walk order.
  std::vector<std::vector<UndirectedEdge>> per_cycle;
  for (const auto& c : g.cycles) {
    auto& list = per_cycle.emplace_back();
    for (std::size_t i = 0; i < c.size(); ++i) list.push_back({c[i], c[(i + 1) % c.size()]});
  }

  if (spec.fault == Fault::odd_degree) {
    std::size_t total = 0;
    for (const auto& l : per_cycle) total += l.size();
    auto drop = uniform_below(rng, total);
    for (auto& l : per_cycle) {
      if (drop < l.size()) {
        l.erase(l.begin() + static_cast<std::ptrdiff_t>(drop));
        break;
      }
      drop -= l.size();
    }
  }

  switch (spec.order) {
    case Order::shuffled:
      for (const auto& l : per_cycle) g.edges.insert(g.edges.end(), l.begin(), l.end());
      shuffle_in_place(g.edges, rng);
      for (auto& e : g.edges) {
        if (uniform_below(rng, 2) == 1) std::swap(e.u, e.v);
      }
      break;
    case Order::cycle_interleaved: {
      std::size_t longest = 0;
      for (const auto& l : per_cycle) longest = std::max(longest, l.size());
      for (std::size_t round = 0; round < longest; ++round) {
        for (const auto& l : per_cycle) {
          if (round < l.size()) g.edges.push_back(l[round]);
        }
      }
      break;
    }
    case Order::sorted:
      for (const auto& l : per_cycle) {
        for (const auto& e : l) g.edges.push_back(e.canonical());
      }
      std::sort(g.edges.begin(), g.edges.end());
      break;
  }
  return g;
}

}  // namespace wseuler
