#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wseuler/types.hpp"

namespace wseuler {

enum class Fault { none, odd_degree, disconnected };
enum class Order { shuffled, cycle_interleaved, sorted };

const char* to_string(Fault f);
const char* to_string(Order o);
std::optional<Fault> parse_fault(const std::string& s);
std::optional<Order> parse_order(const std::string& s);

struct GenSpec {
  std::uint32_t nodes = 0;
  std::uint64_t target_edges = 0;
  std::uint64_t seed = 0;
  Fault fault = Fault::none;
  Order order = Order::shuffled;
};

class GenError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratedGraph {
  std::uint32_t node_count = 0;
  /// Edges in stream order.
  std::vector<UndirectedEdge> edges;
  /// The superimposed cycles the graph was built from, as node sequences.
  std::vector<std::vector<NodeId>> cycles;
};

/// Largest edge count of a simple graph on n nodes with all degrees even.
std::uint64_t max_even_edges(std::uint64_t n);

/// Builds an Eulerian graph (or a deliberately faulty one) as a union of
/// edge-disjoint simple cycles: one long base cycle over a random node order
/// plus random cycles anchored on it. The edge count hits target_edges
/// unless the graph gets too dense to place further cycles, in which case it
/// stops slightly short. Identical specs give identical output.
///
/// Throws GenError when the target cannot be met by any simple graph.
GeneratedGraph generate(const GenSpec& spec);

/// Unbiased integer in [0, bound), independent of the standard library's
/// distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace wseuler
