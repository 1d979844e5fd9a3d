#pragma once

// Independent checking: successor-function algebra, a tour verifier for
// emitted triple streams, and a classical in-memory Euler tour oracle.
// None of this is memory-bounded; it holds every edge.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wseuler/cycle_forest.hpp"
#include "wseuler/types.hpp"

namespace wseuler {

/// A map e -> f(e) over a finite set of directed edges with f(e).tail == e.head.
class SuccessorFunction {
 public:
  using Pair = std::pair<DirectedEdge, DirectedEdge>;

  SuccessorFunction() = default;

  /// Throws std::invalid_argument if an edge is mapped twice, an image is
  /// outside the edge set, or an image does not start where its edge ends.
  static SuccessorFunction from_pairs(std::vector<Pair> pairs);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  /// Domain, sorted.
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  bool contains(const DirectedEdge& e) const;

  DirectedEdge operator()(const DirectedEdge& e) const;
  /// Position of e in edges(); throws std::out_of_range if absent.
  std::size_t index_of(const DirectedEdge& e) const;
  std::size_t next_index(std::size_t i) const { return next_[i]; }

  bool is_bijective() const;
  std::vector<Pair> pairs() const;

  friend bool operator==(const SuccessorFunction&, const SuccessorFunction&) = default;

 private:
  std::vector<DirectedEdge> edges_;
  std::vector<std::size_t> next_;
};

/// Orbits of a bijective successor function. Each block is sorted; blocks are
/// ordered by their smallest edge, which serves as the representative.
struct ClassPartition {
  std::vector<std::vector<DirectedEdge>> blocks;

  std::size_t block_of(const DirectedEdge& e) const;
  friend bool operator==(const ClassPartition&, const ClassPartition&) = default;
};

class NotBijectiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws NotBijectiveError when f is not a bijection.
ClassPartition orbit_partition(const SuccessorFunction& f);

/// Orbit index per edge of f (same order as f.edges()). Throws like orbit_partition.
std::vector<std::size_t> orbit_ids(const SuccessorFunction& f);

class SwapPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// For each pair (e, e') exchanges f(e) and f(e'). Requires every e in one
/// orbit, every e' in a different orbit from all others and from the e's,
/// and e, e' ending at the same node. Throws SwapPreconditionError otherwise.
SuccessorFunction swap_successors(const SuccessorFunction& f,
                                  std::span<const SuccessorFunction::Pair> pairs);

/// The successor function that follows each cycle around itself.
SuccessorFunction cycle_successor_function(std::span<const CycleRecord> cycles);

/// Reads (v1, v2, s) as (v1, v2) -> (v2, s). Throws like from_pairs.
SuccessorFunction successor_function_from_triples(std::span<const SuccessorTriple> triples);

enum class Failure {
  missing_edge,
  duplicate_edge,
  bad_successor_head,
  not_bijective,
  multiple_classes,
  foreign_edge,
};

const char* to_string(Failure f);

struct Verdict {
  bool ok = true;
  std::optional<Failure> failure;
  std::vector<DirectedEdge> witness;
  std::string detail;
};

/// Checks that triples encode an Euler tour of the graph: every edge appears
/// once in one orientation, every successor is an edge leaving the right
/// node, the map is a bijection, and it has a single orbit.
Verdict verify_tour(std::span<const SuccessorTriple> triples, std::uint32_t node_count,
                    std::span<const UndirectedEdge> edges);

struct EulerianConditions {
  bool even_degrees = true;
  bool connected = true;  // all edges in one component; isolated nodes ignored
  bool eulerian() const { return even_degrees && connected; }
};

EulerianConditions eulerian_conditions(std::uint32_t node_count, std::span<const UndirectedEdge> edges);

/// Classical Hierholzer. Returns the closed node walk (first == last) of an
/// Euler tour, an empty walk for an edgeless graph, or nullopt when none exists.
std::optional<std::vector<NodeId>> hierholzer_oracle(std::uint32_t node_count,
                                                     std::span<const UndirectedEdge> edges);

}  // namespace wseuler
