#pragma once

// One-pass Euler tour construction over an edge stream.
//
// Edges go into a cycle-free buffer; each time a cycle closes it is merged
// into the tours seen so far by swapping successors at one shared node per
// tour. Per node the engine keeps a tour label t(v), a potential successor
// j(v) and at most one deferred "first-in" edge. Everything else is written
// out immediately and never revisited.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wseuler/cycle_forest.hpp"
#include "wseuler/stream_io.hpp"
#include "wseuler/types.hpp"

namespace wseuler {

enum class Mode {
  /// Literal per-cycle loops over all labels and all nodes, O(n) per cycle.
  faithful,
  /// Scans only cycle nodes and relabels tours through label groups.
  optimized,
};

const char* to_string(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

struct RunStats {
  std::uint64_t peak_e_int = 0;
  std::uint64_t peak_f = 0;
  std::uint64_t final_c = 0;
  std::uint64_t cycles_found = 0;
  std::uint64_t triples_emitted = 0;
  /// Peak of 2|E_int| + 2|F| + 2n + 1 machine words.
  std::uint64_t words_peak = 0;
  std::uint64_t passes = 1;
  /// Largest tour label ever assigned.
  std::uint64_t max_t = 0;
  /// Edges taken from the reader.
  std::uint64_t edges_read = 0;
};

std::string stats_to_json(const RunStats& s);
RunStats stats_from_json(const std::string& text);

enum class AlgoErrorKind { odd_degree, not_connected };

class AlgoError : public std::runtime_error {
 public:
  explicit AlgoError(AlgoErrorKind kind);
  AlgoErrorKind kind() const { return kind_; }

 private:
  AlgoErrorKind kind_;
};

inline constexpr const char* kOddDegreeMessage = "At least one node with odd degree";
inline constexpr const char* kNotConnectedMessage = "Graph not connected";

class EulerEngine;

/// Test and tracing hook. Receives every emitted triple and a view of the
/// engine after each cycle has been merged.
class RunObserver {
 public:
  virtual ~RunObserver() = default;
  virtual void on_triple(const SuccessorTriple&) {}
  virtual void on_cycle_merged(const EulerEngine&, const CycleRecord&) {}
};

/// Bookkeeping for one cycle while it is being merged.
struct CycleWork {
  explicit CycleWork(const CycleRecord& c) : cycle(&c), handled(c.size(), 0) {}

  const CycleRecord* cycle;
  /// handled[i]: the edge entering position i went to F or was written by merge().
  std::vector<std::uint8_t> handled;
  /// Chosen merge positions, in cycle order.
  std::vector<std::size_t> chosen;
  /// Distinct nonzero labels met on the cycle, ascending.
  std::vector<std::uint32_t> labels;
};

class EulerEngine {
 public:
  EulerEngine(std::uint32_t node_count, Mode mode, TripleWriter& writer,
              RunObserver* observer = nullptr);

  EulerEngine(const EulerEngine&) = delete;
  EulerEngine& operator=(const EulerEngine&) = delete;

  /// Pushes one stream edge through the buffer, merging any cycle it closes.
  void feed(const UndirectedEdge& e);

  /// End-of-stream: error checks, then the deferred first-in edges.
  /// Throws AlgoError.
  void finish();

  void merge_cycle(const CycleRecord& c);

  // The five merge steps, in the order merge_cycle runs them.
  void new_nodes(CycleWork& w);
  void construct_j_m(CycleWork& w) const;
  void merge(CycleWork& w);
  void write_remaining(const CycleWork& w);
  void update(const CycleWork& w);

  void write_f();

  std::uint32_t node_count() const { return n_; }
  Mode mode() const { return mode_; }
  std::uint32_t label(NodeId v) const;
  NodeId potential_successor(NodeId v) const { return succ_[v]; }
  /// Tail of the first-in edge stored for head v, or kNoNode.
  NodeId first_in_tail(NodeId v) const { return first_in_[v]; }
  std::vector<DirectedEdge> first_in_edges() const;
  std::uint64_t first_in_size() const { return f_size_; }
  std::uint32_t tour_counter() const { return counter_; }
  const CycleForest& forest() const { return forest_; }
  const RunStats& stats() const { return stats_; }

 private:
  void emit(const SuccessorTriple& t);
  void note_words(std::uint64_t e_int_edges);
  void set_label_faithful(NodeId v, std::uint32_t a);
  void update_optimized(const CycleWork& w, std::uint32_t a);

  std::uint32_t n_;
  Mode mode_;
  TripleWriter* writer_;
  RunObserver* observer_;
  CycleForest forest_;

  std::vector<NodeId> succ_;      // j(v)
  std::vector<NodeId> first_in_;  // F, indexed by head
  std::uint64_t f_size_ = 0;
  std::uint32_t counter_ = 0;     // c

  // faithful: plain per-node labels
  std::vector<std::uint32_t> t_;
  std::vector<std::uint8_t> in_m_;

  // optimized: every visited node belongs to one group; a group carries the
  // label shared by all of its members.
  struct Group {
    std::uint32_t label = 0;
    std::vector<NodeId> members;
  };
  std::vector<std::uint32_t> group_of_;     // 1-based group index, 0 = unvisited
  std::vector<std::uint32_t> label_group_;  // label -> 1-based group index
  std::vector<Group> groups_;
  std::vector<std::uint32_t> free_groups_;
  std::uint64_t live_groups_ = 0;
  mutable std::vector<std::uint32_t> label_seen_;
  mutable std::uint32_t seen_stamp_ = 0;

  RunStats stats_;
};

/// Runs the whole algorithm over an unconsumed reader. Triples already
/// written stay on the output when an AlgoError is thrown.
RunStats run(EdgeReader& reader, TripleWriter& writer, Mode mode,
             RunObserver* observer = nullptr);

}  // namespace wseuler
