#pragma once

// Edge-stream input and successor-triple output.
//
// Input:  first line "n m", then one edge "u v" per line (1-based ids).
// Output: one triple "v1 v2 s" per line.
//
// Both sides are strictly sequential. The reader hands out each edge once
// and has no rewind; the writer only appends.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "wseuler/types.hpp"

namespace wseuler {

struct EdgeStreamHeader {
  std::uint32_t node_count = 0;
  std::uint64_t edge_count = 0;  // advisory, 0 = unknown
};

/// Malformed or invalid input. line() is 1-based; 0 if not tied to a line.
class StreamError : public std::runtime_error {
 public:
  StreamError(std::uint64_t line, const std::string& what);
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

class ParseError : public StreamError {
 public:
  using StreamError::StreamError;
};

/// Structurally valid record that violates the graph model (range, loops,
/// repeated pairs).
class DomainError : public StreamError {
 public:
  using StreamError::StreamError;
};

class IoError : public std::runtime_error {
 public:
  IoError(std::uint64_t byte_offset, const std::string& what);
  std::uint64_t byte_offset() const { return offset_; }

 private:
  std::uint64_t offset_;
};

struct ReaderOptions {
  // Remembering every pair costs O(m) memory outside the algorithm state.
  bool reject_duplicates = true;
};

class EdgeReader {
 public:
  /// Reads and validates the header line immediately.
  explicit EdgeReader(std::istream& in, ReaderOptions opts = {});

  EdgeReader(const EdgeReader&) = delete;
  EdgeReader& operator=(const EdgeReader&) = delete;
  EdgeReader(EdgeReader&&) = default;

  const EdgeStreamHeader& header() const { return header_; }

  /// Next edge in stream order, or nullopt once the stream is exhausted.
  std::optional<UndirectedEdge> next();

  /// Number of edges handed out so far.
  std::uint64_t consumed() const { return consumed_; }
  bool exhausted() const { return exhausted_; }

 private:
  std::istream* in_;
  ReaderOptions opts_;
  EdgeStreamHeader header_;
  std::uint64_t line_no_ = 0;
  std::uint64_t consumed_ = 0;
  bool exhausted_ = false;
  std::unordered_set<std::uint64_t> seen_;
};

class TripleWriter {
 public:
  explicit TripleWriter(std::ostream& out);

  TripleWriter(const TripleWriter&) = delete;
  TripleWriter& operator=(const TripleWriter&) = delete;

  /// Appends one record. Throws std::logic_error after close(), IoError if
  /// the sink fails.
  void emit(const SuccessorTriple& t);
  void close();

  bool closed() const { return closed_; }
  std::uint64_t records() const { return records_; }
  std::uint64_t bytes_written() const { return bytes_; }

 private:
  std::ostream* out_;
  std::uint64_t records_ = 0;
  std::uint64_t bytes_ = 0;
  bool closed_ = false;
};

/// Parses a whole triple file. Blank lines are skipped.
std::vector<SuccessorTriple> read_triples(std::istream& in);

/// Loads a whole graph file into memory (tools and oracles only).
struct GraphData {
  EdgeStreamHeader header;
  std::vector<UndirectedEdge> edges;
};
GraphData read_graph(std::istream& in, ReaderOptions opts = {});

void write_graph(std::ostream& out, std::uint32_t node_count,
                 std::span<const UndirectedEdge> edges);

}  // namespace wseuler
