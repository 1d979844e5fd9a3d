#include "wseuler/stream_io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

namespace wseuler {

namespace {

std::string with_line(std::uint64_t line, const std::string& what) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Splits a record into exactly `N` unsigned integers.
template <std::size_t N>
std::array<std::uint64_t, N> parse_fields(std::string_view line, std::uint64_t line_no) {
  std::array<std::uint64_t, N> out{};
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  };
  for (std::size_t i = 0; i < N; ++i) {
    skip_ws();
    if (pos == line.size()) {
      throw ParseError(line_no, "expected " + std::to_string(N) + " fields, got " + std::to_string(i));
    }
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, out[i]);
    if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError(line_no, "malformed integer field");
    }
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  skip_ws();
  if (pos != line.size()) throw ParseError(line_no, "trailing data after record");
  return out;
}

}  // namespace

StreamError::StreamError(std::uint64_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line) {}

IoError::IoError(std::uint64_t byte_offset, const std::string& what)
    : std::runtime_error(what + " at byte " + std::to_string(byte_offset)), offset_(byte_offset) {}

EdgeReader::EdgeReader(std::istream& in, ReaderOptions opts) : in_(&in), opts_(opts) {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_no_;
    if (is_blank(line)) continue;
    auto f = parse_fields<2>(line, line_no_);
    if (f[0] < 1 || f[0] > 0xFFFFFFFEull) throw DomainError(line_no_, "node count must be in [1, 2^32-2]");
    header_.node_count = static_cast<std::uint32_t>(f[0]);
    header_.edge_count = f[1];
    return;
  }
  throw ParseError(line_no_ + 1, "missing header line \"n m\"");
}

std::optional<UndirectedEdge> EdgeReader::next() {
  if (exhausted_) return std::nullopt;
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_no_;
    if (is_blank(line)) continue;
    auto f = parse_fields<2>(line, line_no_);
    const auto n = header_.node_count;
    if (f[0] < 1 || f[0] > n || f[1] < 1 || f[1] > n) {
      throw DomainError(line_no_, "node id out of range [1, " + std::to_string(n) + "]");
    }
    UndirectedEdge e{static_cast<NodeId>(f[0]), static_cast<NodeId>(f[1])};
    if (e.u == e.v) throw DomainError(line_no_, "self-loop unsupported");
    if (opts_.reject_duplicates && !seen_.insert(pair_key(e.u, e.v)).second) {
      throw DomainError(line_no_, "multigraph unsupported");
    }
    ++consumed_;
    return e;
  }
  if (in_->bad()) throw ParseError(line_no_, "read failure");
  exhausted_ = true;
  seen_ = {};
  return std::nullopt;
}

TripleWriter::TripleWriter(std::ostream& out) : out_(&out) {}

void TripleWriter::emit(const SuccessorTriple& t) {
  if (closed_) throw std::logic_error("triple writer used after close");
  std::array<char, 3 * 11 + 3> buf{};
  char* p = buf.data();
  const std::array<NodeId, 3> fields{t.v1, t.v2, t.s};
  for (std::size_t i = 0; i < fields.size(); ++i) {
    p = std::to_chars(p, buf.data() + 11 * (i + 1) + i, fields[i]).ptr;
    *p++ = i + 1 < fields.size() ? ' ' : '\n';
  }
  const auto len = static_cast<std::streamsize>(p - buf.data());
  out_->write(buf.data(), len);
  if (!*out_) throw IoError(bytes_, "failed to write triple");
  bytes_ += static_cast<std::uint64_t>(len);
  ++records_;
}

void TripleWriter::close() {
  if (closed_) return;
  out_->flush();
  closed_ = true;
  if (!*out_) throw IoError(bytes_, "failed to flush triple stream");
}

std::vector<SuccessorTriple> read_triples(std::istream& in) {
  std::vector<SuccessorTriple> out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto f = parse_fields<3>(line, line_no);
    for (auto x : f) {
      if (x > 0xFFFFFFFFull) throw DomainError(line_no, "node id too large");
    }
    out.push_back({static_cast<NodeId>(f[0]), static_cast<NodeId>(f[1]), static_cast<NodeId>(f[2])});
  }
  return out;
}

GraphData read_graph(std::istream& in, ReaderOptions opts) {
  EdgeReader reader(in, opts);
  GraphData g;
  g.header = reader.header();
  while (auto e = reader.next()) g.edges.push_back(*e);
  return g;
}

void write_graph(std::ostream& out, std::uint32_t node_count, std::span<const UndirectedEdge> edges) {
  out << node_count << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << '\n';
  if (!out) throw IoError(0, "failed to write graph");
}

}  // namespace wseuler
