#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wseuler/euler_core.hpp"
#include "wseuler/gen.hpp"

namespace wseuler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // verification failed
inline constexpr int kExitUsage = 2;        // bad flags, bad spec, unreadable or malformed files
inline constexpr int kExitOddDegree = 3;
inline constexpr int kExitNotConnected = 4;

/// Standard streams, injectable for tests. "-" paths refer to these.
struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct GenOptions {
  std::uint32_t nodes = 0;
  std::uint64_t edges = 0;
  std::uint64_t seed = 0;
  std::string fault = "none";
  std::string order = "shuffled";
  std::string out = "-";
};

struct RunOptions {
  std::string input = "-";
  std::string output = "-";
  std::string mode = "optimized";
  std::string stats;  // empty: no stats file
};

struct VerifyOptions {
  std::string graph;
  std::string tour = "-";
};

struct BenchOptions {
  std::vector<std::uint32_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::string mode = "optimized";
  std::string order = "shuffled";
  std::uint32_t edge_factor = 4;
  std::string report = "-";
};

int cmd_gen(const GenOptions& opts, Io io);
int cmd_run(const RunOptions& opts, Io io);
int cmd_verify(const VerifyOptions& opts, Io io);
int cmd_bench(const BenchOptions& opts, Io io);

/// Parses argv (argv[0] is the program name) and dispatches to one command.
int main(int argc, const char* const* argv, Io io);

}  // namespace wseuler::cli
