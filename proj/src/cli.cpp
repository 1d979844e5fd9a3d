#include "wseuler/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wseuler/stream_io.hpp"
#include "wseuler/verify.hpp"

namespace wseuler::cli {

namespace {

// Opens `path` for reading, or hands back io.in for "-".
class InputFile {
 public:
  InputFile(const std::string& path, std::istream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw std::runtime_error("cannot open " + path);
    stream_ = file_.get();
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

class OutputFile {
 public:
  OutputFile(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

}  // namespace

int cmd_gen(const GenOptions& opts, Io io) {
  const auto fault = parse_fault(opts.fault);
  const auto order = parse_order(opts.order);
  if (!fault || !order) {
    io.err << "gen: unknown --fault or --order value\n";
    return kExitUsage;
  }
  try {
    const auto g = generate({opts.nodes, opts.edges, opts.seed, *fault, *order});
    OutputFile out(opts.out, io.out);
    write_graph(out.get(), g.node_count, g.edges);
    out.get().flush();
  } catch (const GenError& e) {
    io.err << "gen: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    io.err << "gen: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_run(const RunOptions& opts, Io io) {
  const auto mode = parse_mode(opts.mode);
  if (!mode) {
    io.err << "run: unknown --mode " << opts.mode << '\n';
    return kExitUsage;
  }
  try {
    InputFile in(opts.input, io.in);
    EdgeReader reader(in.get());
    OutputFile out(opts.output, io.out);
    TripleWriter writer(out.get());
    int code = kExitOk;
    RunStats stats;
    try {
      stats = run(reader, writer, *mode);
    } catch (const AlgoError& e) {
      io.err << "ERROR: " << e.what() << '\n';
      code = e.kind() == AlgoErrorKind::odd_degree ? kExitOddDegree : kExitNotConnected;
    }
    writer.close();
    if (code == kExitOk && !opts.stats.empty()) {
      OutputFile s(opts.stats, io.err);
      s.get() << stats_to_json(stats) << '\n';
    }
    return code;
  } catch (const StreamError& e) {
    io.err << "run: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    io.err << "run: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    io.err << "run: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const VerifyOptions& opts, Io io) {
  GraphData graph;
  std::vector<SuccessorTriple> triples;
  try {
    InputFile g(opts.graph, io.in);
    graph = read_graph(g.get());
    InputFile t(opts.tour, io.in);
    triples = read_triples(t.get());
  } catch (const std::exception& e) {
    io.err << "verify: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto verdict = verify_tour(triples, graph.header.node_count, graph.edges);
  if (verdict.ok) {
    io.out << "ok\n";
    return kExitOk;
  }
  io.out << to_string(*verdict.failure);
  for (const auto& w : verdict.witness) io.out << ' ' << w;
  io.out << ": " << verdict.detail << '\n';
  return kExitFailure;
}

int cmd_bench(const BenchOptions& opts, Io io) {
  const auto mode = parse_mode(opts.mode);
  const auto order = parse_order(opts.order);
  if (opts.sizes.empty() || opts.seeds.empty()) {
    io.err << "bench: --sizes and --seeds must be non-empty\n";
    return kExitUsage;
  }
  if (!mode || !order) {
    io.err << "bench: unknown --mode or --order value\n";
    return kExitUsage;
  }

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  int code = kExitOk;
  for (const auto n : opts.sizes) {
    for (const auto seed : opts.seeds) {
      const auto m = std::min<std::uint64_t>(std::uint64_t{opts.edge_factor} * n, max_even_edges(n));
      GeneratedGraph g;
      try {
        g = generate({n, m, seed, Fault::none, *order});
      } catch (const GenError& e) {
        io.err << "bench: n=" << n << ": " << e.what() << '\n';
        return kExitUsage;
      }

      std::ostringstream graph_text;
      write_graph(graph_text, g.node_count, g.edges);
      std::istringstream graph_in(graph_text.str());
      std::ostringstream tour_text;
      EdgeReader reader(graph_in);
      TripleWriter writer(tour_text);

      const auto t0 = std::chrono::steady_clock::now();
      RunStats stats;
      try {
        stats = run(reader, writer, *mode);
      } catch (const AlgoError& e) {
        io.err << "bench: n=" << n << " seed=" << seed << ": " << e.what() << '\n';
        return kExitFailure;
      }
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

      std::istringstream tour_in(tour_text.str());
      const auto triples = read_triples(tour_in);
      const auto verdict = verify_tour(triples, g.node_count, g.edges);
      if (!verdict.ok) {
        io.err << "bench: n=" << n << " seed=" << seed << ": verification failed: "
               << to_string(*verdict.failure) << '\n';
        return kExitFailure;
      }

      const bool bounds = stats.peak_e_int <= n && stats.peak_f <= n && 3 * stats.final_c <= n;
      if (!bounds) {
        io.err << "bench: n=" << n << " seed=" << seed << ": memory bound violated\n";
        code = kExitFailure;
      }

      nlohmann::ordered_json row;
      row["n"] = n;
      row["m"] = g.edges.size();
      row["seed"] = seed;
      row["peak_e_int"] = stats.peak_e_int;
      row["peak_f"] = stats.peak_f;
      row["final_c"] = stats.final_c;
      row["words_peak"] = stats.words_peak;
      row["words_per_node"] = static_cast<double>(stats.words_peak) / n;
      row["wall_time"] = wall;
      row["bounds_ok"] = bounds;
      rows.push_back(std::move(row));
    }
  }

  try {
    OutputFile report(opts.report, io.out);
    report.get() << rows.dump(2) << '\n';
  } catch (const std::exception& e) {
    io.err << "bench: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}

int main(int argc, const char* const* argv, Io io) {
  CLI::App app{"One-pass streaming Euler tours"};
  app.require_subcommand(1, 1);

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate an Eulerian (or faulty) graph file");
  gen->add_option("--nodes", gen_opts.nodes, "Node count")->required();
  gen->add_option("--edges", gen_opts.edges, "Target edge count")->required();
  gen->add_option("--seed", gen_opts.seed, "RNG seed");
  gen->add_option("--fault", gen_opts.fault, "none|odd-degree|disconnected");
  gen->add_option("--order", gen_opts.order, "shuffled|cycle-interleaved|sorted");
  gen->add_option("--out", gen_opts.out, "Output path or -");

  RunOptions run_opts;
  auto* runc = app.add_subcommand("run", "Stream a graph and write its Euler tour as successor triples");
  runc->add_option("--input", run_opts.input, "Graph path or -");
  runc->add_option("--output", run_opts.output, "Triple path or -");
  runc->add_option("--mode", run_opts.mode, "faithful|optimized");
  runc->add_option("--stats", run_opts.stats, "Write run statistics JSON here");

  VerifyOptions verify_opts;
  auto* ver = app.add_subcommand("verify", "Check a triple file against its graph");
  ver->add_option("--graph", verify_opts.graph, "Graph path")->required();
  ver->add_option("--tour", verify_opts.tour, "Triple path or -");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "gen + run + verify over a size/seed grid");
  bench->add_option("--sizes", bench_opts.sizes, "Comma-separated node counts")->delimiter(',');
  bench->add_option("--seeds", bench_opts.seeds, "Comma-separated seeds")->delimiter(',');
  bench->add_option("--mode", bench_opts.mode, "faithful|optimized");
  bench->add_option("--order", bench_opts.order, "shuffled|cycle-interleaved|sorted");
  bench->add_option("--edge-factor", bench_opts.edge_factor, "Edges per node");
  bench->add_option("--report", bench_opts.report, "Report JSON path or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    io.err << e.what() << '\n';
    return kExitUsage;
  }

  if (gen->parsed()) return cmd_gen(gen_opts, io);
  if (runc->parsed()) return cmd_run(run_opts, io);
  if (ver->parsed()) return cmd_verify(verify_opts, io);
  return cmd_bench(bench_opts, io);
}

}  // namespace wseuler::cli
