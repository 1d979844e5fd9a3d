#include "wseuler/euler_core.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace wseuler {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("invariant violated: ") + what);
}

}  // namespace

const char* to_string(Mode m) { return m == Mode::faithful ? "faithful" : "optimized"; }

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "faithful") return Mode::faithful;
  if (s == "optimized") return Mode::optimized;
  return std::nullopt;
}

std::string stats_to_json(const RunStats& s) {
  nlohmann::ordered_json j;
  j["peak_e_int"] = s.peak_e_int;
  j["peak_f"] = s.peak_f;
  j["final_c"] = s.final_c;
  j["cycles_found"] = s.cycles_found;
  j["triples_emitted"] = s.triples_emitted;
  j["words_peak"] = s.words_peak;
  j["passes"] = s.passes;
  j["max_t"] = s.max_t;
  j["edges_read"] = s.edges_read;
  return j.dump(2);
}

RunStats stats_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RunStats s;
  s.peak_e_int = j.at("peak_e_int").get<std::uint64_t>();
  s.peak_f = j.at("peak_f").get<std::uint64_t>();
  s.final_c = j.at("final_c").get<std::uint64_t>();
  s.cycles_found = j.at("cycles_found").get<std::uint64_t>();
  s.triples_emitted = j.at("triples_emitted").get<std::uint64_t>();
  s.words_peak = j.at("words_peak").get<std::uint64_t>();
  s.passes = j.at("passes").get<std::uint64_t>();
  s.max_t = j.value("max_t", std::uint64_t{0});
  s.edges_read = j.value("edges_read", std::uint64_t{0});
  return s;
}

AlgoError::AlgoError(AlgoErrorKind kind)
    : std::runtime_error(kind == AlgoErrorKind::odd_degree ? kOddDegreeMessage : kNotConnectedMessage),
      kind_(kind) {}

EulerEngine::EulerEngine(std::uint32_t node_count, Mode mode, TripleWriter& writer,
                         RunObserver* observer)
    : n_(node_count),
      mode_(mode),
      writer_(&writer),
      observer_(observer),
      forest_(node_count),
      succ_(static_cast<std::size_t>(node_count) + 1, kNoNode),
      first_in_(static_cast<std::size_t>(node_count) + 1, kNoNode) {
  const auto slots = static_cast<std::size_t>(node_count) + 1;
  if (mode_ == Mode::faithful) {
    t_.assign(slots, 0);
    in_m_.assign(slots, 0);
  } else {
    group_of_.assign(slots, 0);
    label_group_.assign(slots, 0);
    label_seen_.assign(slots, 0);
  }
  note_words(0);
}

std::uint32_t EulerEngine::label(NodeId v) const {
  if (mode_ == Mode::faithful) return t_[v];
  const auto g = group_of_[v];
  return g == 0 ? 0 : groups_[g - 1].label;
}

std::vector<DirectedEdge> EulerEngine::first_in_edges() const {
  std::vector<DirectedEdge> out;
  out.reserve(f_size_);
  for (NodeId v = 1; v <= n_; ++v) {
    if (first_in_[v] != kNoNode) out.push_back({first_in_[v], v});
  }
  return out;
}

void EulerEngine::emit(const SuccessorTriple& t) {
  writer_->emit(t);
  ++stats_.triples_emitted;
  if (observer_ != nullptr) observer_->on_triple(t);
}

void EulerEngine::note_words(std::uint64_t e_int_edges) {
  const std::uint64_t words = 2 * e_int_edges + 2 * f_size_ + 2 * static_cast<std::uint64_t>(n_) + 1;
  stats_.words_peak = std::max(stats_.words_peak, words);
}

void EulerEngine::feed(const UndirectedEdge& e) {
  ++stats_.edges_read;
  auto cycle = forest_.insert(e);
  stats_.peak_e_int = forest_.peak_edge_count();
  if (!cycle) {
    note_words(forest_.live_edge_count());
    return;
  }
  // The cycle's edges count as resident until the merge is done.
  note_words(forest_.live_edge_count() + cycle->size());
  merge_cycle(*cycle);
}

void EulerEngine::merge_cycle(const CycleRecord& c) {
  require(c.size() >= 3, "cycle shorter than 3");
  ++stats_.cycles_found;

  CycleWork w(c);
  new_nodes(w);
  note_words(forest_.live_edge_count() + c.size());
  construct_j_m(w);
  merge(w);
  write_remaining(w);
  update(w);

  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto e = c.out_edge(i);
    require(!forest_.contains(e.tail, e.head), "cycle edge still buffered after merge");
  }
  if (observer_ != nullptr) observer_->on_cycle_merged(*this, c);
}

void EulerEngine::new_nodes(CycleWork& w) {
  const auto& c = *w.cycle;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const NodeId v = c.nodes[i];
    if (label(v) != 0) continue;
    require(first_in_[v] == kNoNode, "second first-in edge for a node");
    succ_[v] = c.at(static_cast<std::ptrdiff_t>(i) + 1);
    first_in_[v] = c.at(static_cast<std::ptrdiff_t>(i) - 1);
    ++f_size_;
    w.handled[i] = 1;
  }
  stats_.peak_f = std::max(stats_.peak_f, f_size_);
}

void EulerEngine::construct_j_m(CycleWork& w) const {
  const auto& c = *w.cycle;
  w.chosen.clear();
  w.labels.clear();
  if (mode_ == Mode::faithful) {
    for (std::uint32_t lab = 1; lab <= n_; ++lab) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (t_[c.nodes[i]] == lab) {
          w.chosen.push_back(i);
          w.labels.push_back(lab);
          break;
        }
      }
    }
    std::sort(w.chosen.begin(), w.chosen.end());
    return;
  }

  if (++seen_stamp_ == 0) {
    std::fill(label_seen_.begin(), label_seen_.end(), 0);
    seen_stamp_ = 1;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto lab = label(c.nodes[i]);
    if (lab == 0 || label_seen_[lab] == seen_stamp_) continue;
    label_seen_[lab] = seen_stamp_;
    w.chosen.push_back(i);
    w.labels.push_back(lab);
  }
  std::sort(w.labels.begin(), w.labels.end());
}

void EulerEngine::merge(CycleWork& w) {
  const auto& c = *w.cycle;
  for (const auto i : w.chosen) {
    const NodeId v = c.nodes[i];
    require(succ_[v] != kNoNode, "chosen node without potential successor");
    emit({c.at(static_cast<std::ptrdiff_t>(i) - 1), v, succ_[v]});
    succ_[v] = c.at(static_cast<std::ptrdiff_t>(i) + 1);
    w.handled[i] = 1;
  }
}

void EulerEngine::write_remaining(const CycleWork& w) {
  const auto& c = *w.cycle;
  const auto k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    // Edge (v_i, v_{i+1}) is the in-edge of position i + 1.
    if (w.handled[(i + 1) % k]) continue;
    const auto p = static_cast<std::ptrdiff_t>(i);
    emit({c.nodes[i], c.at(p + 1), c.at(p + 2)});
  }
}

void EulerEngine::update(const CycleWork& w) {
  std::uint32_t a = 0;
  if (w.labels.empty()) {
    ++counter_;
    a = counter_;
  } else {
    a = *std::min_element(w.labels.begin(), w.labels.end());
  }
  require(3ull * counter_ <= n_, "tour counter above n/3");
  require(a <= n_, "tour label above n");

  if (mode_ == Mode::faithful) {
    for (const auto lab : w.labels) in_m_[lab] = 1;
    for (NodeId v = 1; v <= n_; ++v) {
      if (t_[v] != 0 && in_m_[t_[v]]) t_[v] = a;
    }
    for (const auto v : w.cycle->nodes) t_[v] = a;
    for (const auto lab : w.labels) in_m_[lab] = 0;
  } else {
    update_optimized(w, a);
  }

  stats_.final_c = counter_;
  stats_.max_t = std::max<std::uint64_t>(stats_.max_t, a);
}

void EulerEngine::update_optimized(const CycleWork& w, std::uint32_t a) {
  std::uint32_t target = 0;
  if (w.labels.empty()) {
    if (!free_groups_.empty()) {
      target = free_groups_.back();
      free_groups_.pop_back();
    } else {
      groups_.emplace_back();
      target = static_cast<std::uint32_t>(groups_.size());
    }
    ++live_groups_;
  } else {
    // Keep the largest group and fold the others into it.
    for (const auto lab : w.labels) {
      const auto g = label_group_[lab];
      if (target == 0 || groups_[g - 1].members.size() > groups_[target - 1].members.size()) target = g;
    }
    for (const auto lab : w.labels) {
      const auto g = label_group_[lab];
      label_group_[lab] = 0;
      if (g == target) continue;
      auto& src = groups_[g - 1].members;
      auto& dst = groups_[target - 1].members;
      for (const auto v : src) group_of_[v] = target;
      dst.insert(dst.end(), src.begin(), src.end());
      src.clear();
      src.shrink_to_fit();
      groups_[g - 1].label = 0;
      free_groups_.push_back(g);
      --live_groups_;
    }
  }
  auto& grp = groups_[target - 1];
  grp.label = a;
  label_group_[a] = target;
  for (const auto v : w.cycle->nodes) {
    if (group_of_[v] == 0) {
      group_of_[v] = target;
      grp.members.push_back(v);
    }
  }
}

void EulerEngine::finish() {
  if (forest_.live_edge_count() != 0) throw AlgoError(AlgoErrorKind::odd_degree);

  bool split = false;
  if (mode_ == Mode::faithful) {
    std::uint32_t seen = 0;
    for (NodeId v = 1; v <= n_ && !split; ++v) {
      if (t_[v] == 0) continue;
      if (seen == 0) {
        seen = t_[v];
      } else if (t_[v] != seen) {
        split = true;
      }
    }
  } else {
    split = live_groups_ > 1;
  }
  if (split) throw AlgoError(AlgoErrorKind::not_connected);

  write_f();
}

void EulerEngine::write_f() {
  for (NodeId v = 1; v <= n_; ++v) {
    const NodeId u = first_in_[v];
    if (u == kNoNode) continue;
    require(succ_[v] != kNoNode, "first-in edge without potential successor");
    emit({u, v, succ_[v]});
  }
}

RunStats run(EdgeReader& reader, TripleWriter& writer, Mode mode, RunObserver* observer) {
  if (reader.consumed() != 0 || reader.exhausted()) {
    throw std::logic_error("edge reader already consumed");
  }
  EulerEngine engine(reader.header().node_count, mode, writer, observer);
  while (auto e = reader.next()) engine.feed(*e);
  require(reader.consumed() == engine.stats().edges_read, "reader count differs from edges fed");
  engine.finish();
  return engine.stats();
}

}  // namespace wseuler
