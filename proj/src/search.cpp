#include "bergesat/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "bergesat/canon.hpp"

namespace bergesat {

namespace {

constexpr std::size_t kMaxCandidateEdges = 1 << 18;
constexpr std::size_t kPrefixesPerWorker = 32;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= r; ++i) {
    out = out * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
    if (out > (std::size_t{1} << 40)) return out;
  }
  return out;
}

/// All k-subsets of 0..n-1 as masks, in lexicographic order of their tuples.
std::vector<VertexMask> all_edges_lex(int n, int k) {
  std::vector<VertexMask> out;
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    VertexMask mask = 0;
    for (int v : s) mask |= bit(v);
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return out;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

struct PartialState {
  std::vector<VertexMask> chosen;
  std::array<int, 64> degree{};
  int next = 0;
};

/// Backtracking over strictly increasing edge indices with degree-deficit
/// pruning and optional prefix freeness pruning.
class Enumerator {
 public:
  explicit Enumerator(const SearchSpec& spec)
      : spec_(spec), edges_(all_edges_lex(spec.n_vertices, spec.uniform)) {
    const int n = spec.n_vertices;
    const std::size_t total = edges_.size();
    suffix_.assign((total + 1) * static_cast<std::size_t>(n), 0);
    for (std::size_t i = total; i-- > 0;) {
      for (int v = 0; v < n; ++v) {
        suffix_[i * n + v] = suffix_[(i + 1) * n + v] + ((edges_[i] & bit(v)) ? 1 : 0);
      }
    }
  }

  PartialState root() const { return {}; }

  /// Whether `slots` more edges taken from index `from` onwards can still
  /// lift every vertex to the minimum degree.
  bool feasible(const std::array<int, 64>& degree, std::size_t from, int slots) const {
    const int n = spec_.n_vertices;
    const int delta = spec_.n_min_degree;
    if (delta == 0) return true;
    int deficit_total = 0;
    for (int v = 0; v < n; ++v) {
      const int deficit = delta - degree[v];
      if (deficit <= 0) continue;
      deficit_total += deficit;
      if (std::min(suffix_[from * n + v], slots) < deficit) return false;
    }
    return deficit_total <= slots * spec_.uniform;
  }

  /// Descends from `state` until `depth` edges are chosen; calls emit(state).
  template <class Emit>
  void descend(PartialState& state, int depth, Emit&& emit) const {
    const int placed = static_cast<int>(state.chosen.size());
    if (placed == depth) {
      emit(state);
      return;
    }
    const int remaining = spec_.n_edges - placed;
    const std::size_t total = edges_.size();
    const int first = state.next;
    const int freeness_from = spec_.ell * (spec_.ell - 1) / 2;
    for (std::size_t idx = static_cast<std::size_t>(first);
         idx + static_cast<std::size_t>(remaining) <= total; ++idx) {
      if (!feasible(state.degree, idx, remaining)) break;
      const VertexMask e = edges_[idx];
      for_each_bit(e, [&](Vertex v) { ++state.degree[v]; });
      state.chosen.push_back(e);
      bool ok = feasible(state.degree, idx + 1, remaining - 1);
      if (ok && spec_.incremental_freeness && placed + 1 >= freeness_from) {
        ok = is_berge_free(EdgeMasks{spec_.n_vertices, spec_.uniform, state.chosen}, spec_.ell);
      }
      if (ok) {
        state.next = static_cast<int>(idx) + 1;
        descend(state, depth, emit);
      }
      state.chosen.pop_back();
      for_each_bit(e, [&](Vertex v) { --state.degree[v]; });
    }
    state.next = first;
  }

  bool root_feasible() const {
    return feasible(std::array<int, 64>{}, 0, spec_.n_edges);
  }

 private:
  const SearchSpec& spec_;
  std::vector<VertexMask> edges_;
  std::vector<int> suffix_;
};

struct SubtreeResult {
  std::uint64_t candidates = 0;
  std::uint64_t free = 0;
  std::uint64_t saturated = 0;
  std::set<std::string> lines;
};

}  // namespace

void validate(const SearchSpec& spec) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); };
  if (spec.n_vertices < 1 || spec.n_vertices > kMaxVertices) fail("n must be in 1..64");
  if (spec.uniform < 2 || spec.uniform > spec.n_vertices) fail("uniformity must be in 2..n");
  if (spec.ell < 3 || spec.ell > 11) fail("clique size must be in 3..11");
  if (spec.n_min_degree < 0) fail("minimum degree must be non-negative");
  if (spec.workers < 1) fail("need at least one worker");
  const std::size_t total = binomial(spec.n_vertices, spec.uniform);
  if (total > kMaxCandidateEdges) fail("too many possible edges to enumerate");
  if (spec.n_edges < 0 || static_cast<std::size_t>(spec.n_edges) > total) {
    fail("edge count must be in 0..C(n,k)");
  }
}

void for_each_candidate(const SearchSpec& spec, const std::function<void(const EdgeMasks&)>& emit) {
  validate(spec);
  const Enumerator en(spec);
  if (!en.root_feasible()) return;
  PartialState state = en.root();
  en.descend(state, spec.n_edges, [&](const PartialState& s) {
    emit(EdgeMasks{spec.n_vertices, spec.uniform, s.chosen});
  });
}

std::vector<Hypergraph> enumerate_hypergraphs(const SearchSpec& spec) {
  std::vector<Hypergraph> out;
  for_each_candidate(spec, [&](const EdgeMasks& e) {
    out.push_back(Hypergraph::from_masks(e.n, e.k, e.edges));
  });
  return out;
}

SearchReport find_saturated(const SearchSpec& spec) {
  validate(spec);
  const auto start = Clock::now();
  const Enumerator en(spec);
  SearchReport report;
  report.per_worker_candidates.assign(static_cast<std::size_t>(spec.workers), 0);

  std::vector<PartialState> prefixes;
  if (en.root_feasible()) {
    const std::size_t wanted = kPrefixesPerWorker * static_cast<std::size_t>(spec.workers);
    for (int depth = 0;; ++depth) {
      prefixes.clear();
      PartialState root = en.root();
      en.descend(root, depth, [&](const PartialState& s) { prefixes.push_back(s); });
      if (prefixes.size() >= wanted || depth == spec.n_edges || prefixes.empty()) break;
    }
  }

  std::vector<SubtreeResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::atomic<std::uint64_t> seen{0};
  std::mutex progress_mutex;
  auto last_progress = start;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](int id) {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) return;
        PartialState state = prefixes[i];
        SubtreeResult& r = results[i];
        en.descend(state, spec.n_edges, [&](const PartialState& s) {
          ++r.candidates;
          const EdgeMasks view{spec.n_vertices, spec.uniform, s.chosen};
          const SaturationVerdict verdict = saturation_verdict(view, spec.ell, spec.berge);
          if (verdict == SaturationVerdict::NotFree) return;
          ++r.free;
          if (verdict != SaturationVerdict::Saturated) return;
          ++r.saturated;
          r.lines.insert(canonical_form(Hypergraph::from_masks(view.n, view.k, view.edges)).line);
        });
        report.per_worker_candidates[id] += r.candidates;
        seen += r.candidates;
        const std::size_t finished = ++done;
        if (spec.progress) {
          std::lock_guard lock(progress_mutex);
          if (seconds_since(last_progress) >= 1.0 || finished == prefixes.size()) {
            last_progress = Clock::now();
            spec.progress({finished, prefixes.size(), seen.load(), seconds_since(start)});
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = prefixes.size();
    }
  };

  if (spec.workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < spec.workers; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::set<std::string> lines;
  for (auto& r : results) {
    report.candidates += r.candidates;
    report.free += r.free;
    report.saturated += r.saturated;
    lines.merge(r.lines);
  }
  for (const auto& line : lines) report.representatives.push_back(Hypergraph::parse_line(line));
  report.seconds = seconds_since(start);
  return report;
}

SaturationResult saturation_number(const SearchSpec& spec, int m_lo, int m_hi) {
  if (m_lo > m_hi) throw Error(ErrorKind::InvalidSpec, "empty edge-count range");
  SaturationResult out;
  for (int m = m_lo; m <= m_hi; ++m) {
    SearchSpec at = spec;
    at.n_edges = m;
    out.reports.push_back(find_saturated(at));
    if (out.reports.back().saturated > 0) {
      out.sat = m;
      break;
    }
  }
  return out;
}

std::string result_file_name(const SearchSpec& spec) {
  return "sat_n" + std::to_string(spec.uniform) + "u_" + std::to_string(spec.n_vertices) + "v_" +
         std::to_string(spec.n_edges) + "e_l" + std::to_string(spec.ell) + ".txt";
}

std::string summary_text(const SearchReport& report) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", report.seconds);
  return "candidates=" + std::to_string(report.candidates) + "\n" +
         "free=" + std::to_string(report.free) + "\n" +
         "saturated=" + std::to_string(report.saturated) + "\n" +
         "classes=" + std::to_string(report.representatives.size()) + "\n" +
         "seconds=" + seconds + "\n";
}

std::filesystem::path write_report(const std::filesystem::path& dir, const SearchSpec& spec,
                                   const SearchReport& report) {
  std::filesystem::create_directories(dir);
  const auto path = dir / result_file_name(spec);
  {
    std::ofstream out(path, std::ios::binary);
    for (const auto& h : report.representatives) out << h.to_line() << '\n';
    if (!out) throw std::runtime_error("cannot write " + path.string());
  }
  auto summary_path = path;
  summary_path.replace_extension(".summary");
  std::ofstream summary(summary_path, std::ios::binary);
  summary << summary_text(report);
  if (!summary) throw std::runtime_error("cannot write " + summary_path.string());
  return path;
}

}  // namespace bergesat
