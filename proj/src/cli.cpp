#include "bergesat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "bergesat/berge.hpp"
#include "bergesat/canon.hpp"
#include "bergesat/constructions.hpp"
#include "bergesat/search.hpp"

namespace bergesat::cli {

namespace {

/// Flags shared by the search-driven commands.
struct RunConfig {
  int n = 0;
  int edges = 0;
  int uniform = 3;
  int ell = 4;
  int min_degree = 0;
  int threads = 0;
  std::string out_dir = ".";
  bool incremental = false;
  bool paper_threshold = false;
  bool verbose = false;
};

int default_threads() {
  if (const char* env = std::getenv("BERGESAT_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

SearchSpec to_spec(const RunConfig& c, std::ostream& err) {
  SearchSpec spec;
  spec.n_vertices = c.n;
  spec.n_edges = c.edges;
  spec.uniform = c.uniform;
  spec.ell = c.ell;
  spec.n_min_degree = c.min_degree;
  spec.workers = c.threads > 0 ? c.threads : default_threads();
  spec.incremental_freeness = c.incremental;
  spec.berge.paper_goodpair_threshold = c.paper_threshold;
  if (c.verbose) {
    spec.progress = [&err](const SearchProgress& p) {
      const double rate = p.seconds > 0 ? static_cast<double>(p.candidates) / p.seconds : 0.0;
      err << "progress: subtrees " << p.subtrees_done << "/" << p.subtrees_total
          << " candidates " << p.candidates << " (" << static_cast<long long>(rate) << "/s)\n";
    };
  }
  return spec;
}

struct NumberedLine {
  int line_number;
  Hypergraph hypergraph;
};

std::vector<NumberedLine> read_hypergraphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::vector<NumberedLine> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back({number, Hypergraph::parse_line(line)});
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

void add_search_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--uniform", c.uniform, "Edge size k")->capture_default_str();
  cmd->add_option("--ell", c.ell, "Clique size of the forbidden Berge-K_l")->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads (default: $BERGESAT_THREADS or all cores)");
  cmd->add_option("--out-dir", c.out_dir, "Directory for result files")->capture_default_str();
  cmd->add_flag("--incremental", c.incremental, "Prune edge prefixes that already contain a Berge-K_l");
  cmd->add_flag("--paper-goodpair-threshold", c.paper_threshold,
                "Require l-1 heavy common neighbours for a good pair");
  cmd->add_flag("--verbose,-v", c.verbose, "Progress counters on stderr");
}

int cmd_enumerate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const SearchSpec spec = to_spec(c, err);
  const SearchReport report = find_saturated(spec);
  const auto path = write_report(c.out_dir, spec, report);
  out << "file=" << path.string() << "\n"
      << "candidates=" << report.candidates << "\n"
      << "free=" << report.free << "\n"
      << "saturated=" << report.saturated << "\n"
      << "classes=" << report.representatives.size() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berge-K_l saturation search and verification"};
  app.require_subcommand(1);
  RunConfig config;

  auto* enumerate = app.add_subcommand("enumerate", "Find all saturated hypergraphs with n vertices and m edges");
  enumerate->add_option("--n", config.n, "Vertex count")->required();
  enumerate->add_option("--edges", config.edges, "Edge count")->required();
  enumerate->add_option("--min-degree", config.min_degree, "Only hypergraphs with this minimum degree")
      ->capture_default_str();
  add_search_flags(enumerate, config);

  std::string input;
  bool dedup_flag = false;
  std::string out_file;

  auto* check = app.add_subcommand("check", "Report FREE|NOTFREE SATURATED|NOTSATURATED per line");
  check->add_option("input", input, "Exchange-format file")->required();
  check->add_option("--ell", config.ell, "Clique size")->capture_default_str();
  check->add_flag("--paper-goodpair-threshold", config.paper_threshold,
                  "Require l-1 heavy common neighbours for a good pair");

  std::string family;
  std::vector<int> copies_pair;
  auto* construct = app.add_subcommand("construct", "Build the odd or even extremal construction");
  construct->add_option("--n", config.n, "Vertex count")->required();
  construct->add_option("--family", family, "odd or even")
      ->required()
      ->check(CLI::IsMember({"odd", "even"}));
  construct->add_option("--copies-pair", copies_pair, "Attach the gadgets on u,v instead of 0,1")
      ->delimiter(',')
      ->expected(2);
  construct->add_option("--out", out_file, "Also write the line to this file");

  int min_edges = 1;
  int max_edges = 0;
  bool lemma_degree = false;
  auto* satnum = app.add_subcommand("satnum", "Least edge count admitting a saturated hypergraph");
  satnum->add_option("--n", config.n, "Vertex count")->required();
  satnum->add_option("--max-edges", max_edges, "Largest edge count to try")->required();
  satnum->add_option("--min-edges", min_edges, "Smallest edge count to try")->capture_default_str();
  satnum->add_option("--min-degree", config.min_degree, "Explicit minimum-degree restriction")
      ->capture_default_str();
  satnum->add_flag("--min-degree-from-lemma", lemma_degree,
                   "Use minimum degree 2 (3-uniform K_4, n >= 7, edges <= n only)");
  add_search_flags(satnum, config);

  auto* canon = app.add_subcommand("canon", "Canonical form of each input line");
  canon->add_option("input", input, "Exchange-format file")->required();
  canon->add_flag("--dedup", dedup_flag, "One line per isomorphism class, sorted");
  canon->add_option("--out", out_file, "Write here instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidSpec;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(config, out, err);

    if (check->parsed()) {
      BergeOptions options;
      options.paper_goodpair_threshold = config.paper_threshold;
      std::ostringstream text;
      for (const auto& entry : read_hypergraphs(input)) {
        const auto verdict = saturation_verdict(entry.hypergraph.view(), config.ell, options);
        text << (verdict == SaturationVerdict::NotFree ? "NOTFREE" : "FREE") << ' '
             << (verdict == SaturationVerdict::Saturated ? "SATURATED" : "NOTSATURATED") << '\n';
      }
      out << text.str();
      return kOk;
    }

    if (construct->parsed()) {
      Hypergraph h = family == "odd" ? construction_odd(config.n) : construction_even(config.n);
      if (!copies_pair.empty()) {
        const Hypergraph base = family == "odd" ? construction_odd(5) : construction_even_base();
        const int copies = (config.n - base.vertex_count()) / 2;
        h = attach_T(base, copies_pair[0], copies_pair[1], copies);
      }
      const std::string line = h.to_line();
      out << line << '\n';
      if (!out_file.empty()) {
        std::ofstream file(out_file, std::ios::binary);
        file << line << '\n';
      }
      err << "verified: " << (is_saturated(h, 4) ? "SATURATED" : "NOTSATURATED") << '\n';
      return kOk;
    }

    if (satnum->parsed()) {
      if (lemma_degree) {
        if (config.uniform != 3 || config.ell != 4 || config.n < 7 || max_edges > config.n) {
          err << "error: --min-degree-from-lemma only holds for 3-uniform K_4 with n >= 7 and "
                 "at most n edges\n";
          return kInvalidSpec;
        }
        config.min_degree = std::max(config.min_degree, 2);
      }
      SearchSpec spec = to_spec(config, err);
      const SaturationResult result = saturation_number(spec, min_edges, max_edges);
      if (!result.sat) {
        out << "sat=none\n";
        return kOk;
      }
      spec.n_edges = *result.sat;
      const SearchReport& report = result.reports.back();
      const auto path = write_report(config.out_dir, spec, report);
      out << "sat=" << *result.sat << "\n"
          << "classes=" << report.representatives.size() << "\n"
          << "file=" << path.string() << "\n";
      return kOk;
    }

    if (canon->parsed()) {
      const auto entries = read_hypergraphs(input);
      std::ostringstream text;
      if (dedup_flag) {
        std::vector<Hypergraph> all;
        for (const auto& entry : entries) all.push_back(entry.hypergraph);
        for (const auto& h : dedup(all)) text << h.to_line() << '\n';
      } else {
        for (const auto& entry : entries) text << canonical_form(entry.hypergraph).line << '\n';
      }
      if (out_file.empty()) {
        out << text.str();
      } else {
        std::ofstream file(out_file, std::ios::binary);
        file << text.str();
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Parse: return kParseError;
      case ErrorKind::TooLarge: return kBudgetExceeded;
      default: return kInvalidSpec;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidSpec;
  }
  return kInvalidSpec;
}

}  // namespace bergesat::cli
