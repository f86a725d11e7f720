// gk: prime graphs of finite groups from element-order spectra.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 undecided (realizable-multipartite only).

#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gk/corpus.hpp"
#include "gk/families.hpp"
#include "gk/json_io.hpp"
#include "gk/spectrum.hpp"
#include "gk/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitOpen = 3;

struct LoadedGraph {
  gk::GkGraph graph;
  std::string name;
};

LoadedGraph load_graph_file(const std::string& path) {
  const gk::json j = gk::read_json_file(path);
  if (gk::looks_like_spectrum(j)) {
    const gk::Spectrum s = gk::spectrum_from_json(j);
    return {gk::gk_graph_of_spectrum(s), s.name()};
  }
  if (gk::looks_like_graph(j)) return {gk::graph_from_json(j), path};
  throw gk::format_error(path + ": expected a spectrum (maximal_orders) or graph (vertices, edges) object");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int run_family(const std::string& kind_text, std::optional<gk::u64> n, std::optional<gk::u64> q,
               const std::string& path, const std::string& emit) {
  const auto kind = gk::parse_family_kind(kind_text);
  if (!kind) throw std::invalid_argument("unknown family kind \"" + kind_text + "\"");
  gk::GroupDescriptor d;
  d.kind = *kind;
  switch (*kind) {
    case gk::FamilyKind::alt:
    case gk::FamilyKind::sym:
      if (!n) throw std::invalid_argument(kind_text + " needs --n");
      d.parameter = *n;
      break;
    case gk::FamilyKind::psl2:
    case gk::FamilyKind::pgl2:
      if (!q) throw std::invalid_argument(kind_text + " needs --q");
      d.parameter = *q;
      break;
    case gk::FamilyKind::external:
      if (path.empty()) throw std::invalid_argument("external needs --path");
      d.path = path;
      break;
  }
  const gk::Spectrum s = gk::spectrum_of(d);
  if (emit == "spectrum") {
    std::cout << gk::dump(gk::spectrum_to_json(s));
    return kExitOk;
  }
  const gk::GkGraph g = gk::gk_graph_of_spectrum(s);
  if (emit == "graph") {
    std::cout << gk::dump(gk::graph_to_json(g));
  } else {
    std::cout << gk::dump(gk::report_to_json(gk::analyze(g, s.name())));
  }
  return kExitOk;
}

int run_verify(const std::string& dir, const std::string& builtin, const std::string& checks_text, unsigned jobs) {
  std::vector<gk::CorpusItem> items;
  if (!dir.empty() && !builtin.empty()) throw std::invalid_argument("give either a directory or --builtin, not both");
  if (!builtin.empty()) {
    items = gk::parse_builtin_sweep(builtin);
  } else if (!dir.empty()) {
    items = gk::directory_items(dir);
  } else {
    throw std::invalid_argument("verify-corpus needs a directory or --builtin");
  }
  std::vector<gk::CorpusCheck> checks;
  for (const auto& name : split(checks_text, ',')) {
    const auto c = gk::parse_corpus_check(name);
    if (!c) throw std::invalid_argument("unknown check \"" + name + "\"");
    checks.push_back(*c);
  }
  const gk::CorpusRunSummary summary = gk::run_corpus(items, checks, jobs);
  for (const auto& e : summary.input_errors) std::cerr << "input error: " << e << "\n";
  for (const auto& f : summary.failures) {
    std::cerr << "FAIL [" << gk::to_string(f.check) << "] " << f.item << ": " << f.detail << "\n";
  }
  std::cout << gk::dump(gk::summary_to_json(summary));
  if (!summary.input_errors.empty()) return kExitInput;
  return summary.failures.empty() ? kExitOk : kExitFailure;
}

int run_multipartite(const std::string& text) {
  std::vector<std::size_t> parts;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0 || item.front() == '-') {
      throw std::invalid_argument("cannot parse part size \"" + item + "\"");
    }
    parts.push_back(v);
  }
  const gk::MultipartiteVerdict v = gk::multipartite_realizability(parts);
  std::cout << gk::dump(gk::multipartite_verdict_to_json(v));
  return v.kind == gk::MultipartiteVerdictKind::open ? kExitOpen : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime (Gruenberg-Kegel) graphs of finite groups"};
  app.require_subcommand(1);

  auto* family = app.add_subcommand("family", "Spectrum, graph or report for a built-in family member");
  std::string kind;
  std::optional<gk::u64> n;
  std::optional<gk::u64> q;
  std::string path;
  std::string emit = "report";
  family->add_option("--kind", kind, "alt, sym, psl2, pgl2 or external")->required();
  family->add_option("--n", n, "degree for alt/sym");
  family->add_option("--q", q, "field order for psl2/pgl2");
  family->add_option("--path", path, "spectrum file for external");
  family->add_option("--emit", emit, "spectrum, graph or report")
      ->check(CLI::IsMember({"spectrum", "graph", "report"}));

  auto* analyze = app.add_subcommand("analyze", "Full report for a spectrum or graph JSON file");
  std::string analyze_file;
  analyze->add_option("file", analyze_file)->required();

  auto* srg = app.add_subcommand("srg-classify", "Strongly-regular verdict for a spectrum or graph JSON file");
  std::string srg_file;
  srg->add_option("file", srg_file)->required();

  auto* verify = app.add_subcommand("verify-corpus", "Check every graph of a corpus");
  std::string verify_dir;
  std::string builtin;
  std::string checks = "tau";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  verify->add_option("directory", verify_dir, "directory of spectrum/graph JSON files");
  verify->add_option("--builtin", builtin, std::string("sweep spec, e.g. ") + gk::kDefaultSweep + " or 'default'");
  verify->add_option("--check", checks, "comma list of tau, srg, multipartite")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  auto* multipartite = app.add_subcommand("realizable-multipartite", "Realizability verdict for part sizes");
  std::string parts;
  multipartite->add_option("parts", parts, "comma-separated part sizes, e.g. 3,3,3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (family->parsed()) return run_family(kind, n, q, path, emit);
    if (analyze->parsed()) {
      const LoadedGraph lg = load_graph_file(analyze_file);
      std::cout << gk::dump(gk::report_to_json(gk::analyze(lg.graph, lg.name)));
      return kExitOk;
    }
    if (srg->parsed()) {
      const LoadedGraph lg = load_graph_file(srg_file);
      std::cout << gk::dump(gk::srg_verdict_to_json(gk::classify_srg(lg.graph)));
      return kExitOk;
    }
    if (verify->parsed()) return run_verify(verify_dir, builtin, checks, jobs);
    if (multipartite->parsed()) return run_multipartite(parts);
  } catch (const std::exception& e) {
    std::cerr << "gk: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
