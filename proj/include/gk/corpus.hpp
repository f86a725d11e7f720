#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gk/families.hpp"
#include "gk/json_io.hpp"

namespace gk {

// Properties every genuine prime graph must satisfy.
enum class CorpusCheck {
  tau,           // non-neighbours of 2 form a union of cliques
  srg,           // a strongly regular graph is never ruled_out
  multipartite,  // a complete multipartite graph is never not_realizable
};

std::string to_string(CorpusCheck check);
std::optional<CorpusCheck> parse_corpus_check(const std::string& text);

struct CorpusItem {
  enum class Source { descriptor, file };
  Source source = Source::descriptor;
  GroupDescriptor descriptor;
  // Spectrum or graph JSON, auto-detected.
  std::filesystem::path path;

  std::string name() const;
};

// Comma-separated tokens: "alt:5..100", "sym:7", "psl2:..2000", "external",
// or "default" for the full built-in sweep. psl2/pgl2 ranges keep only prime
// powers. Throws std::invalid_argument on malformed input.
std::vector<CorpusItem> parse_builtin_sweep(const std::string& text);

inline constexpr const char* kDefaultSweep = "alt:5..100,sym:5..100,psl2:3..2000,pgl2:3..2000,external";

// Every *.json file in dir; std::invalid_argument when there are none.
std::vector<CorpusItem> directory_items(const std::filesystem::path& dir);

GkGraph load_item_graph(const CorpusItem& item);

struct CheckTally {
  std::size_t processed = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Passed because the hypothesis does not apply (no vertex 2, not an SRG...).
  std::size_t vacuous = 0;
};

struct CorpusFailure {
  std::string item;
  CorpusCheck check = CorpusCheck::tau;
  std::string detail;
  json witness;
};

struct CorpusRunSummary {
  std::size_t items = 0;
  std::map<CorpusCheck, CheckTally> tallies;
  std::vector<CorpusFailure> failures;
  std::vector<std::string> input_errors;
  double duration_seconds = 0.0;

  bool ok() const { return failures.empty() && input_errors.empty(); }
};

// Results are aggregated in item order, independent of jobs.
CorpusRunSummary run_corpus(const std::vector<CorpusItem>& items, const std::vector<CorpusCheck>& checks,
                            unsigned jobs);

json summary_to_json(const CorpusRunSummary& s, bool include_duration = true);

}  // namespace gk
