#include "gk/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "gk/theorems.hpp"

namespace gk {

namespace {

struct ItemResult {
  std::vector<CorpusCheck> vacuous;
  std::vector<CorpusCheck> passes;
  std::vector<CorpusFailure> failures;
  std::optional<std::string> input_error;
};

u64 parse_number(const std::string& text, const std::string& token) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("malformed sweep token \"" + token + "\"");
  }
  return std::stoull(text);
}

void append_range(std::vector<CorpusItem>& out, FamilyKind kind, const std::string& range, const std::string& token) {
  const bool field = kind == FamilyKind::psl2 || kind == FamilyKind::pgl2;
  u64 lo = field ? 3 : 2;
  u64 hi = 0;
  if (const auto dots = range.find(".."); dots != std::string::npos) {
    const std::string left = range.substr(0, dots);
    if (!left.empty()) lo = parse_number(left, token);
    hi = parse_number(range.substr(dots + 2), token);
  } else {
    lo = hi = parse_number(range, token);
  }
  if (lo > hi) throw std::invalid_argument("empty range in sweep token \"" + token + "\"");
  for (u64 x = lo; x <= hi; ++x) {
    if (field && !as_prime_power(x)) continue;
    GroupDescriptor d{kind, x, {}};
    d.validate();
    out.push_back({CorpusItem::Source::descriptor, d, {}});
  }
}

ItemResult evaluate(const CorpusItem& item, const std::vector<CorpusCheck>& checks) {
  ItemResult result;
  GkGraph g;
  try {
    g = load_item_graph(item);
  } catch (const std::exception& e) {
    result.input_error = item.name() + ": " + e.what();
    return result;
  }
  for (CorpusCheck check : checks) {
    switch (check) {
      case CorpusCheck::tau: {
        if (!g.has_vertex(2)) {
          result.vacuous.push_back(check);
          break;
        }
        const TauCheck tau = check_tau_union_of_cliques(g);
        if (tau.union_of_cliques) {
          result.passes.push_back(check);
        } else {
          const auto& w = *tau.witness;
          std::ostringstream detail;
          detail << "non-neighbours of 2 contain the induced path " << w[0] << "-" << w[1] << "-" << w[2];
          result.failures.push_back({item.name(), check, detail.str(), json(w)});
        }
        break;
      }
      case CorpusCheck::srg: {
        const SrgVerdict v = classify_srg(g);
        if (v.kind == SrgVerdictKind::not_srg) {
          result.vacuous.push_back(check);
        } else if (v.kind != SrgVerdictKind::ruled_out) {
          result.passes.push_back(check);
        } else {
          result.failures.push_back({item.name(), check, "strongly regular graph classified ruled_out: " + v.reason,
                                     srg_verdict_to_json(v)});
        }
        break;
      }
      case CorpusCheck::multipartite: {
        const auto parts = g.order() > 0 ? complete_multipartite_parts(g) : std::nullopt;
        if (!parts || parts->size() < 2) {
          result.vacuous.push_back(check);
          break;
        }
        const MultipartiteVerdict v = multipartite_realizability(*parts);
        if (v.kind != MultipartiteVerdictKind::not_realizable) {
          result.passes.push_back(check);
        } else {
          result.failures.push_back({item.name(), check, "complete multipartite graph classified not_realizable",
                                     multipartite_verdict_to_json(v)});
        }
        break;
      }
    }
  }
  return result;
}

}  // namespace

std::string to_string(CorpusCheck check) {
  switch (check) {
    case CorpusCheck::tau: return "tau";
    case CorpusCheck::srg: return "srg";
    case CorpusCheck::multipartite: return "multipartite";
  }
  return "?";
}

std::optional<CorpusCheck> parse_corpus_check(const std::string& text) {
  for (auto c : {CorpusCheck::tau, CorpusCheck::srg, CorpusCheck::multipartite}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string CorpusItem::name() const { return source == Source::file ? path.string() : descriptor.name(); }

std::vector<CorpusItem> parse_builtin_sweep(const std::string& text) {
  std::vector<CorpusItem> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == "default") {
      auto all = parse_builtin_sweep(kDefaultSweep);
      out.insert(out.end(), all.begin(), all.end());
      continue;
    }
    if (token == "external") {
      for (const auto& p : spectrum_files(data_directory())) {
        out.push_back({CorpusItem::Source::descriptor, GroupDescriptor::external(p), {}});
      }
      continue;
    }
    const auto colon = token.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed sweep token \"" + token + "\"");
    const auto kind = parse_family_kind(token.substr(0, colon));
    if (!kind || *kind == FamilyKind::external) {
      throw std::invalid_argument("unknown family in sweep token \"" + token + "\"");
    }
    append_range(out, *kind, token.substr(colon + 1), token);
  }
  if (out.empty()) throw std::invalid_argument("sweep \"" + text + "\" selects no groups");
  return out;
}

std::vector<CorpusItem> directory_items(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::invalid_argument(dir.string() + " is not a directory");
  std::vector<CorpusItem> out;
  for (const auto& p : spectrum_files(dir)) out.push_back({CorpusItem::Source::file, {}, p});
  if (out.empty()) throw std::invalid_argument(dir.string() + " contains no .json files");
  return out;
}

GkGraph load_item_graph(const CorpusItem& item) {
  if (item.source == CorpusItem::Source::descriptor) return gk_graph_of_spectrum(spectrum_of(item.descriptor));
  const json j = read_json_file(item.path.string());
  if (looks_like_spectrum(j)) return gk_graph_of_spectrum(spectrum_from_json(j));
  if (looks_like_graph(j)) return graph_from_json(j);
  throw format_error(item.path.string() + ": neither a spectrum nor a graph");
}

CorpusRunSummary run_corpus(const std::vector<CorpusItem>& items, const std::vector<CorpusCheck>& checks,
                            unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) results[i] = evaluate(items[i], checks);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, items.size()))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CorpusRunSummary s;
  s.items = items.size();
  for (CorpusCheck c : checks) s.tallies[c];
  for (const auto& r : results) {
    if (r.input_error) {
      s.input_errors.push_back(*r.input_error);
      continue;
    }
    for (CorpusCheck c : r.vacuous) {
      auto& t = s.tallies[c];
      ++t.processed;
      ++t.passed;
      ++t.vacuous;
    }
    for (CorpusCheck c : r.passes) {
      ++s.tallies[c].processed;
      ++s.tallies[c].passed;
    }
    for (const auto& f : r.failures) {
      ++s.tallies[f.check].processed;
      ++s.tallies[f.check].failed;
      s.failures.push_back(f);
    }
  }
  s.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

json summary_to_json(const CorpusRunSummary& s, bool include_duration) {
  json checks = json::object();
  for (const auto& [c, t] : s.tallies) {
    checks[to_string(c)] = {{"processed", t.processed}, {"passed", t.passed}, {"failed", t.failed}, {"vacuous", t.vacuous}};
  }
  json failures = json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"item", f.item}, {"check", to_string(f.check)}, {"detail", f.detail}, {"witness", f.witness}});
  }
  json out{{"items", s.items}, {"checks", checks}, {"failures", failures}, {"input_errors", s.input_errors}};
  if (include_duration) out["duration_seconds"] = s.duration_seconds;
  return out;
}

}  // namespace gk
