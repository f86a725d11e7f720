#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gk/graph.hpp"
#include "gk/json_io.hpp"

namespace gk {

// Raised by the tau operations when 2 is not a vertex (odd-order group).
class missing_two_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using Triple = std::array<u64, 3>;

// tau: vertices other than 2 that are not adjacent to 2.
std::vector<u64> non_neighbors_of_two(const GkGraph& g);

struct TauCheck {
  std::vector<u64> tau;
  bool union_of_cliques = true;
  // Induced path a-b-c inside tau when union_of_cliques is false.
  std::optional<Triple> witness;
};

TauCheck check_tau_union_of_cliques(const GkGraph& g);

enum class SrgVerdictKind {
  not_srg,
  complement_triangle_free_srg_candidate,
  complete_multipartite_parts_of_two,
  ruled_out,
};

std::string to_string(SrgVerdictKind kind);

// Necessary-condition classification of a strongly regular graph as a
// possible prime graph. A candidate verdict does not assert realizability.
struct SrgVerdict {
  SrgVerdictKind kind = SrgVerdictKind::not_srg;
  std::optional<SrgParameters> parameters;
  std::optional<SrgParameters> complement_parameters;
  std::optional<std::vector<std::size_t>> parts;
  // Triangle in the complement for ruled_out verdicts that have one.
  std::optional<Triple> witness;
  std::string reason;
};

SrgVerdict classify_srg(const GkGraph& g);

enum class MultipartiteVerdictKind { realizable_solvable, realizable, not_realizable, open };

enum class MultipartiteRule {
  parts_at_least_three,
  two_part_sum_rule,
  parts_at_most_two,
  undecided,
};

std::string to_string(MultipartiteVerdictKind kind);
std::string to_string(MultipartiteRule rule);

struct MultipartiteVerdict {
  MultipartiteVerdictKind kind = MultipartiteVerdictKind::open;
  MultipartiteRule rule = MultipartiteRule::undecided;
  std::vector<std::size_t> parts;
};

// Rule cascade over the part sizes of a complete multipartite graph.
// Throws std::invalid_argument for an empty or zero-containing multiset.
MultipartiteVerdict multipartite_realizability(std::vector<std::size_t> parts);

// Complement triangle-free and 3-colourable.
bool solvable_realizable(const GkGraph& g);

struct Remark1Witness {
  u64 p = 0;
  unsigned m = 0;
  u64 q = 0;
  std::vector<u64> non_neighbors;
  // pi(q - 1) united with pi(q + 1).
  std::vector<u64> expected_non_neighbors;
  std::vector<Edge> edges;
  bool matches_expected = false;
  bool connected = false;
  bool complete = false;

  bool holds() const { return matches_expected && connected && !complete; }
};

// Non-neighbours of p in the prime graph of PGL2(p^m). Requires p odd prime,
// m >= 1, p^m <= 10^6.
Remark1Witness remark1_witness(u64 p, unsigned m);

struct AnalysisReport {
  std::string name;
  std::vector<u64> vertices;
  std::size_t edge_count = 0;
  std::size_t s = 0;
  std::vector<std::vector<u64>> components;
  std::size_t t = 0;
  std::optional<std::size_t> t_at_2;
  std::optional<std::vector<u64>> tau;
  std::optional<bool> tau_union_of_cliques;
  std::optional<Triple> tau_witness;
  SrgVerdict srg;
  std::optional<std::vector<std::size_t>> multipartite_parts;
  std::optional<MultipartiteVerdict> multipartite;
  bool solvable_realizable = false;
  std::optional<std::string> note;
};

AnalysisReport analyze(const GkGraph& g, const std::string& name);

inline constexpr int kReportVersion = 1;

json srg_verdict_to_json(const SrgVerdict& v);
json multipartite_verdict_to_json(const MultipartiteVerdict& v);
json report_to_json(const AnalysisReport& r);

}  // namespace gk
