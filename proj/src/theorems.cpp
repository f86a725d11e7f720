#include "gk/theorems.hpp"

#include <algorithm>
#include <set>

#include "gk/families.hpp"
#include "gk/spectrum.hpp"

namespace gk {

namespace {

json parameters_to_json(const std::optional<SrgParameters>& p) {
  if (!p) return nullptr;
  return json{{"v", p->v}, {"k", p->k}, {"lambda", p->lambda}, {"mu", p->mu}};
}

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return json(*v);
}

}  // namespace

std::vector<u64> non_neighbors_of_two(const GkGraph& g) {
  if (!g.has_vertex(2)) throw missing_two_error("vertex 2 is absent (odd-order group)");
  const std::size_t two = g.index_of(2);
  const VertexMask rest = g.all() & ~g.row(two) & ~(VertexMask{1} << two);
  return g.labels_of(rest);
}

TauCheck check_tau_union_of_cliques(const GkGraph& g) {
  TauCheck out;
  out.tau = non_neighbors_of_two(g);
  out.witness = find_induced_p3(induced_subgraph(g, out.tau));
  out.union_of_cliques = !out.witness.has_value();
  return out;
}

std::string to_string(SrgVerdictKind kind) {
  switch (kind) {
    case SrgVerdictKind::not_srg: return "not_srg";
    case SrgVerdictKind::complement_triangle_free_srg_candidate: return "complement_triangle_free_srg_candidate";
    case SrgVerdictKind::complete_multipartite_parts_of_two: return "complete_multipartite_parts_of_two";
    case SrgVerdictKind::ruled_out: return "ruled_out";
  }
  return "?";
}

SrgVerdict classify_srg(const GkGraph& g) {
  SrgVerdict out;
  out.parameters = srg_parameters(g);
  if (!out.parameters) {
    out.kind = SrgVerdictKind::not_srg;
    out.reason = "not strongly regular";
    return out;
  }
  out.parts = complete_multipartite_parts(g);
  if (out.parts && std::all_of(out.parts->begin(), out.parts->end(), [](std::size_t s) { return s == 2; })) {
    out.kind = SrgVerdictKind::complete_multipartite_parts_of_two;
    out.reason = "complete multipartite with all parts of size 2";
    return out;
  }
  const GkGraph co = complement(g);
  out.complement_parameters = srg_parameters(co);
  if (!out.complement_parameters) {
    out.kind = SrgVerdictKind::ruled_out;
    out.reason = "complement is a union of cliques and the parts are not all of size 2";
    return out;
  }
  out.witness = find_triangle(co);
  if (out.witness) {
    out.kind = SrgVerdictKind::ruled_out;
    out.reason = "complement is strongly regular but contains a triangle";
  } else {
    out.kind = SrgVerdictKind::complement_triangle_free_srg_candidate;
    out.reason = "complement is a triangle-free strongly regular graph";
  }
  return out;
}

std::string to_string(MultipartiteVerdictKind kind) {
  switch (kind) {
    case MultipartiteVerdictKind::realizable_solvable: return "realizable_solvable";
    case MultipartiteVerdictKind::realizable: return "realizable";
    case MultipartiteVerdictKind::not_realizable: return "not_realizable";
    case MultipartiteVerdictKind::open: return "open";
  }
  return "?";
}

std::string to_string(MultipartiteRule rule) {
  switch (rule) {
    case MultipartiteRule::parts_at_least_three: return "parts_at_least_three";
    case MultipartiteRule::two_part_sum_rule: return "two_part_sum_rule";
    case MultipartiteRule::parts_at_most_two: return "parts_at_most_two";
    case MultipartiteRule::undecided: return "undecided";
  }
  return "?";
}

MultipartiteVerdict multipartite_realizability(std::vector<std::size_t> parts) {
  if (parts.empty()) throw std::invalid_argument("multipartite_realizability: need at least one part");
  if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
    throw std::invalid_argument("multipartite_realizability: part sizes must be positive");
  }
  std::sort(parts.begin(), parts.end());
  MultipartiteVerdict out;
  out.parts = parts;
  // A single part is an edgeless graph, which the size-three rule does not
  // cover (three isolated primes occur for PSL2(7)).
  if (parts.size() >= 2 && parts.front() >= 3) {
    out.kind = MultipartiteVerdictKind::not_realizable;
    out.rule = MultipartiteRule::parts_at_least_three;
  } else if (parts.size() == 2) {
    const std::size_t n = parts[0];
    const std::size_t m = parts[1];
    const bool ok = n + m <= 6 && !(n == 3 && m == 3);
    out.kind = ok ? MultipartiteVerdictKind::realizable : MultipartiteVerdictKind::not_realizable;
    out.rule = MultipartiteRule::two_part_sum_rule;
  } else if (parts.back() <= 2) {
    out.kind = MultipartiteVerdictKind::realizable_solvable;
    out.rule = MultipartiteRule::parts_at_most_two;
  } else {
    out.kind = MultipartiteVerdictKind::open;
    out.rule = MultipartiteRule::undecided;
  }
  return out;
}

bool solvable_realizable(const GkGraph& g) {
  const GkGraph co = complement(g);
  return is_triangle_free(co) && is_k_colorable(co, 3);
}

Remark1Witness remark1_witness(u64 p, unsigned m) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("remark1_witness: p must be an odd prime");
  if (m == 0) throw std::invalid_argument("remark1_witness: m must be positive");
  u64 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw range_error("remark1_witness: p^m exceeds 10^6");
  }
  Remark1Witness out;
  out.p = p;
  out.m = m;
  out.q = q;
  const GkGraph g = gk_graph_of_spectrum(pgl2_spectrum(q));
  for (u64 v : g.labels()) {
    if (v != p && !g.adjacent(v, p)) out.non_neighbors.push_back(v);
  }
  std::set<u64> expected = prime_divisors(q - 1);
  for (u64 r : prime_divisors(q + 1)) expected.insert(r);
  out.expected_non_neighbors.assign(expected.begin(), expected.end());
  out.matches_expected = out.non_neighbors == out.expected_non_neighbors;
  const GkGraph sub = induced_subgraph(g, out.non_neighbors);
  out.edges = sub.edges();
  const std::size_t n = sub.order();
  out.connected = n > 0 && component_masks(sub).size() == 1;
  out.complete = sub.edge_count() == n * (n - 1) / 2;
  return out;
}

AnalysisReport analyze(const GkGraph& g, const std::string& name) {
  AnalysisReport r;
  r.name = name;
  r.vertices = g.labels();
  r.edge_count = g.edge_count();
  r.components = connected_components(g);
  r.s = r.components.size();
  r.t = independence_number(g);
  if (g.has_vertex(2)) {
    const TauCheck tau = check_tau_union_of_cliques(g);
    r.tau = tau.tau;
    r.tau_union_of_cliques = tau.union_of_cliques;
    r.tau_witness = tau.witness;
    r.t_at_2 = independence_number_at(g, 2);
  } else {
    r.note = "odd order: solvable by Feit-Thompson; checks at vertex 2 skipped";
  }
  r.srg = classify_srg(g);
  if (g.order() > 0) {
    r.multipartite_parts = complete_multipartite_parts(g);
    if (r.multipartite_parts) r.multipartite = multipartite_realizability(*r.multipartite_parts);
  }
  r.solvable_realizable = solvable_realizable(g);
  return r;
}

json srg_verdict_to_json(const SrgVerdict& v) {
  return json{{"verdict", to_string(v.kind)},
              {"parameters", parameters_to_json(v.parameters)},
              {"complement_parameters", parameters_to_json(v.complement_parameters)},
              {"parts", optional_to_json(v.parts)},
              {"witness", optional_to_json(v.witness)},
              {"reason", v.reason}};
}

json multipartite_verdict_to_json(const MultipartiteVerdict& v) {
  return json{{"verdict", to_string(v.kind)}, {"rule", to_string(v.rule)}, {"parts", v.parts}};
}

json report_to_json(const AnalysisReport& r) {
  return json{{"report_version", kReportVersion},
              {"name", r.name},
              {"vertices", r.vertices},
              {"edge_count", r.edge_count},
              {"s", r.s},
              {"components", r.components},
              {"t", r.t},
              {"t_at_2", optional_to_json(r.t_at_2)},
              {"tau", optional_to_json(r.tau)},
              {"tau_union_of_cliques", optional_to_json(r.tau_union_of_cliques)},
              {"tau_witness", optional_to_json(r.tau_witness)},
              {"srg", srg_verdict_to_json(r.srg)},
              {"multipartite_parts", optional_to_json(r.multipartite_parts)},
              {"multipartite", r.multipartite ? multipartite_verdict_to_json(*r.multipartite) : json(nullptr)},
              {"solvable_realizable", r.solvable_realizable},
              {"note", optional_to_json(r.note)}};
}

}  // namespace gk
