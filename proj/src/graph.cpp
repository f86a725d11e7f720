#include "gk/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace gk {

namespace {

inline VertexMask bit(std::size_t i) { return VertexMask{1} << i; }
inline std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }
inline std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

// Bitset branch and bound for maximum cliques with a greedy colouring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(const GkGraph& g) : g_(g) {}

  VertexMask run(VertexMask candidates, VertexMask forced) {
    best_ = forced;
    best_size_ = popcount(forced);
    expand(candidates, forced);
    return best_;
  }

 private:
  void expand(VertexMask cand, VertexMask current) {
    const std::size_t size = popcount(current);
    if (cand == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    std::array<std::size_t, kMaxVertices> order{};
    std::array<std::size_t, kMaxVertices> bound{};
    std::size_t count = 0;
    VertexMask uncolored = cand;
    std::size_t color = 0;
    while (uncolored != 0) {
      ++color;
      VertexMask available = uncolored;
      while (available != 0) {
        const std::size_t v = lowest(available);
        available &= ~bit(v) & ~g_.row(v);
        uncolored &= ~bit(v);
        order[count] = v;
        bound[count] = color;
        ++count;
      }
    }
    for (std::size_t i = count; i-- > 0;) {
      if (size + bound[i] <= best_size_) return;
      const std::size_t v = order[i];
      expand(cand & g_.row(v), current | bit(v));
      cand &= ~bit(v);
    }
  }

  const GkGraph& g_;
  VertexMask best_ = 0;
  std::size_t best_size_ = 0;
};

class Colorer {
 public:
  Colorer(const GkGraph& g, unsigned k) : g_(g), k_(k), color_(g.order(), kNone) {}

  bool run() { return assign(g_.all(), 0); }
  std::vector<unsigned> colors() const { return color_; }

 private:
  static constexpr unsigned kNone = ~0u;

  bool assign(VertexMask uncolored, unsigned used) {
    if (uncolored == 0) return true;
    // DSATUR: most constrained vertex first, ties by degree into the rest.
    std::size_t pick = lowest(uncolored);
    std::size_t pick_sat = 0;
    std::size_t pick_deg = 0;
    bool first = true;
    for (VertexMask m = uncolored; m != 0; m &= m - 1) {
      const std::size_t v = lowest(m);
      std::size_t sat = 0;
      for (unsigned c = 0; c < used; ++c) sat += (g_.row(v) & classes_[c]) != 0;
      const std::size_t deg = popcount(g_.row(v) & uncolored);
      if (first || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        first = false;
      }
    }
    if (pick_sat >= k_) return false;
    const unsigned limit = std::min(k_, used + 1);
    for (unsigned c = 0; c < limit; ++c) {
      if (g_.row(pick) & classes_[c]) continue;
      classes_[c] |= bit(pick);
      color_[pick] = c;
      if (assign(uncolored & ~bit(pick), std::max(used, c + 1))) return true;
      classes_[c] &= ~bit(pick);
      color_[pick] = kNone;
    }
    return false;
  }

  const GkGraph& g_;
  unsigned k_;
  std::vector<unsigned> color_;
  std::array<VertexMask, kMaxVertices> classes_{};
};

}  // namespace

GkGraph GkGraph::build(std::vector<u64> labels, const std::vector<Edge>& edges) {
  if (labels.size() > kMaxVertices) {
    throw graph_error("graph has " + std::to_string(labels.size()) + " vertices; at most 64 supported");
  }
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) throw graph_error("vertex labels must be positive");
    if (i > 0 && labels[i] == labels[i - 1]) throw graph_error("duplicate vertex label " + std::to_string(labels[i]));
  }
  GkGraph g;
  g.labels_ = std::move(labels);
  for (const auto& [a, b] : edges) {
    if (a == b) throw graph_error("loop at vertex " + std::to_string(a));
    if (!g.has_vertex(a) || !g.has_vertex(b)) {
      throw graph_error("edge " + std::to_string(a) + "-" + std::to_string(b) + " has an endpoint outside the vertex set");
    }
    const std::size_t i = g.index_of(a);
    const std::size_t j = g.index_of(b);
    g.adj_[i] |= bit(j);
    g.adj_[j] |= bit(i);
  }
  return g;
}

bool GkGraph::has_vertex(u64 label) const { return std::binary_search(labels_.begin(), labels_.end(), label); }

std::size_t GkGraph::index_of(u64 label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw graph_error("vertex " + std::to_string(label) + " not in graph");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool GkGraph::adjacent(u64 a, u64 b) const { return (adj_[index_of(a)] & bit(index_of(b))) != 0; }

std::size_t GkGraph::degree(u64 label) const { return popcount(adj_[index_of(label)]); }

std::size_t GkGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < order(); ++i) total += popcount(adj_[i]);
  return total / 2;
}

std::vector<Edge> GkGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < order(); ++i) {
    for (VertexMask m = adj_[i] & ~((bit(i) << 1) - 1); m != 0; m &= m - 1) {
      out.emplace_back(labels_[i], labels_[lowest(m)]);
    }
  }
  return out;
}

std::vector<u64> GkGraph::labels_of(VertexMask mask) const {
  std::vector<u64> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(labels_[lowest(mask)]);
  return out;
}

VertexMask GkGraph::mask_of(const std::vector<u64>& labels) const {
  VertexMask m = 0;
  for (u64 l : labels) m |= bit(index_of(l));
  return m;
}

bool SrgParameters::satisfies_identity() const {
  if (k + 1 > v) return false;
  if (lambda + 1 > k && k > 0) return false;
  return (v - k - 1) * mu == k * (k - lambda - 1);
}

GkGraph complement(const GkGraph& g) {
  GkGraph out;
  out.labels_ = g.labels_;
  const VertexMask all = g.all();
  for (std::size_t i = 0; i < g.order(); ++i) out.adj_[i] = ~g.adj_[i] & all & ~bit(i);
  return out;
}

GkGraph induced_subgraph(const GkGraph& g, const std::vector<u64>& subset) {
  const VertexMask keep = g.mask_of(subset);
  GkGraph out;
  out.labels_ = g.labels_of(keep);
  std::vector<std::size_t> source;
  for (VertexMask m = keep; m != 0; m &= m - 1) source.push_back(lowest(m));
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      if (g.adj_[source[i]] & bit(source[j])) out.adj_[i] |= bit(j);
    }
  }
  return out;
}

std::vector<VertexMask> component_masks(const GkGraph& g) {
  std::vector<VertexMask> out;
  VertexMask remaining = g.all();
  while (remaining != 0) {
    VertexMask comp = bit(lowest(remaining));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m != 0; m &= m - 1) next |= g.row(lowest(m));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

std::vector<std::vector<u64>> connected_components(const GkGraph& g) {
  std::vector<std::vector<u64>> out;
  for (VertexMask m : component_masks(g)) out.push_back(g.labels_of(m));
  return out;
}

std::optional<std::array<u64, 3>> find_induced_p3(const GkGraph& g) {
  // An edge b-a whose endpoints have different closed neighbourhoods yields
  // a vertex c adjacent to exactly one of them.
  for (std::size_t a = 0; a < g.order(); ++a) {
    const VertexMask closed_a = g.row(a) | bit(a);
    for (VertexMask m = g.row(a); m != 0; m &= m - 1) {
      const std::size_t b = lowest(m);
      const VertexMask closed_b = g.row(b) | bit(b);
      const VertexMask only_b = closed_b & ~closed_a;
      if (only_b != 0) {
        const auto& l = g.labels();
        return std::array<u64, 3>{l[a], l[b], l[lowest(only_b)]};
      }
    }
  }
  return std::nullopt;
}

bool is_union_of_cliques(const GkGraph& g) { return !find_induced_p3(g).has_value(); }

std::optional<std::array<u64, 3>> find_triangle(const GkGraph& g) {
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (VertexMask m = g.row(a) & ~((bit(a) << 1) - 1); m != 0; m &= m - 1) {
      const std::size_t b = lowest(m);
      const VertexMask common = g.row(a) & g.row(b) & ~((bit(b) << 1) - 1);
      if (common != 0) {
        const auto& l = g.labels();
        return std::array<u64, 3>{l[a], l[b], l[lowest(common)]};
      }
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const GkGraph& g) { return !find_triangle(g).has_value(); }

std::optional<std::vector<std::size_t>> complete_multipartite_parts(const GkGraph& g) {
  const GkGraph co = complement(g);
  if (!is_union_of_cliques(co)) return std::nullopt;
  std::vector<std::size_t> parts;
  for (VertexMask m : component_masks(co)) parts.push_back(popcount(m));
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::size_t clique_number(const GkGraph& g) { return popcount(CliqueSearch(g).run(g.all(), 0)); }

std::size_t independence_number(const GkGraph& g) { return clique_number(complement(g)); }

std::vector<u64> max_coclique_at(const GkGraph& g, u64 label) {
  const std::size_t v = g.index_of(label);
  const GkGraph co = complement(g);
  return g.labels_of(CliqueSearch(co).run(co.row(v), bit(v)));
}

std::size_t independence_number_at(const GkGraph& g, u64 label) { return max_coclique_at(g, label).size(); }

std::optional<std::vector<unsigned>> find_k_coloring(const GkGraph& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("is_k_colorable: k must be positive");
  Colorer c(g, k);
  if (!c.run()) return std::nullopt;
  return c.colors();
}

bool is_k_colorable(const GkGraph& g, unsigned k) { return find_k_coloring(g, k).has_value(); }

std::optional<SrgParameters> srg_parameters(const GkGraph& g) {
  const std::size_t v = g.order();
  if (v < 3 || component_masks(g).size() != 1) return std::nullopt;
  const std::size_t k = popcount(g.row(0));
  if (k < 1 || k + 2 > v) return std::nullopt;
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (std::size_t i = 0; i < v; ++i) {
    if (popcount(g.row(i)) != k) return std::nullopt;
    for (std::size_t j = i + 1; j < v; ++j) {
      const std::size_t common = popcount(g.row(i) & g.row(j));
      auto& slot = (g.row(i) & bit(j)) ? lambda : mu;
      if (!slot) slot = common;
      if (*slot != common) return std::nullopt;
    }
  }
  if (!mu || *mu < 1) return std::nullopt;
  return SrgParameters{v, k, lambda.value_or(0), *mu};
}

SrgParameters complement_srg_parameters(const SrgParameters& p) {
  if (p.k < 1 || p.k + 2 > p.v || p.mu < 1 || !p.satisfies_identity()) {
    throw std::invalid_argument("complement_srg_parameters: not a valid SRG parameter set");
  }
  const i64 v = static_cast<i64>(p.v);
  const i64 k = static_cast<i64>(p.k);
  const i64 lambda = static_cast<i64>(p.lambda);
  const i64 mu = static_cast<i64>(p.mu);
  const i64 k2 = v - k - 1;
  const i64 lambda2 = v - 2 - 2 * k + mu;
  const i64 mu2 = v - 2 * k + lambda;
  if (lambda2 < 0 || mu2 < 0) {
    throw std::invalid_argument("complement_srg_parameters: complement parameters are negative");
  }
  if (mu2 == 0) {
    throw degenerate_complement_error("complement_srg_parameters: complement is a union of cliques");
  }
  return SrgParameters{p.v, static_cast<u64>(k2), static_cast<u64>(lambda2), static_cast<u64>(mu2)};
}

}  // namespace gk
