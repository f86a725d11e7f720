#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gk/numtheory.hpp"

namespace gk {

class graph_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxVertices = 64;

// Bit i refers to the i-th smallest label of the owning graph.
using VertexMask = std::uint64_t;

using Edge = std::pair<u64, u64>;

// Simple undirected graph on at most 64 positive-integer labels. Labels are
// kept in ascending order; adjacency rows are bitsets over label indices.
class GkGraph {
 public:
  GkGraph() = default;

  // Throws graph_error on duplicate labels, zero labels, loops, unknown
  // endpoints, or more than 64 vertices. Repeated edges collapse.
  static GkGraph build(std::vector<u64> labels, const std::vector<Edge>& edges);

  std::size_t order() const { return labels_.size(); }
  const std::vector<u64>& labels() const { return labels_; }
  VertexMask all() const { return order() == 64 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1; }
  VertexMask row(std::size_t i) const { return adj_[i]; }

  bool has_vertex(u64 label) const;
  // Throws graph_error for unknown labels.
  std::size_t index_of(u64 label) const;
  bool adjacent(u64 a, u64 b) const;
  std::size_t degree(u64 label) const;

  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  std::vector<u64> labels_of(VertexMask mask) const;
  VertexMask mask_of(const std::vector<u64>& labels) const;

  friend bool operator==(const GkGraph&, const GkGraph&) = default;

 private:
  std::vector<u64> labels_;
  std::array<VertexMask, kMaxVertices> adj_{};

  friend GkGraph complement(const GkGraph& g);
  friend GkGraph induced_subgraph(const GkGraph& g, const std::vector<u64>& subset);
};

struct SrgParameters {
  u64 v = 0;
  u64 k = 0;
  u64 lambda = 0;
  u64 mu = 0;

  bool satisfies_identity() const;

  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

// The complement of an SRG that is itself a union of cliques.
class degenerate_complement_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

GkGraph complement(const GkGraph& g);
GkGraph induced_subgraph(const GkGraph& g, const std::vector<u64>& subset);

// Ordered by smallest label; each component sorted ascending.
std::vector<std::vector<u64>> connected_components(const GkGraph& g);
std::vector<VertexMask> component_masks(const GkGraph& g);

bool is_union_of_cliques(const GkGraph& g);

// An induced path a-b-c (a, c non-adjacent) when one exists.
std::optional<std::array<u64, 3>> find_induced_p3(const GkGraph& g);

bool is_triangle_free(const GkGraph& g);
std::optional<std::array<u64, 3>> find_triangle(const GkGraph& g);

// Part sizes (ascending) when g is complete multipartite.
std::optional<std::vector<std::size_t>> complete_multipartite_parts(const GkGraph& g);

std::size_t clique_number(const GkGraph& g);
std::size_t independence_number(const GkGraph& g);
std::size_t independence_number_at(const GkGraph& g, u64 label);
// A maximum coclique containing the given vertex, as sorted labels.
std::vector<u64> max_coclique_at(const GkGraph& g, u64 label);

bool is_k_colorable(const GkGraph& g, unsigned k);
// Colour per vertex index when a proper k-colouring exists.
std::optional<std::vector<unsigned>> find_k_coloring(const GkGraph& g, unsigned k);

std::optional<SrgParameters> srg_parameters(const GkGraph& g);

// Throws degenerate_complement_error when the complement is a union of
// cliques, std::invalid_argument when p is not a valid parameter set.
SrgParameters complement_srg_parameters(const SrgParameters& p);

}  // namespace gk
