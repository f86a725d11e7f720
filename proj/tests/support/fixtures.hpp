#pragma once

#include <random>
#include <vector>

#include "gk/graph.hpp"

namespace gk::fixtures {

inline std::vector<u64> iota_labels(std::size_t n, u64 first = 1) {
  std::vector<u64> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(first + i);
  return out;
}

inline GkGraph empty(std::size_t n) { return GkGraph::build(iota_labels(n), {}); }

inline GkGraph complete_on(const std::vector<u64>& labels) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) e.emplace_back(labels[i], labels[j]);
  }
  return GkGraph::build(labels, e);
}

inline GkGraph complete(std::size_t n) { return complete_on(iota_labels(n)); }

inline GkGraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return GkGraph::build(iota_labels(n), e);
}

inline GkGraph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return GkGraph::build(iota_labels(n), e);
}

// Parts take consecutive labels starting at 1.
inline GkGraph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < part_of.size(); ++i) {
    for (std::size_t j = i + 1; j < part_of.size(); ++j) {
      if (part_of[i] != part_of[j]) e.emplace_back(i + 1, j + 1);
    }
  }
  return GkGraph::build(iota_labels(part_of.size()), e);
}

inline GkGraph octahedron() { return complete_multipartite({2, 2, 2}); }

// Kneser graph K(5,2) on labels 1..10.
inline GkGraph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) e.emplace_back(i + 1, j + 1);
    }
  }
  return GkGraph::build(iota_labels(10), e);
}

// Paley graph on Z_p, p = 1 (mod 4); labels 1..p stand for residues 0..p-1.
inline GkGraph paley(unsigned p) {
  std::vector<bool> square(p, false);
  for (unsigned x = 1; x < p; ++x) square[x * x % p] = true;
  std::vector<Edge> e;
  for (unsigned a = 0; a < p; ++a) {
    for (unsigned b = a + 1; b < p; ++b) {
      if (square[(b - a) % p]) e.emplace_back(a + 1, b + 1);
    }
  }
  return GkGraph::build(iota_labels(p), e);
}

// Graph on labels 1..n with edge bits drawn from mask over pairs (i < j)
// in lexicographic order.
inline GkGraph from_edge_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t bit = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j, ++bit) {
      if (mask >> bit & 1) e.emplace_back(i, j);
    }
  }
  return GkGraph::build(iota_labels(n), e);
}

inline GkGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return GkGraph::build(iota_labels(n), e);
}

}  // namespace gk::fixtures
