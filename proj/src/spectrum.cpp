#include "gk/spectrum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gk {

namespace {

void check_entries(const std::vector<u64>& orders) {
  if (orders.empty()) throw spectrum_error("spectrum must contain at least one order");
  for (u64 o : orders) {
    if (o == 0) throw spectrum_error("element orders must be positive");
    if (o > kMaxValue) throw spectrum_error("element order " + std::to_string(o) + " exceeds 2^63");
  }
}

}  // namespace

Spectrum Spectrum::normalize(std::string name, std::vector<u64> orders) {
  check_entries(orders);
  std::sort(orders.begin(), orders.end(), std::greater<>());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  std::vector<u64> kept;
  for (u64 o : orders) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [o](u64 k) { return k % o == 0; });
    if (!dominated) kept.push_back(o);
  }
  return from_antichain(std::move(name), std::move(kept));
}

Spectrum Spectrum::from_antichain(std::string name, std::vector<u64> orders) {
  check_entries(orders);
  std::sort(orders.begin(), orders.end());
  Spectrum s;
  s.name_ = std::move(name);
  s.orders_ = std::move(orders);
  return s;
}

bool Spectrum::contains(u64 n) const {
  if (n == 0) return false;
  return std::any_of(orders_.begin(), orders_.end(), [n](u64 o) { return o % n == 0; });
}

GkGraph gk_graph_of_spectrum(const Spectrum& s) {
  std::set<u64> primes;
  std::set<Edge> edges;
  for (u64 o : s.maximal_orders()) {
    std::vector<u64> local;
    for (const auto& pp : factorize(o)) local.push_back(pp.prime);
    primes.insert(local.begin(), local.end());
    for (std::size_t i = 0; i < local.size(); ++i) {
      for (std::size_t j = i + 1; j < local.size(); ++j) edges.emplace(local[i], local[j]);
    }
  }
  return GkGraph::build({primes.begin(), primes.end()}, {edges.begin(), edges.end()});
}

}  // namespace gk
