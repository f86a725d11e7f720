#pragma once

#include <string>
#include <vector>

#include "gk/graph.hpp"
#include "gk/numtheory.hpp"

namespace gk {

class spectrum_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The element-order set of a group, stored as its divisibility-maximal
// elements. The full set is the divisor closure of maximal_orders().
class Spectrum {
 public:
  // Keeps the divisibility-maximal elements of orders, sorted ascending.
  // Throws spectrum_error on an empty list or out-of-range entries.
  static Spectrum normalize(std::string name, std::vector<u64> orders);

  // For generators that already produce an antichain. Sorts but performs no
  // maximality filtering.
  static Spectrum from_antichain(std::string name, std::vector<u64> orders);

  const std::string& name() const { return name_; }
  const std::vector<u64>& maximal_orders() const { return orders_; }

  bool contains(u64 n) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::string name_;
  std::vector<u64> orders_;
};

inline Spectrum normalize_spectrum(std::string name, std::vector<u64> orders) {
  return Spectrum::normalize(std::move(name), std::move(orders));
}

inline bool spectrum_contains(const Spectrum& s, u64 n) { return s.contains(n); }

// Vertices are the primes dividing some maximal order; r-s is an edge when
// some maximal order is divisible by r*s.
GkGraph gk_graph_of_spectrum(const Spectrum& s);

}  // namespace gk
