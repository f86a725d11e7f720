#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace gk {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Upper bound for every integer input in this library.
inline constexpr u64 kMaxValue = u64{1} << 63;

class range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Raised by mult_order when r divides q.
class undefined_order_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending by prime; empty for 1.
using Factorization = std::vector<PrimePower>;

bool is_prime(u64 n);

Factorization factorize(u64 n);

// pi(n): the set of prime divisors of n.
std::set<u64> prime_divisors(u64 n);

// Multiplicative order e(r, q). For r = 2 the convention e(2, q) = 1 when
// q = 1 (mod 4) and 2 otherwise is applied; even q is rejected for r = 2.
u64 mult_order(u64 r, i64 q);

u64 nu(u64 m);
u64 eta(u64 m);

// R_i(q): primes r | q^i - 1 with e(r, q) = i. Requires q <= 2^31 and
// q^i - 1 <= 2^63.
std::set<u64> primitive_prime_divisors(u64 q, unsigned i);

bool zsigmondy_exists(u64 q, unsigned m);

// q^i - 1 when it fits under the library cap, used to pre-filter sweeps.
bool power_minus_one_representable(u64 q, unsigned i);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

}  // namespace gk
