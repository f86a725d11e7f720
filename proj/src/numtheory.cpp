#include "gk/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace gk {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<u64> out;
    for (u64 i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho. n is odd, composite and not a prime power
// of a small prime. Returns a non-trivial divisor.
u64 pollard_brent(u64 n, std::mt19937_64& rng) {
  for (;;) {
    u64 y = rng() % n;
    u64 c = rng() % (n - 1) + 1;
    const u64 batch = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(u64 n, std::map<u64, unsigned>& acc, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  u64 d = pollard_brent(n, rng);
  split_large(d, acc, rng);
  split_large(n / d, acc, rng);
}

}  // namespace

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  // This witness set is deterministic for every n < 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0 || n > kMaxValue) {
    throw range_error("factorize: input " + std::to_string(n) + " outside [1, 2^63]");
  }
  Factorization out;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n == 1) return out;
  // Every remaining factor exceeds the trial limit, so anything below its
  // square is prime.
  if (n < kTrialLimit * kTrialLimit || is_prime(n)) {
    out.push_back({n, 1});
    return out;
  }
  std::map<u64, unsigned> large;
  std::mt19937_64 rng(0x6b5f1d2c9e3a7780ULL);
  split_large(n, large, rng);
  for (auto [p, e] : large) out.push_back({p, e});
  return out;
}

std::set<u64> prime_divisors(u64 n) {
  std::set<u64> out;
  for (const auto& pp : factorize(n)) out.insert(pp.prime);
  return out;
}

u64 mult_order(u64 r, i64 q) {
  if (!is_prime(r)) throw std::invalid_argument("mult_order: " + std::to_string(r) + " is not prime");
  if (q >= -1 && q <= 1) throw std::invalid_argument("mult_order: |q| must exceed 1");
  u64 residue;
  if (q >= 0) {
    residue = static_cast<u64>(q) % r;
  } else {
    const u64 magnitude = static_cast<u64>(-(q + 1)) + 1;
    residue = (r - magnitude % r) % r;
  }
  if (residue == 0) {
    throw undefined_order_error("mult_order: " + std::to_string(r) + " divides " + std::to_string(q));
  }
  if (r == 2) return ((q % 4) + 4) % 4 == 1 ? 1 : 2;
  u64 order = r - 1;
  for (const auto& pp : factorize(r - 1)) {
    while (order % pp.prime == 0 && pow_mod(residue, order / pp.prime, r) == 1) order /= pp.prime;
  }
  return order;
}

u64 nu(u64 m) {
  if (m == 0) throw std::invalid_argument("nu: m must be positive");
  if (m % 4 == 0) return m;
  if (m % 2 == 0) return m / 2;
  return 2 * m;
}

u64 eta(u64 m) {
  if (m == 0) throw std::invalid_argument("eta: m must be positive");
  return m % 2 == 1 ? m : m / 2;
}

bool power_minus_one_representable(u64 q, unsigned i) {
  if (q < 2 || i == 0) return false;
  unsigned __int128 v = 1;
  for (unsigned k = 0; k < i; ++k) {
    v *= q;
    if (v - 1 > kMaxValue) return false;
  }
  return true;
}

std::set<u64> primitive_prime_divisors(u64 q, unsigned i) {
  if (q < 2 || q > (u64{1} << 31)) throw range_error("primitive_prime_divisors: q must lie in [2, 2^31]");
  if (i == 0) throw std::invalid_argument("primitive_prime_divisors: i must be positive");
  if (!power_minus_one_representable(q, i)) {
    throw range_error("primitive_prime_divisors: " + std::to_string(q) + "^" + std::to_string(i) +
                      " - 1 exceeds 2^63");
  }
  u64 value = 1;
  for (unsigned k = 0; k < i; ++k) value *= q;
  std::set<u64> out;
  for (u64 r : prime_divisors(value - 1)) {
    if (r == 2 && q % 2 == 0) continue;
    if (mult_order(r, static_cast<i64>(q)) == i) out.insert(r);
  }
  return out;
}

bool zsigmondy_exists(u64 q, unsigned m) { return !primitive_prime_divisors(q, m).empty(); }

}  // namespace gk
