#include "gk/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

#include "gk/json_io.hpp"

#ifndef GK_BUNDLED_DATA_DIR
#define GK_BUNDLED_DATA_DIR "data/spectra"
#endif

namespace gk {

namespace {

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

// Orders of permutations on n points. An order m occurs in Sym(n) iff the
// sum of the prime powers exactly dividing m is at most n; in Alt(n) an even
// m additionally needs room for a second even-length cycle (cost + 2).
// A feasible m is divisibility-maximal iff no m*p is feasible.
class PermutationOrders {
 public:
  PermutationOrders(u64 n, bool even_only) : n_(n), even_only_(even_only), primes_(primes_up_to(n)) {
    exponents_.assign(primes_.size(), 0);
    powers_.assign(primes_.size(), 1);
  }

  std::vector<u64> maximal() {
    walk(0, 0, 1);
    return found_;
  }

 private:
  u64 surcharge(std::size_t i) const { return even_only_ && primes_[i] == 2 ? 2 : 0; }

  void walk(std::size_t i, u64 cost, u64 order) {
    if (i == primes_.size() || primes_[i] > n_ - cost) {
      leaf(cost, order);
      return;
    }
    walk(i + 1, cost, order);
    const u64 p = primes_[i];
    u64 pp = p;
    unsigned e = 1;
    while (cost + pp + surcharge(i) <= n_) {
      exponents_[i] = e;
      powers_[i] = pp;
      walk(i + 1, cost + pp + surcharge(i), order * pp);
      pp *= p;
      ++e;
    }
    exponents_[i] = 0;
    powers_[i] = 1;
  }

  void leaf(u64 cost, u64 order) {
    const u64 slack = n_ - cost;
    for (std::size_t j = 0; j < primes_.size(); ++j) {
      const u64 p = primes_[j];
      const u64 step = exponents_[j] == 0 ? p + surcharge(j) : powers_[j] * (p - 1);
      if (step <= slack) return;
    }
    found_.push_back(order);
  }

  u64 n_;
  bool even_only_;
  std::vector<u64> primes_;
  std::vector<unsigned> exponents_;
  std::vector<u64> powers_;
  std::vector<u64> found_;
};

// GF(q) for the prime powers the enumeration oracle needs. Elements are
// integers 0..q-1 read as base-p coefficient vectors.
class SmallField {
 public:
  explicit SmallField(u64 q) : q_(static_cast<unsigned>(q)) {
    const auto pp = as_prime_power(q);
    p_ = static_cast<unsigned>(pp->first);
    degree_ = pp->second;
    // Monic irreducible modulus, low coefficients first (leading 1 implied).
    std::vector<unsigned> modulus;
    switch (q) {
      case 4: modulus = {1, 1}; break;      // x^2 + x + 1
      case 8: modulus = {1, 1, 0}; break;   // x^3 + x + 1
      case 9: modulus = {1, 0}; break;      // x^2 + 1
      default: modulus = {0}; break;        // prime field: x
    }
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned b = 0; b < q_; ++b) {
        add_[a * q_ + b] = encode(add_poly(decode(a), decode(b)));
        mul_[a * q_ + b] = degree_ == 1 ? (a * b) % q_ : encode(mul_poly(decode(a), decode(b), modulus));
      }
    }
  }

  unsigned size() const { return q_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const {
    for (unsigned b = 0; b < q_; ++b) {
      if (add(a, b) == 0) return b;
    }
    return 0;
  }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

 private:
  std::vector<unsigned> decode(unsigned a) const {
    std::vector<unsigned> c(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  unsigned encode(const std::vector<unsigned>& c) const {
    unsigned a = 0;
    for (unsigned i = degree_; i-- > 0;) a = a * p_ + c[i];
    return a;
  }

  std::vector<unsigned> add_poly(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> c(degree_);
    for (unsigned i = 0; i < degree_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
  }

  std::vector<unsigned> mul_poly(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                 const std::vector<unsigned>& modulus) const {
    std::vector<unsigned> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
      for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    // x^degree = -(modulus low part)
    for (unsigned top = static_cast<unsigned>(prod.size()); top-- > degree_;) {
      const unsigned c = prod[top];
      if (c == 0) continue;
      prod[top] = 0;
      for (unsigned i = 0; i < degree_; ++i) {
        const unsigned shift = top - degree_ + i;
        prod[shift] = (prod[shift] + (p_ - c) * modulus[i]) % p_;
      }
    }
    prod.resize(degree_);
    return prod;
  }

  unsigned q_;
  unsigned p_ = 0;
  unsigned degree_ = 1;
  std::vector<unsigned> add_;
  std::vector<unsigned> mul_;
};

using Matrix2 = std::array<unsigned, 4>;

Matrix2 multiply(const SmallField& f, const Matrix2& x, const Matrix2& y) {
  return {f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
          f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::alt: return "alt";
    case FamilyKind::sym: return "sym";
    case FamilyKind::psl2: return "psl2";
    case FamilyKind::pgl2: return "pgl2";
    case FamilyKind::external: return "external";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(const std::string& text) {
  for (auto k : {FamilyKind::alt, FamilyKind::sym, FamilyKind::psl2, FamilyKind::pgl2, FamilyKind::external}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::optional<std::pair<u64, unsigned>> as_prime_power(u64 q) {
  if (q < 2 || q > kMaxValue) return std::nullopt;
  const Factorization f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].prime, f[0].exponent);
}

void GroupDescriptor::validate() const {
  switch (kind) {
    case FamilyKind::alt:
    case FamilyKind::sym:
      if (parameter < 2 || parameter > kMaxDegree) {
        throw range_error("degree n = " + std::to_string(parameter) + " outside [2, 200]");
      }
      return;
    case FamilyKind::psl2:
    case FamilyKind::pgl2:
      if (parameter < 3 || parameter > kMaxFieldOrder) {
        throw range_error("field order q = " + std::to_string(parameter) + " outside [3, 1000000]");
      }
      if (!as_prime_power(parameter)) throw family_error(std::to_string(parameter) + " is not a prime power");
      return;
    case FamilyKind::external:
      if (path.empty()) throw family_error("external descriptor needs a spectrum file path");
      return;
  }
}

std::string GroupDescriptor::name() const {
  const std::string p = std::to_string(parameter);
  switch (kind) {
    case FamilyKind::alt: return "Alt(" + p + ")";
    case FamilyKind::sym: return "Sym(" + p + ")";
    case FamilyKind::psl2: return "PSL2(" + p + ")";
    case FamilyKind::pgl2: return "PGL2(" + p + ")";
    case FamilyKind::external: return path.string();
  }
  return p;
}

Spectrum sym_spectrum(u64 n) {
  const auto d = GroupDescriptor::sym(n);
  d.validate();
  return Spectrum::from_antichain(d.name(), PermutationOrders(n, false).maximal());
}

Spectrum alt_spectrum(u64 n) {
  const auto d = GroupDescriptor::alt(n);
  d.validate();
  return Spectrum::from_antichain(d.name(), PermutationOrders(n, true).maximal());
}

Spectrum psl2_spectrum(u64 q) {
  const auto d = GroupDescriptor::psl2(q);
  d.validate();
  if (q % 2 == 0) return Spectrum::normalize(d.name(), {2, q - 1, q + 1});
  const u64 p = as_prime_power(q)->first;
  return Spectrum::normalize(d.name(), {p, (q - 1) / 2, (q + 1) / 2});
}

Spectrum pgl2_spectrum(u64 q) {
  const auto d = GroupDescriptor::pgl2(q);
  d.validate();
  const u64 p = as_prime_power(q)->first;
  return Spectrum::normalize(d.name(), {p, q - 1, q + 1});
}

Spectrum enumerate_psl2_orders(u64 q) {
  if (q < 4 || q > 13 || !as_prime_power(q)) {
    throw range_error("enumerate_psl2_orders: q = " + std::to_string(q) + " is not a prime power in [4, 13]");
  }
  const SmallField f(q);
  const unsigned n = f.size();
  const unsigned minus_one = f.neg(1);
  const Matrix2 identity{1, 0, 0, 1};
  const Matrix2 minus_identity{minus_one, 0, 0, minus_one};
  std::set<u64> orders;
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      for (unsigned c = 0; c < n; ++c) {
        for (unsigned d = 0; d < n; ++d) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) != 1) continue;
          const Matrix2 m{a, b, c, d};
          Matrix2 power = m;
          u64 k = 1;
          while (power != identity && power != minus_identity) {
            power = multiply(f, power, m);
            ++k;
          }
          orders.insert(k);
        }
      }
    }
  }
  return Spectrum::normalize(GroupDescriptor::psl2(q).name(), {orders.begin(), orders.end()});
}

Spectrum load_spectrum_file(const std::filesystem::path& path) {
  return spectrum_from_json(read_json_file(path.string()));
}

Spectrum spectrum_of(const GroupDescriptor& d) {
  d.validate();
  switch (d.kind) {
    case FamilyKind::alt: return alt_spectrum(d.parameter);
    case FamilyKind::sym: return sym_spectrum(d.parameter);
    case FamilyKind::psl2: return psl2_spectrum(d.parameter);
    case FamilyKind::pgl2: return pgl2_spectrum(d.parameter);
    case FamilyKind::external: return load_spectrum_file(d.path);
  }
  throw family_error("unknown family");
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("GK_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return GK_BUNDLED_DATA_DIR;
}

std::vector<std::filesystem::path> spectrum_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gk
