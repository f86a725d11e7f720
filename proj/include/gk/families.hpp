#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gk/spectrum.hpp"

namespace gk {

class family_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr u64 kMaxDegree = 200;
inline constexpr u64 kMaxFieldOrder = 1'000'000;

enum class FamilyKind { alt, sym, psl2, pgl2, external };

std::string to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(const std::string& text);

// (p, m) with q = p^m, when q is a prime power.
std::optional<std::pair<u64, unsigned>> as_prime_power(u64 q);

struct GroupDescriptor {
  FamilyKind kind = FamilyKind::alt;
  // n for alt/sym, q for psl2/pgl2; unused for external.
  u64 parameter = 0;
  std::filesystem::path path;

  static GroupDescriptor alt(u64 n) { return {FamilyKind::alt, n, {}}; }
  static GroupDescriptor sym(u64 n) { return {FamilyKind::sym, n, {}}; }
  static GroupDescriptor psl2(u64 q) { return {FamilyKind::psl2, q, {}}; }
  static GroupDescriptor pgl2(u64 q) { return {FamilyKind::pgl2, q, {}}; }
  static GroupDescriptor external(std::filesystem::path p) { return {FamilyKind::external, 0, std::move(p)}; }

  // Throws family_error / range_error for parameters outside the family.
  void validate() const;
  // "Alt(10)", "PGL2(243)", or the file path for external descriptors.
  std::string name() const;
};

Spectrum sym_spectrum(u64 n);
Spectrum alt_spectrum(u64 n);
Spectrum psl2_spectrum(u64 q);
Spectrum pgl2_spectrum(u64 q);

// Brute-force element orders of PSL(2, q) for prime powers 4 <= q <= 13,
// by enumerating determinant-one matrices over GF(q) modulo +-I.
Spectrum enumerate_psl2_orders(u64 q);

Spectrum load_spectrum_file(const std::filesystem::path& path);

// The spectrum generated for any descriptor (external descriptors load
// their file).
Spectrum spectrum_of(const GroupDescriptor& d);

// GK_DATA_DIR when set, otherwise the bundled spectra directory.
std::filesystem::path data_directory();
// Sorted *.json files directly inside dir.
std::vector<std::filesystem::path> spectrum_files(const std::filesystem::path& dir);

}  // namespace gk
