#ifndef WAM_MONOMIAL_DATA_HPP
#define WAM_MONOMIAL_DATA_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wam/monoid.hpp"

namespace wam {

inline constexpr char kEngineVersion[] = "wam-1.0.0";
inline constexpr int kSchemaVersion = 1;

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

/// Portable record of one pipeline run: enough to rerun the classifiers and
/// the order-vector checks without the group.
struct MonomialDataFile
{
  int schema_version = kSchemaVersion;
  std::string descriptor;
  std::size_t r = 0;
  std::uint64_t group_order = 0;
  std::vector<unsigned> degrees;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> element_orders;
  std::string digest;
  std::vector<NVector> vectors;
  std::vector<NVector> basis;
  std::string engine_version = kEngineVersion;
  std::uint64_t seed = 0;

  HilbertBasis hilbert_basis() const { return HilbertBasis{r, basis}; }
};

/// Digest over the class data, degrees, vectors and basis, in a fixed text
/// layout. Descriptor, engine version and seed are not covered.
std::string compute_digest(MonomialDataFile const &f);

/// Stable JSON rendering (fixed key order, two-space indent, trailing
/// newline). `digest` is written as stored.
std::string to_json_text(MonomialDataFile const &f);

/// Parses and validates: schema version, dimensions, basis contained in the
/// vector set, and the digest. Throws InputError on any failure.
MonomialDataFile parse_monomial_data(std::string const &text);

MonomialDataFile read_monomial_data(std::filesystem::path const &path);

/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(std::filesystem::path const &path,
                       std::string const &contents);

std::string read_file(std::filesystem::path const &path);

} // namespace wam

#endif // WAM_MONOMIAL_DATA_HPP
