#ifndef WAM_CHARACTER_TABLE_HPP
#define WAM_CHARACTER_TABLE_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "wam/modular.hpp"
#include "wam/perm_group.hpp"
#include "wam/subgroups.hpp"

namespace wam {

using NVector = Eigen::VectorXi;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Irreducible characters of G with values in F_p, where p = 1 mod exp(G)
/// and p > 2|G|. A complex root of unity exp(2 pi i k / exp(G)) is encoded as
/// omega^k, so complex conjugation becomes inversion of the class argument.
///
/// Rows are sorted by degree, then lexicographically by residue tuple; the
/// trivial character is row 0. Columns follow the class order of the
/// GroupTable (identity class first).
struct CharacterTable
{
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 1;
  std::int64_t prime = 2;
  std::int64_t omega = 1;
  std::uint64_t seed = kDefaultSeed;

  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> element_orders;
  std::vector<std::size_t> inverse_class;

  std::vector<unsigned> degrees;
  ModMatrix values; // r x r

  std::size_t size() const { return degrees.size(); }
  PrimeField field() const { return PrimeField(prime); }
};

/// Dixon-Schneider: simultaneous eigenvectors of the class-sum matrices over
/// F_p. A seeded random combination of class matrices does most of the
/// splitting; the individual class matrices finish any remaining
/// eigenspaces. Throws InvariantError if the self-checks fail.
CharacterTable character_table(GroupTable const &g,
                               std::uint64_t seed = kDefaultSeed);

/// Class-multiplication matrix for class j: entry (k, l) counts x in C_j
/// with x^-1 z_l in C_k, for a fixed z_l in C_l.
ModMatrix class_matrix(GroupTable const &g, std::size_t j,
                       PrimeField const &f);

struct OrthogonalityReport
{
  bool degree_sum = true; // sum of squared degrees equals |G|
  bool rows = true;
  bool columns = true;
  bool ok() const { return degree_sum && rows && columns; }
};

OrthogonalityReport check_orthogonality(CharacterTable const &t);

struct ClassFusion
{
  std::vector<ElementClass> subgroup_classes;
  /// subgroup class index -> class index in G
  std::vector<std::size_t> map;
};

ClassFusion class_fusion(GroupTable const &g, Subgroup const &h);

/// Multiplicities <lambda^G, chi_j> for all j via Frobenius reciprocity,
/// lifted from F_p. Throws InvariantError when a residue does not lift to a
/// small nonnegative integer or the degree check fails.
NVector induce_vector(LinearCharacter const &lambda, Subgroup const &h,
                      ClassFusion const &fusion, CharacterTable const &t);

} // namespace wam

#endif // WAM_CHARACTER_TABLE_HPP
