#ifndef WAM_SUBGROUPS_HPP
#define WAM_SUBGROUPS_HPP

#include <cstddef>
#include <vector>

#include "wam/bitset.hpp"
#include "wam/perm_group.hpp"

namespace wam {

/// A subgroup of an enumerated group, identified by its membership bitset
/// over the parent's element numbering.
struct Subgroup
{
  Bitset members;
  std::vector<ElementId> elements; // ascending
  std::vector<ElementId> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId x) const { return members.test(x); }
};

struct SubgroupClass
{
  Subgroup representative;
  /// [G : N_G(H)]
  std::size_t class_length;
};

/// Subgroup generated by `gens` inside `g`.
Subgroup generate_subgroup(GroupTable const &g,
                           std::vector<ElementId> const &gens);

Subgroup whole_group(GroupTable const &g);

PermGroup to_perm_group(GroupTable const &g, Subgroup const &h);

/// H^c = c^-1 H c
Bitset conjugate_bitset(GroupTable const &g, Bitset const &h, ElementId c);

/// One representative per conjugacy class of subgroups, found by closing
/// <H, x> over class representatives H and right-coset representatives x,
/// starting from the trivial subgroup. The representative of each class is
/// the conjugate with the smallest bitset. Sorted by (order, class length,
/// bitset).
std::vector<SubgroupClass> subgroup_conjugacy_classes(GroupTable const &g);

/// Conjugacy class of elements inside a subgroup.
struct ElementClass
{
  ElementId representative; // smallest element id of the class
  std::size_t size;
};

/// H-conjugacy classes of H, sorted by representative; the identity class is
/// first.
std::vector<ElementClass> internal_classes(GroupTable const &g,
                                           Subgroup const &h);

/// [H,H] as a subgroup of g.
Subgroup derived_subgroup(GroupTable const &g, Subgroup const &h);

/// A linear character of a subgroup H, with value exp(2 pi i k / modulus) on
/// the H-class at the same position of `internal_classes(g, H)`. The modulus
/// is the exponent of H/[H,H].
struct LinearCharacter
{
  unsigned modulus;
  std::vector<unsigned> exponents;

  bool is_trivial() const;
};

/// All |H/[H,H]| linear characters of H; the trivial character is first.
std::vector<LinearCharacter> linear_characters(GroupTable const &g,
                                               Subgroup const &h);

/// Variant that reuses a precomputed `internal_classes(g, h)`.
std::vector<LinearCharacter>
linear_characters(GroupTable const &g, Subgroup const &h,
                  std::vector<ElementClass> const &classes);

} // namespace wam

#endif // WAM_SUBGROUPS_HPP
