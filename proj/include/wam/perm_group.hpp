#ifndef WAM_PERM_GROUP_HPP
#define WAM_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wam/permutation.hpp"

namespace wam {

inline constexpr std::size_t kDefaultSizeCap = 10000;

using ElementId = std::uint32_t;

/// Stabilizer chain built by the deterministic Schreier-Sims algorithm. Used
/// for group order and membership; element enumeration is done separately.
class StabilizerChain
{
public:
  StabilizerChain(std::size_t degree, std::vector<Permutation> const &gens);

  std::uint64_t order() const;
  bool contains(Permutation const &p) const;
  std::vector<Point> base() const;

private:
  struct Level
  {
    Point base_point;
    std::vector<Permutation> generators;
    // transversal[x] maps base_point to x, when x is in the orbit
    std::vector<std::optional<Permutation>> transversal;
    std::vector<Point> orbit;
  };

  void rebuild_orbit(Level &level) const;
  // Returns the residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation p,
                                            std::size_t from) const;
  void add_generator(Permutation const &p, std::size_t from, std::size_t to);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A finite group given by permutation generators of a common degree.
class PermGroup
{
public:
  explicit PermGroup(std::size_t degree,
                     std::vector<Permutation> generators = {});

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  std::uint64_t order() const { return chain_->order(); }
  bool contains(Permutation const &p) const;
  bool is_subgroup_of(PermGroup const &other) const;
  bool is_abelian() const;

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<StabilizerChain const> chain_;
};

/// |G|, computed through the stabilizer chain.
inline std::uint64_t group_order(PermGroup const &g) { return g.order(); }

struct ConjugacyClass
{
  ElementId representative;
  std::size_t size;
  std::size_t element_order;
  std::vector<ElementId> members;
};

/// Explicit element enumeration of a PermGroup with multiplication,
/// inversion and conjugacy classes. Element 0 is the identity; elements are
/// numbered in breadth-first order from the identity over the generators,
/// so the numbering is a function of the generator list alone.
///
/// Classes are sorted by (element order, class size, lexicographically
/// minimal member); the minimal member is the class representative.
class GroupTable
{
public:
  explicit GroupTable(PermGroup group, std::size_t size_cap = kDefaultSizeCap);

  PermGroup const &group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  Permutation const &element(ElementId i) const { return elements_[i]; }
  std::optional<ElementId> index_of(Permutation const &p) const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const
  { return mul(mul(inverse_[g], x), g); }

  std::size_t element_order(ElementId i) const { return orders_[i]; }
  std::size_t exponent() const { return exponent_; }
  std::vector<ElementId> const &generator_ids() const { return gen_ids_; }

  std::vector<ConjugacyClass> const &classes() const { return classes_; }
  std::size_t class_of(ElementId i) const { return class_of_[i]; }

  bool is_abelian() const;

private:
  void compute_classes();

  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> table_; // row-major Cayley table, empty if too large
  std::vector<ElementId> inverse_;
  std::vector<std::size_t> orders_;
  std::size_t exponent_ = 1;
  std::vector<ElementId> gen_ids_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

std::vector<ConjugacyClass> const &conjugacy_classes(GroupTable const &g);

/// [G,G] as a permutation group on the same points.
PermGroup derived_subgroup(PermGroup const &g);

/// Elements commuting with every generator.
PermGroup center(GroupTable const &g);

/// Right-coset action of G on G/N. Throws InputError unless N is a normal
/// subgroup of G.
PermGroup quotient_group(PermGroup const &g, PermGroup const &n,
                         std::size_t size_cap = kDefaultSizeCap);

/// G x H acting on the disjoint union of both point sets.
PermGroup direct_product(PermGroup const &g, PermGroup const &h,
                         std::size_t size_cap = kDefaultSizeCap);

/// Closure of `seed` under multiplication and under conjugation by
/// `conjugators`, as an element list in discovery order.
std::vector<ElementId> normal_closure(GroupTable const &g,
                                      std::vector<ElementId> const &seed,
                                      std::vector<ElementId> const &conjugators);

} // namespace wam

#endif // WAM_PERM_GROUP_HPP
