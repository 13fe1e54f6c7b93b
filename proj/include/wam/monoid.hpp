#ifndef WAM_MONOID_HPP
#define WAM_MONOID_HPP

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

#include "wam/character_table.hpp"
#include "wam/subgroups.hpp"

namespace wam {

/// Integer vector in Z^r (virtual characters, order vectors).
using ZVector = Eigen::VectorXi;

struct VectorHash
{
  std::size_t operator()(Eigen::VectorXi const &v) const noexcept;
};

struct VectorEqual
{
  bool operator()(Eigen::VectorXi const &a, Eigen::VectorXi const &b) const
  { return a.size() == b.size() && a == b; }
};

/// Lexicographic order on vectors of equal length.
bool lex_less(Eigen::VectorXi const &a, Eigen::VectorXi const &b);

/// Where a monomial vector came from: the first (subgroup class, linear
/// character) pair producing it, in canonical enumeration order.
struct MonomialWitness
{
  std::size_t subgroup_class;
  std::size_t character;
};

/// The distinct vectors (<lambda^G, chi_j>)_j over all subgroup classes and
/// linear characters, in order of first appearance.
struct MonomialVectorSet
{
  std::size_t dimension = 0;
  std::vector<NVector> vectors;
  std::vector<MonomialWitness> witnesses;
};

/// `jobs` > 1 spreads the subgroup classes over worker threads; the result
/// does not depend on it.
MonomialVectorSet monomial_vectors(GroupTable const &g, CharacterTable const &t,
                                   std::vector<SubgroupClass> const &classes,
                                   unsigned jobs = 1);

/// Minimal generating set of the monoid spanned by a set of vectors in N^r.
/// Sorted lexicographically descending, so unit vectors come first in
/// coordinate order.
struct HilbertBasis
{
  std::size_t dimension = 0;
  std::vector<NVector> basis;

  /// Basis vectors as rows.
  Eigen::MatrixXi matrix() const;
};

/// Membership in the monoid generated by a fixed vector set, by memoized
/// descent. Generators with zero or negative entries are rejected.
class MonoidMembership
{
public:
  explicit MonoidMembership(std::vector<NVector> generators);

  /// If `v` is an N-combination of the generators, returns generator indices
  /// (with repetition) summing to v.
  std::optional<std::vector<std::size_t>> certificate(NVector const &v);
  bool contains(NVector const &v) { return certificate(v).has_value(); }

  /// Appends a generator. Only valid when every vector queried so far is
  /// strictly smaller in coordinate sum than `g`.
  void add_generator(NVector g);

private:
  bool descend(NVector const &v, std::vector<std::size_t> &cert);

  std::vector<NVector> generators_;
  std::unordered_set<NVector, VectorHash, VectorEqual> failures_;
};

struct MembershipResult
{
  bool member;
  std::vector<std::size_t> certificate;
};

MembershipResult is_member(NVector const &v,
                           std::vector<NVector> const &generators);

HilbertBasis hilbert_basis(std::vector<NVector> const &generators);

inline HilbertBasis hilbert_basis(MonomialVectorSet const &s)
{ return hilbert_basis(s.vectors); }

/// Rank over Q of the span of the vectors.
std::size_t lattice_rank(std::vector<NVector> const &vectors);

} // namespace wam

#endif // WAM_MONOID_HPP
