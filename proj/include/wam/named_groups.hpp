#ifndef WAM_NAMED_GROUPS_HPP
#define WAM_NAMED_GROUPS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "wam/perm_group.hpp"

namespace wam {

/// Arithmetic in GF(q), q = p^k, elements encoded as integers 0..q-1 whose
/// base-p digits are polynomial coefficients modulo a fixed irreducible
/// polynomial (the lexicographically first monic one).
class GaloisField
{
public:
  explicit GaloisField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const;
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned e) const;
  /// Generator of the multiplicative group.
  unsigned primitive_element() const { return primitive_; }

private:
  unsigned q_, p_, k_;
  unsigned primitive_ = 1;
  std::vector<unsigned> add_, mul_;
};

/// Returns p when q = p^k for a prime p, 0 otherwise.
unsigned prime_power_base(unsigned long long q);

/// Named constructions:
///   Sym(n), Alt(n), Cyclic(n), Dihedral(2n) of order 2n,
///   SL(n,q), GL(n,q) for n in {2,3}, acting on the q^n - 1 nonzero vectors
///   of the natural module (vector v = sum v_i q^i is point v - 1),
///   Mathieu(10) on the projective line over GF(9).
/// Throws InputError for unknown names or bad arguments and
/// ResourceCapError when the order exceeds `size_cap`.
PermGroup construct_named(std::string const &name,
                          std::vector<long long> const &args,
                          std::size_t size_cap = kDefaultSizeCap);

} // namespace wam

#endif // WAM_NAMED_GROUPS_HPP
