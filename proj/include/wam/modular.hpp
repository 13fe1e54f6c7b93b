#ifndef WAM_MODULAR_HPP
#define WAM_MODULAR_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace wam {

/// Residues mod p stored as int64 in [0, p). p stays below 2^31 so that
/// products fit.
using ModMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using ModVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

class PrimeField
{
public:
  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const { return p_; }
  std::int64_t reduce(std::int64_t a) const
  {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const
  { return (a + b) % p_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const
  { return (a - b + p_) % p_; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const
  { return (a * b) % p_; }
  std::int64_t pow(std::int64_t a, std::uint64_t e) const;
  std::int64_t inv(std::int64_t a) const;

  /// Symmetric lift of a residue to (-p/2, p/2].
  std::int64_t lift(std::int64_t a) const
  { return a > p_ / 2 ? a - p_ : a; }

  /// Element of exact multiplicative order `n`; n must divide p - 1.
  std::int64_t root_of_unity(std::uint64_t n) const;

private:
  std::int64_t p_;
};

bool is_prime(std::uint64_t n);

/// Smallest prime p = 1 + t * exponent with p > 2 * bound.
std::int64_t find_character_prime(std::uint64_t exponent, std::uint64_t bound);

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows end up at the bottom.
std::vector<Eigen::Index> row_reduce(ModMatrix &m, PrimeField const &f);

/// Basis (as rows) of the right null space { y : m y = 0 }.
ModMatrix null_space(ModMatrix m, PrimeField const &f);

std::size_t rank(ModMatrix m, PrimeField const &f);

/// Characteristic polynomial det(X I - m), coefficients lowest degree first,
/// via reduction to Hessenberg form.
std::vector<std::int64_t> characteristic_polynomial(ModMatrix h,
                                                    PrimeField const &f);

/// Distinct roots in F_p, by exhaustive evaluation.
std::vector<std::int64_t> roots(std::vector<std::int64_t> const &poly,
                                PrimeField const &f);

} // namespace wam

#endif // WAM_MODULAR_HPP
