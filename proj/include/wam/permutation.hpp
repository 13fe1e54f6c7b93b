#ifndef WAM_PERMUTATION_HPP
#define WAM_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wam {

using Point = std::uint32_t;

/// A bijection on {0,...,n-1}. Composition acts on the right: for
/// `a * b` the point is first moved by `a`, then by `b`.
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation of the given degree from 0-based cycles.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::vector<Point> const &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;

  /// Cycle notation with 1-based points, e.g. "(1,2)(3,4,5)"; "()" for the
  /// identity.
  std::string to_cycle_string() const;

  /// Same permutation acting on `offset + degree()` points, fixing the first
  /// `offset` points and extended by fixed points up to `new_degree`.
  Permutation shifted(std::size_t offset, std::size_t new_degree) const;

  friend Permutation operator*(Permutation const &a, Permutation const &b);
  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &a,
                                          Permutation const &b) = default;

private:
  std::vector<Point> images_;
};

/// x^g = g^-1 x g
inline Permutation conjugate(Permutation const &x, Permutation const &g)
{ return g.inverse() * x * g; }

inline Permutation commutator(Permutation const &a, Permutation const &b)
{ return a.inverse() * b.inverse() * a * b; }

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace wam

#endif // WAM_PERMUTATION_HPP
