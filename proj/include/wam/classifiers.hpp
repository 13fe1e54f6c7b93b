#ifndef WAM_CLASSIFIERS_HPP
#define WAM_CLASSIFIERS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wam/monoid.hpp"

namespace wam {

/// witnesses[i][j]: index into the Hilbert basis of the first vector that
/// separates chi_i from chi_j, or empty. The diagonal is always empty.
using WitnessTable = std::vector<std::vector<std::optional<std::size_t>>>;

struct SeparationResult
{
  bool holds;
  WitnessTable witnesses;
};

/// chi_k = psi + phi with <psi, sigma> >= 0 and <phi, sigma> >= 0 for every
/// basis vector sigma, and neither part zero.
struct BamCounterexample
{
  std::size_t k;
  ZVector psi;
  ZVector phi;
};

struct BamResult
{
  bool holds;
  std::optional<BamCounterexample> counterexample;
};

inline constexpr std::uint64_t kDefaultBamBoxLimit = 50'000'000;

/// True iff the basis is exactly the r unit vectors.
bool is_monomial(HilbertBasis const &hb);

/// For every ordered pair i != j some sigma has sigma(i) > 0 = sigma(j).
SeparationResult is_nam(HilbertBasis const &hb);

/// For every ordered pair i != j some sigma has sigma(i) > sigma(j).
SeparationResult is_wam(HilbertBasis const &hb);

/// Searches, for each k, all integer b with 0 <= A b <= A e_k (A the basis
/// matrix). Finiteness comes from rank(A) = r: fixing r independent rows
/// bounds b through their inverse, so the search enumerates the sub-box of
/// those rows and filters by integrality and the remaining rows.
///
/// The reported counterexample has the smallest k, then the
/// lexicographically smallest psi. Throws InvariantError when the basis has
/// rank below r and ResourceCapError when a sub-box exceeds `box_limit`
/// points.
BamResult is_bam(HilbertBasis const &hb,
                 std::uint64_t box_limit = kDefaultBamBoxLimit);

/// True iff psi and e_k - psi both pair nonnegatively with every basis vector
/// and neither is zero.
bool verify_bam_counterexample(HilbertBasis const &hb,
                               BamCounterexample const &c);

struct ClassificationFlags
{
  bool monomial;
  bool nam;
  bool wam;
  bool bam;
};

struct ClassificationReport
{
  ClassificationFlags flags;
  WitnessTable nam_witnesses;
  WitnessTable wam_witnesses;
  std::optional<BamCounterexample> bam_counterexample;
};

ClassificationReport classify(HilbertBasis const &hb,
                              std::uint64_t box_limit = kDefaultBamBoxLimit);

/// monomial => nam, monomial => bam, nam => wam, bam => wam.
bool check_implications(ClassificationFlags const &flags);

} // namespace wam

#endif // WAM_CLASSIFIERS_HPP
