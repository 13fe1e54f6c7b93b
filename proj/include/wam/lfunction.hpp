#ifndef WAM_LFUNCTION_HPP
#define WAM_LFUNCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wam/classifiers.hpp"
#include "wam/monoid.hpp"

namespace wam {

/// d_i = order at s0 of the L-function of chi_i. The order of L(s, phi) for
/// a character phi = sum a_i chi_i is the dot product d . a.
using OrderVector = ZVector;

long l_order(OrderVector const &d, NVector const &a);

/// Every monomial L-function is holomorphic: sigma . d >= 0 for each basis
/// vector sigma.
bool is_admissible(OrderVector const &d, HilbertBasis const &hb);

/// Hilbert basis of Hol = { a in N^r : d . a >= 0 }.
struct HolMonoidBasis
{
  OrderVector d;
  std::vector<NVector> basis; // lexicographically descending
};

/// Completion procedure on the equation d . a - s = 0 over N^(r+1): grow
/// candidates one unit at a time in directions that move the defect towards
/// zero, keep zero-defect candidates not dominated by an earlier solution,
/// then drop the slack coordinate.
HolMonoidBasis hol_hilbert_basis(OrderVector const &d);

/// A positive affine monoid is factorial iff its Hilbert basis is linearly
/// independent. The trivial monoid {0} is reported non-factorial.
bool is_factorial(std::vector<NVector> const &basis);
inline bool is_factorial(HolMonoidBasis const &b) { return is_factorial(b.basis); }

enum class CheckStatus
{
  pass,
  fail,
  precondition_violated
};

std::string to_string(CheckStatus s);

/// For a WAM basis and admissible d: (d >= 0) == is_factorial(Hol).
struct FactorialityCheck
{
  CheckStatus status;
  std::string detail;
  bool holomorphic = false;
  bool factorial = false;
  HolMonoidBasis hol;
};

FactorialityCheck theorem3_check(HilbertBasis const &hb, OrderVector const &d);

/// Searches d with d_k = 1, -bound <= d_l <= 0 for l != k, some d_m < 0,
/// admissible for the basis. Passes iff none exists.
struct SimpleZeroCheck
{
  CheckStatus status;
  std::string detail;
  std::uint64_t examined = 0;
  std::optional<OrderVector> counterexample;
};

SimpleZeroCheck theorem4_check(HilbertBasis const &hb, std::size_t k,
                               int bound);

/// Rejection sampling of admissible order vectors from [-bound, bound]^r.
/// Stops after `count` hits or `max_draws` draws.
std::vector<OrderVector> sample_admissible(HilbertBasis const &hb,
                                           std::size_t count, int bound,
                                           std::uint64_t seed,
                                           std::uint64_t max_draws = 10'000'000);

} // namespace wam

#endif // WAM_LFUNCTION_HPP
