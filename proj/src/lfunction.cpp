#include "wam/lfunction.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "wam/errors.hpp"
#include "wam/lattice.hpp"

namespace wam {

long l_order(OrderVector const &d, NVector const &a)
{
  if (d.size() != a.size())
    throw InputError("order vector and character have different dimensions");
  return static_cast<long>(d.cast<long>().dot(a.cast<long>()));
}

bool is_admissible(OrderVector const &d, HilbertBasis const &hb)
{
  if (static_cast<std::size_t>(d.size()) != hb.dimension)
    throw InputError("order vector has dimension " + std::to_string(d.size()) +
                     ", expected " + std::to_string(hb.dimension));
  return std::all_of(hb.basis.begin(), hb.basis.end(),
                     [&](NVector const &s) { return l_order(d, s) >= 0; });
}

HolMonoidBasis hol_hilbert_basis(OrderVector const &d)
{
  Eigen::Index const r = d.size();
  Eigen::Index const n = r + 1; // last coordinate is the slack s = d . a
  Eigen::VectorXi coeff(n);
  coeff.head(r) = d;
  coeff(r) = -1;

  auto lex = [](NVector const &a, NVector const &b) { return lex_less(a, b); };
  std::vector<NVector> solutions;
  auto dominated = [&](NVector const &x) {
    return std::any_of(solutions.begin(), solutions.end(),
                       [&](NVector const &s) {
                         return (s.array() <= x.array()).all();
                       });
  };

  std::set<NVector, decltype(lex)> frontier(lex);
  for (Eigen::Index i = 0; i < n; ++i)
    frontier.insert(NVector::Unit(n, i));

  while (!frontier.empty()) {
    // Solutions at this level first; none of them dominates another.
    std::vector<NVector> fresh;
    for (auto const &x : frontier)
      if (coeff.dot(x) == 0 && !dominated(x))
        fresh.push_back(x);
    solutions.insert(solutions.end(), fresh.begin(), fresh.end());

    std::set<NVector, decltype(lex)> next(lex);
    for (auto const &x : frontier) {
      int defect = coeff.dot(x);
      if (defect == 0)
        continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (static_cast<long>(coeff(j)) * defect >= 0)
          continue;
        NVector y = x;
        ++y(j);
        if (!dominated(y))
          next.insert(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  HolMonoidBasis result{d, {}};
  for (auto const &s : solutions)
    result.basis.push_back(s.head(r));
  std::sort(result.basis.begin(), result.basis.end(),
            [](NVector const &a, NVector const &b) { return lex_less(b, a); });
  return result;
}

bool is_factorial(std::vector<NVector> const &basis)
{
  if (basis.empty())
    return false;
  return lattice_rank(basis) == basis.size();
}

std::string to_string(CheckStatus s)
{
  switch (s) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  case CheckStatus::precondition_violated:
    return "precondition_violated";
  }
  return "unknown";
}

FactorialityCheck theorem3_check(HilbertBasis const &hb, OrderVector const &d)
{
  FactorialityCheck result{CheckStatus::precondition_violated, {}, false, false, {}};
  if (!is_wam(hb).holds) {
    result.detail = "basis is not weak almost monomial";
    return result;
  }
  if (!is_admissible(d, hb)) {
    result.detail = "order vector is not admissible";
    return result;
  }
  result.hol = hol_hilbert_basis(d);
  result.holomorphic = (d.array() >= 0).all();
  result.factorial = is_factorial(result.hol);
  if (result.holomorphic == result.factorial) {
    result.status = CheckStatus::pass;
    result.detail = result.holomorphic ? "holomorphic and factorial"
                                       : "pole and non-factorial";
  } else {
    result.status = CheckStatus::fail;
    result.detail = result.holomorphic ? "holomorphic but non-factorial"
                                       : "pole but factorial";
  }
  return result;
}

SimpleZeroCheck theorem4_check(HilbertBasis const &hb, std::size_t k, int bound)
{
  SimpleZeroCheck result{CheckStatus::precondition_violated, {}, 0, std::nullopt};
  std::size_t const r = hb.dimension;
  if (k >= r) {
    result.detail = "index k out of range";
    return result;
  }
  if (bound < 1) {
    result.detail = "bound must be positive";
    return result;
  }
  if (!is_wam(hb).holds) {
    result.detail = "basis is not weak almost monomial";
    return result;
  }

  OrderVector d = OrderVector::Zero(static_cast<Eigen::Index>(r));
  d(static_cast<Eigen::Index>(k)) = 1;
  std::vector<Eigen::Index> others;
  for (std::size_t i = 0; i < r; ++i)
    if (i != k)
      others.push_back(static_cast<Eigen::Index>(i));

  // odometer over d_l in [-bound, 0] for l != k
  while (true) {
    bool has_pole = std::any_of(others.begin(), others.end(),
                                [&](Eigen::Index i) { return d(i) < 0; });
    if (has_pole) {
      ++result.examined;
      if (is_admissible(d, hb)) {
        result.status = CheckStatus::fail;
        result.counterexample = d;
        result.detail = "admissible pole scenario found";
        return result;
      }
    }
    std::size_t pos = 0;
    while (pos < others.size()) {
      Eigen::Index i = others[pos];
      if (d(i) > -bound) {
        --d(i);
        break;
      }
      d(i) = 0;
      ++pos;
    }
    if (pos == others.size())
      break;
  }
  result.status = CheckStatus::pass;
  result.detail = "no admissible pole scenario";
  return result;
}

std::vector<OrderVector> sample_admissible(HilbertBasis const &hb,
                                           std::size_t count, int bound,
                                           std::uint64_t seed,
                                           std::uint64_t max_draws)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-bound, bound);
  auto const r = static_cast<Eigen::Index>(hb.dimension);
  std::vector<OrderVector> result;
  for (std::uint64_t draw = 0; draw < max_draws && result.size() < count;
       ++draw) {
    OrderVector d(r);
    for (Eigen::Index i = 0; i < r; ++i)
      d(i) = coord(rng);
    if (is_admissible(d, hb))
      result.push_back(std::move(d));
  }
  return result;
}

} // namespace wam
