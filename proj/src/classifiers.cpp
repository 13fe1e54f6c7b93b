#include "wam/classifiers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wam/errors.hpp"
#include "wam/lattice.hpp"

namespace wam {

bool is_monomial(HilbertBasis const &hb)
{
  if (hb.basis.size() != hb.dimension)
    return false;
  std::vector<bool> hit(hb.dimension, false);
  for (auto const &v : hb.basis) {
    if (v.sum() != 1 || v.minCoeff() < 0)
      return false;
    Eigen::Index i;
    v.maxCoeff(&i);
    hit[static_cast<std::size_t>(i)] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

namespace {

template<typename Separates>
SeparationResult separation(HilbertBasis const &hb, Separates separates)
{
  std::size_t const r = hb.dimension;
  SeparationResult result{true, WitnessTable(r, std::vector<std::optional<std::size_t>>(r))};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j)
        continue;
      for (std::size_t t = 0; t < hb.basis.size(); ++t)
        if (separates(hb.basis[t](i), hb.basis[t](j))) {
          result.witnesses[i][j] = t;
          break;
        }
      if (!result.witnesses[i][j])
        result.holds = false;
    }
  return result;
}

} // namespace

SeparationResult is_nam(HilbertBasis const &hb)
{
  return separation(hb, [](int a, int b) { return a > 0 && b == 0; });
}

SeparationResult is_wam(HilbertBasis const &hb)
{
  return separation(hb, [](int a, int b) { return a > b; });
}

namespace {

// Lexicographically smallest b not in {0, e_k} with 0 <= A b <= A e_k.
std::optional<ZVector> bam_search(Eigen::MatrixXi const &a, std::size_t k,
                                  std::uint64_t box_limit)
{
  Eigen::Index const r = a.cols();
  Eigen::VectorXi const upper = a.col(static_cast<Eigen::Index>(k));

  std::vector<Eigen::Index> order(static_cast<std::size_t>(a.rows()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return upper(x) < upper(y);
  });
  Eigen::MatrixXi sorted(a.rows(), r);
  for (std::size_t i = 0; i < order.size(); ++i)
    sorted.row(static_cast<Eigen::Index>(i)) = a.row(order[i]);
  // Greedy over a matroid: minimizes the product of (bound + 1).
  auto picked = independent_rows<Rational>(sorted.cast<Rational>());
  if (static_cast<Eigen::Index>(picked.size()) < r)
    throw InvariantError("Hilbert basis has rank " +
                         std::to_string(picked.size()) + " < r = " +
                         std::to_string(r));

  Eigen::MatrixXi b(r, r);
  Eigen::VectorXi bound(r);
  std::uint64_t box = 1;
  for (Eigen::Index i = 0; i < r; ++i) {
    b.row(i) = sorted.row(picked[static_cast<std::size_t>(i)]);
    bound(i) = upper(order[static_cast<std::size_t>(picked[static_cast<std::size_t>(i)])]);
    box *= static_cast<std::uint64_t>(bound(i)) + 1;
    if (box > box_limit)
      throw ResourceCapError("BAM search box exceeds " +
                             std::to_string(box_limit) + " points");
  }
  ScaledInverse inv = scaled_inverse(b);

  std::vector<Eigen::Index> free_rows;
  for (Eigen::Index i = 0; i < r; ++i)
    if (bound(i) > 0)
      free_rows.push_back(i);

  std::optional<ZVector> best;
  Eigen::VectorXi c = Eigen::VectorXi::Zero(r);
  using Wide = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
  Wide numer = Wide::Zero(r);
  ZVector candidate(r);
  while (true) {
    bool integral = true;
    for (Eigen::Index i = 0; i < r && integral; ++i) {
      if (numer(i) % inv.denominator != 0)
        integral = false;
      else
        candidate(i) = static_cast<int>(numer(i) / inv.denominator);
    }
    if (integral) {
      Eigen::VectorXi pairing = a * candidate;
      bool inside = (pairing.array() >= 0).all() &&
                    (pairing.array() <= upper.array()).all();
      bool trivial = candidate.isZero() ||
                     (candidate.sum() == 1 &&
                      candidate(static_cast<Eigen::Index>(k)) == 1 &&
                      (candidate.array() >= 0).all());
      if (inside && !trivial && (!best || lex_less(candidate, *best)))
        best = candidate;
    }
    // odometer over the rows with a nonzero bound
    std::size_t pos = 0;
    while (pos < free_rows.size()) {
      Eigen::Index row = free_rows[pos];
      if (c(row) < bound(row)) {
        ++c(row);
        numer += inv.numerators.col(row);
        break;
      }
      numer -= static_cast<std::int64_t>(c(row)) * inv.numerators.col(row);
      c(row) = 0;
      ++pos;
    }
    if (pos == free_rows.size())
      break;
  }
  return best;
}

} // namespace

BamResult is_bam(HilbertBasis const &hb, std::uint64_t box_limit)
{
  Eigen::MatrixXi const a = hb.matrix();
  for (std::size_t k = 0; k < hb.dimension; ++k) {
    if (auto psi = bam_search(a, k, box_limit)) {
      ZVector phi = -*psi;
      phi(static_cast<Eigen::Index>(k)) += 1;
      return BamResult{false, BamCounterexample{k, *psi, phi}};
    }
  }
  return BamResult{true, std::nullopt};
}

bool verify_bam_counterexample(HilbertBasis const &hb,
                               BamCounterexample const &c)
{
  if (c.psi.size() != static_cast<Eigen::Index>(hb.dimension) ||
      c.phi.size() != c.psi.size())
    return false;
  ZVector sum = c.psi + c.phi;
  ZVector unit = ZVector::Zero(c.psi.size());
  unit(static_cast<Eigen::Index>(c.k)) = 1;
  if (sum != unit || c.psi.isZero() || c.phi.isZero())
    return false;
  for (auto const &sigma : hb.basis)
    if (sigma.dot(c.psi) < 0 || sigma.dot(c.phi) < 0)
      return false;
  return true;
}

ClassificationReport classify(HilbertBasis const &hb, std::uint64_t box_limit)
{
  auto nam = is_nam(hb);
  auto wam = is_wam(hb);
  auto bam = is_bam(hb, box_limit);
  return ClassificationReport{
    ClassificationFlags{is_monomial(hb), nam.holds, wam.holds, bam.holds},
    std::move(nam.witnesses), std::move(wam.witnesses),
    std::move(bam.counterexample)};
}

bool check_implications(ClassificationFlags const &f)
{
  return (!f.monomial || f.nam) && (!f.monomial || f.bam) &&
         (!f.nam || f.wam) && (!f.bam || f.wam);
}

} // namespace wam
