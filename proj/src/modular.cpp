#include "wam/modular.hpp"

#include <string>

#include "wam/errors.hpp"

namespace wam {

PrimeField::PrimeField(std::int64_t p)
: p_(p)
{
  if (p < 2 || p >= (std::int64_t{1} << 31) ||
      !is_prime(static_cast<std::uint64_t>(p)))
    throw InvariantError("invalid working prime " + std::to_string(p));
}

std::int64_t PrimeField::pow(std::int64_t a, std::uint64_t e) const
{
  std::int64_t result = 1;
  a = reduce(a);
  while (e) {
    if (e & 1)
      result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const
{
  a = reduce(a);
  if (a == 0)
    throw InvariantError("inverse of zero mod p");
  return pow(a, static_cast<std::uint64_t>(p_ - 2));
}

std::int64_t PrimeField::root_of_unity(std::uint64_t n) const
{
  auto const group = static_cast<std::uint64_t>(p_ - 1);
  if (n == 0 || group % n != 0)
    throw InvariantError("no root of unity of order " + std::to_string(n));
  std::vector<std::uint64_t> prime_factors;
  for (std::uint64_t m = n, d = 2; m > 1; ++d) {
    if (d * d > m)
      d = m;
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  for (std::int64_t x = 2; x < p_; ++x) {
    std::int64_t z = pow(x, group / n);
    bool exact = true;
    for (auto q : prime_factors)
      if (pow(z, n / q) == 1) {
        exact = false;
        break;
      }
    if (exact)
      return z;
  }
  if (n == 1)
    return 1;
  throw InvariantError("root of unity search failed");
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::int64_t find_character_prime(std::uint64_t exponent, std::uint64_t bound)
{
  for (std::uint64_t p = exponent + 1;; p += exponent) {
    if (p >= (std::uint64_t{1} << 31))
      throw InvariantError("prime search failed");
    if (p > 2 * bound && is_prime(p))
      return static_cast<std::int64_t>(p);
  }
}

std::vector<Eigen::Index> row_reduce(ModMatrix &m, PrimeField const &f)
{
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = row;
    while (sel < m.rows() && m(sel, col) == 0)
      ++sel;
    if (sel == m.rows())
      continue;
    m.row(row).swap(m.row(sel));
    std::int64_t s = f.inv(m(row, col));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(row, j) = f.mul(m(row, j), s);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0)
        continue;
      std::int64_t factor = m(i, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

ModMatrix null_space(ModMatrix m, PrimeField const &f)
{
  auto pivots = row_reduce(m, f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  Eigen::Index const nullity = m.cols() - static_cast<Eigen::Index>(pivots.size());
  ModMatrix basis = ModMatrix::Zero(nullity, m.cols());
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    basis(k, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(k, pivots[r]) = f.reduce(-m(static_cast<Eigen::Index>(r), free));
    ++k;
  }
  return basis;
}

std::size_t rank(ModMatrix m, PrimeField const &f)
{ return row_reduce(m, f).size(); }

std::vector<std::int64_t> characteristic_polynomial(ModMatrix h,
                                                    PrimeField const &f)
{
  Eigen::Index const n = h.rows();
  // Similarity transform to upper Hessenberg form.
  for (Eigen::Index m = 1; m + 1 < n; ++m) {
    Eigen::Index i = m;
    while (i < n && h(i, m - 1) == 0)
      ++i;
    if (i == n)
      continue;
    if (i != m) {
      h.row(i).swap(h.row(m));
      h.col(i).swap(h.col(m));
    }
    std::int64_t t = f.inv(h(m, m - 1));
    for (i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0)
        continue;
      std::int64_t u = f.mul(h(i, m - 1), t);
      for (Eigen::Index j = 0; j < n; ++j)
        h(i, j) = f.sub(h(i, j), f.mul(u, h(m, j)));
      for (Eigen::Index j = 0; j < n; ++j)
        h(j, m) = f.add(h(j, m), f.mul(u, h(j, i)));
    }
  }

  // p_k = (X - h_kk) p_{k-1} - sum_i (prod of subdiagonal) h_{k-i,k} p_{k-i-1}
  // with 1-based indices; hh() translates.
  auto hh = [&](Eigen::Index a, Eigen::Index b) { return h(a - 1, b - 1); };
  std::vector<std::vector<std::int64_t>> p(n + 1);
  p[0] = {1};
  for (Eigen::Index k = 1; k <= n; ++k) {
    auto const &prev = p[k - 1];
    std::vector<std::int64_t> cur(k + 1, 0);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], prev[d]);
      cur[d] = f.sub(cur[d], f.mul(hh(k, k), prev[d]));
    }
    std::int64_t t = 1;
    for (Eigen::Index i = 1; i < k; ++i) {
      t = f.mul(t, hh(k - i + 1, k - i));
      std::int64_t c = f.mul(t, hh(k - i, k));
      auto const &q = p[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d)
        cur[d] = f.sub(cur[d], f.mul(c, q[d]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

std::vector<std::int64_t> roots(std::vector<std::int64_t> const &poly,
                                PrimeField const &f)
{
  std::vector<std::int64_t> result;
  for (std::int64_t x = 0; x < f.modulus(); ++x) {
    std::int64_t v = 0;
    for (std::size_t d = poly.size(); d-- > 0;)
      v = f.add(f.mul(v, x), poly[d]);
    if (v == 0)
      result.push_back(x);
  }
  return result;
}

} // namespace wam
