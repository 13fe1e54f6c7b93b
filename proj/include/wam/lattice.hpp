#ifndef WAM_LATTICE_HPP
#define WAM_LATTICE_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace wam {

using Rational = boost::multiprecision::cpp_rational;

template<typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = DenseMatrix<Rational>;
using IntMatrix = DenseMatrix<std::int64_t>;

/// Exact Gaussian elimination over a field scalar. Returns the indices of a
/// maximal set of linearly independent rows, chosen greedily in row order.
template<typename Scalar>
std::vector<Eigen::Index> independent_rows(DenseMatrix<Scalar> const &m)
{
  // Rows kept so far, reduced against each other; pivot column per row.
  std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>> reduced;
  std::vector<Eigen::Index> pivot_cols;
  std::vector<Eigen::Index> chosen;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> row = m.row(i);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      Scalar c = row(pivot_cols[k]);
      if (c != Scalar(0))
        row -= c * reduced[k];
    }
    Eigen::Index pc = 0;
    while (pc < row.size() && row(pc) == Scalar(0))
      ++pc;
    if (pc == row.size())
      continue;
    row /= Scalar(row(pc));
    reduced.push_back(row);
    pivot_cols.push_back(pc);
    chosen.push_back(i);
  }
  return chosen;
}

template<typename Scalar>
Eigen::Index exact_rank(DenseMatrix<Scalar> const &m)
{ return static_cast<Eigen::Index>(independent_rows(m).size()); }

/// Rank over Q of an integer matrix, exact.
template<typename Derived>
Eigen::Index rational_rank(Eigen::MatrixBase<Derived> const &m)
{ return exact_rank<Rational>(m.template cast<Rational>()); }

/// Inverse of an invertible square matrix over a field scalar, by
/// Gauss-Jordan elimination.
template<typename Scalar>
DenseMatrix<Scalar> exact_inverse(DenseMatrix<Scalar> m)
{
  Eigen::Index const n = m.rows();
  DenseMatrix<Scalar> inv = DenseMatrix<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index sel = col;
    while (sel < n && m(sel, col) == Scalar(0))
      ++sel;
    if (sel == n)
      throw std::domain_error("matrix is singular");
    m.row(col).swap(m.row(sel));
    inv.row(col).swap(inv.row(sel));
    Scalar s = m(col, col);
    m.row(col) /= s;
    inv.row(col) /= s;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || m(i, col) == Scalar(0))
        continue;
      Scalar c = m(i, col);
      m.row(i) -= c * m.row(col);
      inv.row(i) -= c * inv.row(col);
    }
  }
  return inv;
}

/// B^-1 = numerators / denominator with integer numerators.
struct ScaledInverse
{
  IntMatrix numerators;
  std::int64_t denominator;
};

/// Throws std::overflow_error if entries do not fit in int64.
ScaledInverse scaled_inverse(Eigen::MatrixXi const &b);

} // namespace wam

#endif // WAM_LATTICE_HPP
