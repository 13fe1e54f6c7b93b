#include "wam/lattice.hpp"

#include <stdexcept>

namespace wam {

ScaledInverse scaled_inverse(Eigen::MatrixXi const &b)
{
  RationalMatrix inv = exact_inverse<Rational>(b.cast<Rational>());
  boost::multiprecision::cpp_int denom = 1;
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j)
      denom = boost::multiprecision::lcm(
        denom, boost::multiprecision::denominator(inv(i, j)));

  auto const limit = boost::multiprecision::cpp_int(INT64_MAX);
  if (denom > limit)
    throw std::overflow_error("inverse denominator exceeds int64");
  ScaledInverse result{IntMatrix(inv.rows(), inv.cols()),
                       static_cast<std::int64_t>(denom)};
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j) {
      Rational scaled = inv(i, j) * Rational(denom);
      boost::multiprecision::cpp_int num =
        boost::multiprecision::numerator(scaled);
      if (boost::multiprecision::abs(num) > limit)
        throw std::overflow_error("inverse numerator exceeds int64");
      result.numerators(i, j) = static_cast<std::int64_t>(num);
    }
  return result;
}

} // namespace wam
