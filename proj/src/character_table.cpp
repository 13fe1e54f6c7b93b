#include "wam/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "wam/errors.hpp"

namespace wam {

ModMatrix class_matrix(GroupTable const &g, std::size_t j, PrimeField const &f)
{
  auto const &classes = g.classes();
  std::size_t const r = classes.size();
  ModMatrix m = ModMatrix::Zero(r, r);
  for (std::size_t l = 0; l < r; ++l) {
    ElementId z = classes[l].representative;
    for (ElementId x : classes[j].members)
      m(g.class_of(g.mul(g.inv(x), z)), l) += 1;
  }
  return m.unaryExpr([&](std::int64_t v) { return f.reduce(v); });
}

namespace {

struct Eigenspace
{
  ModMatrix basis; // rows, reduced echelon form
  std::vector<Eigen::Index> pivots;
};

Eigenspace make_space(ModMatrix rows, PrimeField const &f)
{
  auto pivots = row_reduce(rows, f);
  ModMatrix basis = rows.topRows(static_cast<Eigen::Index>(pivots.size()));
  return Eigenspace{std::move(basis), std::move(pivots)};
}

// Splits `space` into the eigenspaces of m restricted to it.
std::vector<Eigenspace> split(Eigenspace const &space, ModMatrix const &m,
                              PrimeField const &f)
{
  Eigen::Index const d = space.basis.rows();
  if (d == 1)
    return {space};
  ModMatrix restricted(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    ModVector image = (m * space.basis.row(i).transpose())
                        .unaryExpr([&](std::int64_t v) { return f.reduce(v); });
    for (Eigen::Index k = 0; k < d; ++k)
      restricted(k, i) = image(space.pivots[k]);
  }
  auto eigenvalues = roots(characteristic_polynomial(restricted, f), f);
  std::vector<Eigenspace> parts;
  Eigen::Index total = 0;
  for (auto mu : eigenvalues) {
    ModMatrix shifted = restricted;
    for (Eigen::Index k = 0; k < d; ++k)
      shifted(k, k) = f.sub(shifted(k, k), mu);
    ModMatrix coords = null_space(shifted, f);
    ModMatrix vectors =
      (coords * space.basis).unaryExpr([&](std::int64_t v) {
        return f.reduce(v);
      });
    total += vectors.rows();
    parts.push_back(make_space(std::move(vectors), f));
  }
  if (total != d)
    throw InvariantError("class matrix is not diagonalizable over F_p");
  return parts;
}

bool all_split(std::vector<Eigenspace> const &spaces)
{
  return std::all_of(spaces.begin(), spaces.end(),
                     [](auto const &s) { return s.basis.rows() == 1; });
}

std::vector<Eigenspace> split_all(std::vector<Eigenspace> const &spaces,
                                  ModMatrix const &m, PrimeField const &f)
{
  std::vector<Eigenspace> result;
  for (auto const &s : spaces)
    for (auto &part : split(s, m, f))
      result.push_back(std::move(part));
  return result;
}

} // namespace

CharacterTable character_table(GroupTable const &g, std::uint64_t seed)
{
  auto const &classes = g.classes();
  std::size_t const r = classes.size();
  std::uint64_t const n = g.size();

  CharacterTable t;
  t.group_order = n;
  t.exponent = g.exponent();
  t.prime = find_character_prime(t.exponent, n);
  t.seed = seed;
  PrimeField const f(t.prime);
  // dot products of length r must not overflow int64
  if (static_cast<long double>(r) * t.prime * t.prime > 4.0e18L)
    throw ResourceCapError("working prime too large for " + std::to_string(r) +
                           " classes");
  t.omega = f.root_of_unity(t.exponent);
  for (auto const &c : classes) {
    t.class_sizes.push_back(c.size);
    t.element_orders.push_back(c.element_order);
    t.inverse_class.push_back(g.class_of(g.inv(c.representative)));
  }

  std::vector<ModMatrix> matrices;
  for (std::size_t j = 0; j < r; ++j)
    matrices.push_back(class_matrix(g, j, f));

  std::vector<Eigenspace> spaces{
    make_space(ModMatrix::Identity(r, r), f)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, t.prime - 1);
  ModMatrix combo = ModMatrix::Zero(r, r);
  for (auto const &m : matrices)
    combo = (combo + coeff(rng) * m).unaryExpr(
      [&](std::int64_t v) { return f.reduce(v); });
  spaces = split_all(spaces, combo, f);
  for (std::size_t j = 1; j < r && !all_split(spaces); ++j)
    spaces = split_all(spaces, matrices[j], f);
  if (spaces.size() != r || !all_split(spaces))
    throw InvariantError("eigenspace splitting did not separate all " +
                         std::to_string(r) + " characters");

  struct Row
  {
    unsigned degree;
    std::vector<std::int64_t> values;
  };
  std::vector<Row> rows;
  for (auto const &s : spaces) {
    // s.basis is a single reduced row: w_k = |C_k| chi(g_k) / chi(1)
    if (s.pivots[0] != 0)
      throw InvariantError("central character vanishes on the identity");
    auto w = s.basis.row(0);
    std::int64_t norm = 0;
    for (std::size_t k = 0; k < r; ++k)
      norm = f.add(norm, f.mul(f.mul(w(k), w(t.inverse_class[k])),
                               f.inv(static_cast<std::int64_t>(t.class_sizes[k]))));
    std::int64_t deg_sq = f.mul(static_cast<std::int64_t>(n % t.prime), f.inv(norm));
    auto deg = static_cast<std::int64_t>(std::llround(std::sqrt(double(deg_sq))));
    if (deg_sq == 0 || static_cast<std::uint64_t>(deg_sq) > n ||
        deg * deg != deg_sq || n % static_cast<std::uint64_t>(deg) != 0)
      throw InvariantError("degree recovery failed: chi(1)^2 = " +
                           std::to_string(deg_sq) + " mod p");
    Row row{static_cast<unsigned>(deg), std::vector<std::int64_t>(r)};
    for (std::size_t k = 0; k < r; ++k)
      row.values[k] = f.mul(f.mul(w(k), deg),
                            f.inv(static_cast<std::int64_t>(t.class_sizes[k])));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](Row const &a, Row const &b) {
    if (a.degree != b.degree)
      return a.degree < b.degree;
    return a.values < b.values;
  });

  t.values.resize(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    t.degrees.push_back(rows[i].degree);
    for (std::size_t k = 0; k < r; ++k)
      t.values(i, k) = rows[i].values[k];
  }

  auto report = check_orthogonality(t);
  if (!report.ok())
    throw InvariantError("character table fails orthogonality checks");
  return t;
}

OrthogonalityReport check_orthogonality(CharacterTable const &t)
{
  OrthogonalityReport report;
  PrimeField const f(t.prime);
  std::size_t const r = t.size();
  std::uint64_t sum = 0;
  for (auto d : t.degrees)
    sum += std::uint64_t{d} * d;
  report.degree_sum = sum == t.group_order;

  std::int64_t const order = f.reduce(static_cast<std::int64_t>(t.group_order));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < r; ++k)
        s = f.add(s, f.mul(static_cast<std::int64_t>(t.class_sizes[k]),
                           f.mul(t.values(i, k),
                                 t.values(j, t.inverse_class[k]))));
      if (s != (i == j ? order : 0))
        report.rows = false;
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < r; ++i)
        s = f.add(s, f.mul(t.values(i, k), t.values(i, t.inverse_class[l])));
      std::int64_t expected =
        k == l ? f.mul(order, f.inv(static_cast<std::int64_t>(t.class_sizes[k])))
               : 0;
      if (s != expected)
        report.columns = false;
    }
  return report;
}

ClassFusion class_fusion(GroupTable const &g, Subgroup const &h)
{
  ClassFusion fusion{internal_classes(g, h), {}};
  for (auto const &c : fusion.subgroup_classes)
    fusion.map.push_back(g.class_of(c.representative));
  return fusion;
}

NVector induce_vector(LinearCharacter const &lambda, Subgroup const &h,
                      ClassFusion const &fusion, CharacterTable const &t)
{
  PrimeField const f(t.prime);
  std::size_t const r = t.size();
  if (t.exponent % lambda.modulus != 0)
    throw InvariantError("linear character modulus does not divide exp(G)");
  std::int64_t const zeta = f.pow(t.omega, t.exponent / lambda.modulus);
  std::int64_t const inv_order =
    f.inv(static_cast<std::int64_t>(h.order() % t.prime));
  std::uint64_t const index = t.group_order / h.order();

  NVector v(static_cast<Eigen::Index>(r));
  std::uint64_t weighted = 0;
  for (std::size_t j = 0; j < r; ++j) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < fusion.subgroup_classes.size(); ++c) {
      std::int64_t lam = f.pow(zeta, lambda.exponents[c]);
      std::int64_t chi_bar = t.values(j, t.inverse_class[fusion.map[c]]);
      s = f.add(s, f.mul(static_cast<std::int64_t>(
                           fusion.subgroup_classes[c].size % t.prime),
                         f.mul(lam, chi_bar)));
    }
    s = f.mul(s, inv_order);
    if (s > t.prime / 2 || static_cast<std::uint64_t>(s) > index)
      throw InvariantError("induced multiplicity residue " + std::to_string(s) +
                           " does not lift to [0, [G:H]]");
    v(static_cast<Eigen::Index>(j)) = static_cast<int>(s);
    weighted += static_cast<std::uint64_t>(s) * t.degrees[j];
  }
  if (weighted != index)
    throw InvariantError("induced vector fails the degree check");
  return v;
}

} // namespace wam
