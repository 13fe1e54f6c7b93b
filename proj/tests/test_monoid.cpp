#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wam/errors.hpp"
#include "wam/monoid.hpp"
#include "wam/named_groups.hpp"

using namespace wam;

namespace {

NVector vec(std::initializer_list<int> xs)
{
  NVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs)
    v(i++) = x;
  return v;
}

std::vector<NVector> random_set(std::mt19937 &rng, int r, int max_coord, int max_size)
{
  std::uniform_int_distribution<int> coord(0, max_coord);
  std::uniform_int_distribution<int> size(1, max_size);
  std::vector<NVector> s(static_cast<std::size_t>(size(rng)), NVector(r));
  for (auto &v : s)
    for (int i = 0; i < r; ++i)
      v(i) = coord(rng);
  return s;
}

MonomialVectorSet pipeline_vectors(PermGroup const &g)
{
  GroupTable t(g);
  auto ct = character_table(t);
  return monomial_vectors(t, ct, subgroup_conjugacy_classes(t));
}

} // namespace

TEST(Membership, Basics)
{
  EXPECT_TRUE(is_member(vec({0, 0}), {vec({1, 0})}).member);
  auto r = is_member(vec({2, 0}), {vec({1, 0})});
  ASSERT_TRUE(r.member);
  EXPECT_EQ(r.certificate, (std::vector<std::size_t>{0, 0}));
  EXPECT_FALSE(is_member(vec({1, 1}), {vec({2, 0}), vec({0, 2})}).member);
  EXPECT_FALSE(is_member(vec({-1, 0}), {vec({1, 0})}).member);
}

TEST(Membership, CertificatesSumToTarget)
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto gens = random_set(rng, 3, 3, 5);
    gens.push_back(NVector::Zero(3)); // zero generators are skipped
    std::uniform_int_distribution<int> coord(0, 5);
    NVector v(3);
    for (int i = 0; i < 3; ++i)
      v(i) = coord(rng);
    auto r = is_member(v, gens);
    if (!r.member)
      continue;
    NVector sum = NVector::Zero(3);
    for (auto i : r.certificate)
      sum += gens[i];
    EXPECT_EQ(sum, v);
  }
}

TEST(HilbertBasis, SmallExamples)
{
  auto hb = hilbert_basis({vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({2, 1})});
  EXPECT_EQ(oracle::to_set(hb.basis), (std::set<oracle::Vec>{{1, 0}, {0, 1}}));
  auto hb2 = hilbert_basis({vec({2, 0}), vec({0, 2}), vec({1, 1}), vec({2, 2})});
  EXPECT_EQ(hb2.basis.size(), 3u);
  EXPECT_THROW(hilbert_basis(std::vector<NVector>{}), InputError);
  EXPECT_THROW(hilbert_basis({vec({1, 0}), vec({1})}), InputError);
}

TEST(HilbertBasis, CanonicalOrderIsLexDescending)
{
  auto hb = hilbert_basis({vec({0, 1, 1}), vec({1, 0, 0}), vec({0, 0, 1}), vec({0, 1, 0})});
  ASSERT_EQ(hb.basis.size(), 3u);
  EXPECT_EQ(hb.basis[0], vec({1, 0, 0}));
  EXPECT_EQ(hb.basis[1], vec({0, 1, 0}));
  EXPECT_EQ(hb.basis[2], vec({0, 0, 1}));
}

TEST(HilbertBasis, RandomSetsMatchOracle)
{
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    auto s = random_set(rng, dim(rng), 3, 8);
    std::vector<oracle::Vec> raw;
    for (auto const &v : s)
      raw.push_back(oracle::to_vec(v));
    auto expected = oracle::hilbert_basis(raw);
    if (expected.empty())
      continue;
    EXPECT_EQ(oracle::to_set(hilbert_basis(s).basis), expected) << "trial " << trial;
  }
}

TEST(HilbertBasis, IdempotentAndGeneratesInput)
{
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_set(rng, 4, 3, 8);
    s.push_back(NVector::Ones(4));
    auto hb = hilbert_basis(s);
    EXPECT_EQ(hilbert_basis(hb.basis).basis, hb.basis);
    for (auto const &v : s)
      EXPECT_TRUE(is_member(v, hb.basis).member);
  }
}

TEST(MonomialVectors, TrivialAndAbelian)
{
  auto trivial = pipeline_vectors(PermGroup(1));
  ASSERT_EQ(trivial.vectors.size(), 1u);
  EXPECT_EQ(trivial.vectors[0], vec({1}));
  EXPECT_EQ(lattice_rank(hilbert_basis(trivial).basis), 1u);

  auto c6 = pipeline_vectors(construct_named("Cyclic", {6}));
  for (Eigen::Index i = 0; i < 6; ++i) {
    NVector e = NVector::Zero(6);
    e(i) = 1;
    EXPECT_TRUE(std::find(c6.vectors.begin(), c6.vectors.end(), e) != c6.vectors.end());
  }
  auto hb = hilbert_basis(c6);
  EXPECT_EQ(hb.basis.size(), 6u);
}

TEST(MonomialVectors, IndependentOfJobs)
{
  GroupTable t(construct_named("GL", {2, 3}));
  auto ct = character_table(t);
  auto classes = subgroup_conjugacy_classes(t);
  auto a = monomial_vectors(t, ct, classes, 1);
  auto b = monomial_vectors(t, ct, classes, 4);
  EXPECT_EQ(a.vectors, b.vectors);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    EXPECT_EQ(a.witnesses[i].subgroup_class, b.witnesses[i].subgroup_class);
    EXPECT_EQ(a.witnesses[i].character, b.witnesses[i].character);
  }
}

TEST(LatticeRank, MatchesOracleAndBrauerCount)
{
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_set(rng, 4, 3, 6);
    std::vector<oracle::Vec> raw;
    for (auto const &v : s)
      raw.push_back(oracle::to_vec(v));
    EXPECT_EQ(lattice_rank(s), oracle::rank(raw));
  }
  for (auto const &g : {construct_named("SL", {2, 3}), construct_named("Alt", {6}),
                        construct_named("GL", {2, 3})}) {
    auto vs = pipeline_vectors(g);
    auto hb = hilbert_basis(vs);
    EXPECT_EQ(lattice_rank(hb.basis), vs.dimension);
    EXPECT_GE(hb.basis.size(), vs.dimension);
  }
}
