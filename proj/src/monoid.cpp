#include "wam/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "wam/errors.hpp"
#include "wam/lattice.hpp"

namespace wam {

std::size_t VectorHash::operator()(Eigen::VectorXi const &v) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(v(i)));
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool lex_less(Eigen::VectorXi const &a, Eigen::VectorXi const &b)
{
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

MonomialVectorSet monomial_vectors(GroupTable const &g, CharacterTable const &t,
                                   std::vector<SubgroupClass> const &classes,
                                   unsigned jobs)
{
  std::vector<std::vector<NVector>> per_class(classes.size());
  auto work = [&](std::size_t c) {
    Subgroup const &h = classes[c].representative;
    ClassFusion fusion = class_fusion(g, h);
    for (auto const &lambda :
         linear_characters(g, h, fusion.subgroup_classes))
      per_class[c].push_back(induce_vector(lambda, h, fusion, t));
  };

  if (jobs <= 1) {
    for (std::size_t c = 0; c < classes.size(); ++c)
      work(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t c; (c = next++) < classes.size();) {
          try {
            work(c);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
              failure = std::current_exception();
          }
        }
      });
    for (auto &w : workers)
      w.join();
    if (failure)
      std::rethrow_exception(failure);
  }

  MonomialVectorSet result;
  result.dimension = t.size();
  std::unordered_set<NVector, VectorHash, VectorEqual> seen;
  for (std::size_t c = 0; c < per_class.size(); ++c)
    for (std::size_t k = 0; k < per_class[c].size(); ++k)
      if (seen.insert(per_class[c][k]).second) {
        result.vectors.push_back(per_class[c][k]);
        result.witnesses.push_back(MonomialWitness{c, k});
      }
  return result;
}

Eigen::MatrixXi HilbertBasis::matrix() const
{
  Eigen::MatrixXi m(static_cast<Eigen::Index>(basis.size()),
                    static_cast<Eigen::Index>(dimension));
  for (std::size_t i = 0; i < basis.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = basis[i].transpose();
  return m;
}

MonoidMembership::MonoidMembership(std::vector<NVector> generators)
{
  for (auto &g : generators)
    add_generator(std::move(g));
}

void MonoidMembership::add_generator(NVector g)
{
  if ((g.array() < 0).any())
    throw InputError("monoid generators must be nonnegative");
  generators_.push_back(std::move(g));
}

bool MonoidMembership::descend(NVector const &v, std::vector<std::size_t> &cert)
{
  Eigen::Index lead = 0;
  while (lead < v.size() && v(lead) == 0)
    ++lead;
  if (lead == v.size())
    return true;
  if (failures_.count(v))
    return false;
  // Some generator in any decomposition covers the leading coordinate.
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    NVector const &g = generators_[i];
    if (g(lead) == 0 || (g.array() > v.array()).any())
      continue;
    if (descend(v - g, cert)) {
      cert.push_back(i);
      return true;
    }
  }
  failures_.insert(v);
  return false;
}

std::optional<std::vector<std::size_t>>
MonoidMembership::certificate(NVector const &v)
{
  if ((v.array() < 0).any())
    return std::nullopt;
  std::vector<std::size_t> cert;
  if (!descend(v, cert))
    return std::nullopt;
  std::reverse(cert.begin(), cert.end());
  return cert;
}

MembershipResult is_member(NVector const &v,
                           std::vector<NVector> const &generators)
{
  std::vector<NVector> nonzero;
  std::vector<std::size_t> original;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if ((generators[i].array() != 0).any()) {
      nonzero.push_back(generators[i]);
      original.push_back(i);
    }
  MonoidMembership monoid(std::move(nonzero));
  auto cert = monoid.certificate(v);
  if (!cert)
    return {false, {}};
  for (auto &i : *cert)
    i = original[i];
  return {true, std::move(*cert)};
}

HilbertBasis hilbert_basis(std::vector<NVector> const &generators)
{
  if (generators.empty())
    throw InputError("hilbert basis of an empty generator set");
  HilbertBasis result;
  result.dimension = static_cast<std::size_t>(generators.front().size());

  std::vector<NVector> candidates;
  std::unordered_set<NVector, VectorHash, VectorEqual> seen;
  for (auto const &g : generators) {
    if (static_cast<std::size_t>(g.size()) != result.dimension)
      throw InputError("generators have mixed dimensions");
    if ((g.array() < 0).any())
      throw InputError("generators must be nonnegative");
    if ((g.array() != 0).any() && seen.insert(g).second)
      candidates.push_back(g);
  }
  // A reducible vector splits into parts of strictly smaller coordinate sum,
  // so processing by sum lets each test use only the basis found so far.
  std::sort(candidates.begin(), candidates.end(),
            [](NVector const &a, NVector const &b) {
              if (a.sum() != b.sum())
                return a.sum() < b.sum();
              return lex_less(a, b);
            });

  MonoidMembership monoid({});
  for (auto const &v : candidates) {
    bool reducible = false;
    for (auto const &b : result.basis) {
      if ((b.array() > v.array()).any())
        continue;
      if (monoid.contains(v - b)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      result.basis.push_back(v);
      monoid.add_generator(v);
    }
  }
  std::sort(result.basis.begin(), result.basis.end(),
            [](NVector const &a, NVector const &b) { return lex_less(b, a); });
  return result;
}

std::size_t lattice_rank(std::vector<NVector> const &vectors)
{
  if (vectors.empty())
    return 0;
  Eigen::MatrixXi m(static_cast<Eigen::Index>(vectors.size()), vectors[0].size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  return static_cast<std::size_t>(rational_rank(m));
}

} // namespace wam
