#include "wam/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wam/bitset.hpp"
#include "wam/errors.hpp"

namespace wam {

// --- StabilizerChain -------------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::vector<Permutation> const &gens)
: degree_(degree)
{
  for (auto const &g : gens) {
    auto [residue, stop] = strip(g, 0);
    if (!residue.is_identity())
      add_generator(residue, 0, stop);
  }

  // Sift Schreier generators level by level until every one of them strips
  // to the identity; at that point the chain is a base and strong generating
  // set.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; !changed && i < levels_.size(); ++i) {
      Level const &level = levels_[i];
      for (std::size_t oi = 0; !changed && oi < level.orbit.size(); ++oi) {
        Point x = level.orbit[oi];
        for (std::size_t si = 0; si < level.generators.size(); ++si) {
          Permutation const &s = level.generators[si];
          Point y = s[x];
          Permutation h =
            *level.transversal[x] * s * level.transversal[y]->inverse();
          auto [residue, stop] = strip(std::move(h), i + 1);
          if (!residue.is_identity()) {
            add_generator(residue, i + 1, stop);
            changed = true;
            break;
          }
        }
      }
    }
  }
}

void StabilizerChain::rebuild_orbit(Level &level) const
{
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base_point] = Permutation(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point x = level.orbit[i];
    for (auto const &s : level.generators) {
      Point y = s[x];
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t>
StabilizerChain::strip(Permutation p, std::size_t from) const
{
  for (std::size_t l = from; l < levels_.size(); ++l) {
    Point x = p[levels_[l].base_point];
    if (!levels_[l].transversal[x])
      return {std::move(p), l};
    p = p * levels_[l].transversal[x]->inverse();
  }
  return {std::move(p), levels_.size()};
}

void StabilizerChain::add_generator(Permutation const &p, std::size_t from,
                                    std::size_t to)
{
  if (to == levels_.size()) {
    Point moved = 0;
    while (p[moved] == moved)
      ++moved;
    levels_.push_back(Level{moved, {}, {}, {}});
  }
  for (std::size_t l = from; l <= to; ++l) {
    levels_[l].generators.push_back(p);
    rebuild_orbit(levels_[l]);
  }
}

std::uint64_t StabilizerChain::order() const
{
  std::uint64_t result = 1;
  for (auto const &level : levels_)
    result *= level.orbit.size();
  return result;
}

bool StabilizerChain::contains(Permutation const &p) const
{
  if (p.degree() != degree_)
    return false;
  auto [residue, stop] = strip(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> result;
  for (auto const &level : levels_)
    result.push_back(level.base_point);
  return result;
}

// --- PermGroup --------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
: degree_(degree), generators_(std::move(generators))
{
  if (degree_ == 0)
    throw InputError("permutation group needs at least one point");
  for (auto const &g : generators_)
    if (g.degree() != degree_)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " +
                       std::to_string(degree_));
  chain_ = std::make_shared<StabilizerChain const>(degree_, generators_);
}

bool PermGroup::contains(Permutation const &p) const
{ return chain_->contains(p); }

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  if (other.degree() != degree_)
    return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](auto const &g) { return other.contains(g); });
}

bool PermGroup::is_abelian() const
{
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
  return true;
}

// --- GroupTable -------------------------------------------------------------

namespace {

constexpr std::size_t kCayleyTableLimit = 2048;

} // namespace

GroupTable::GroupTable(PermGroup group, std::size_t size_cap)
: group_(std::move(group))
{
  std::uint64_t n = group_.order();
  if (n > size_cap)
    throw ResourceCapError("group order " + std::to_string(n) +
                           " exceeds size cap " + std::to_string(size_cap));

  elements_.reserve(n);
  elements_.emplace_back(group_.degree());
  index_.emplace(elements_[0], 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (auto const &s : group_.generators()) {
      Permutation y = elements_[i] * s;
      if (!index_.count(y)) {
        index_.emplace(y, static_cast<ElementId>(elements_.size()));
        elements_.push_back(std::move(y));
      }
    }
  }
  if (elements_.size() != n)
    throw InvariantError("enumerated " + std::to_string(elements_.size()) +
                         " elements but stabilizer chain reports order " +
                         std::to_string(n));

  if (n <= kCayleyTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
  }

  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
    orders_[i] = elements_[i].order();
    exponent_ = std::lcm(exponent_, orders_[i]);
  }
  for (auto const &s : group_.generators())
    gen_ids_.push_back(index_.at(s));

  compute_classes();
}

std::optional<ElementId> GroupTable::index_of(Permutation const &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementId GroupTable::mul(ElementId a, ElementId b) const
{
  if (!table_.empty())
    return table_[std::size_t{a} * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

bool GroupTable::is_abelian() const
{
  for (ElementId a : gen_ids_)
    for (ElementId b : gen_ids_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

void GroupTable::compute_classes()
{
  std::size_t const n = size();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> found;
  for (ElementId x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    std::vector<ElementId> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementId g : gen_ids_) {
        ElementId y = conj(orbit[i], g);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    ElementId rep = *std::min_element(
      orbit.begin(), orbit.end(),
      [&](ElementId a, ElementId b) { return elements_[a] < elements_[b]; });
    std::sort(orbit.begin(), orbit.end());
    found.push_back(ConjugacyClass{rep, orbit.size(), orders_[rep],
                                   std::move(orbit)});
  }
  std::sort(found.begin(), found.end(), [&](auto const &a, auto const &b) {
    if (a.element_order != b.element_order)
      return a.element_order < b.element_order;
    if (a.size != b.size)
      return a.size < b.size;
    return elements_[a.representative] < elements_[b.representative];
  });
  classes_ = std::move(found);
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (ElementId x : classes_[c].members)
      class_of_[x] = c;
}

std::vector<ConjugacyClass> const &conjugacy_classes(GroupTable const &g)
{ return g.classes(); }

// --- constructions ----------------------------------------------------------

namespace {

// Right-multiplication closure; `list` must contain the identity.
void close_under(GroupTable const &g, std::vector<ElementId> &list,
                 Bitset &members, std::vector<ElementId> const &gens)
{
  for (std::size_t i = 0; i < list.size(); ++i)
    for (ElementId s : gens) {
      ElementId y = g.mul(list[i], s);
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
}

std::vector<Permutation> to_permutations(GroupTable const &g,
                                         std::vector<ElementId> const &ids)
{
  std::vector<Permutation> result;
  for (ElementId id : ids)
    result.push_back(g.element(id));
  return result;
}

} // namespace

std::vector<ElementId> normal_closure(GroupTable const &g,
                                      std::vector<ElementId> const &seed,
                                      std::vector<ElementId> const &conjugators)
{
  Bitset members(g.size());
  std::vector<ElementId> list{0};
  members.set(0);
  std::vector<ElementId> gens;
  auto add = [&](ElementId y) {
    if (members.test(y))
      return;
    gens.push_back(y);
    close_under(g, list, members, gens);
  };
  for (ElementId s : seed)
    add(s);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (ElementId c : conjugators)
      add(g.conj(gens[i], c));
  return list;
}

namespace {

std::vector<ElementId> reduce_generators(GroupTable const &g,
                                         std::vector<ElementId> const &elems)
{
  Bitset members(g.size());
  std::vector<ElementId> list{0};
  members.set(0);
  std::vector<ElementId> gens;
  for (ElementId x : elems)
    if (!members.test(x)) {
      gens.push_back(x);
      close_under(g, list, members, gens);
    }
  return gens;
}

} // namespace

PermGroup derived_subgroup(PermGroup const &g)
{
  GroupTable table(g, std::max<std::uint64_t>(g.order(), 1));
  std::vector<ElementId> commutators;
  auto const &gens = table.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ElementId a = gens[i], b = gens[j];
      ElementId c = table.mul(table.mul(table.inv(a), table.inv(b)),
                              table.mul(a, b));
      if (c != 0)
        commutators.push_back(c);
    }
  auto members = normal_closure(table, commutators, gens);
  return PermGroup(g.degree(),
                   to_permutations(table, reduce_generators(table, members)));
}

PermGroup center(GroupTable const &g)
{
  std::vector<ElementId> central;
  for (ElementId x = 0; x < g.size(); ++x) {
    bool commutes = true;
    for (ElementId s : g.generator_ids())
      if (g.mul(x, s) != g.mul(s, x)) {
        commutes = false;
        break;
      }
    if (commutes)
      central.push_back(x);
  }
  return PermGroup(g.group().degree(),
                   to_permutations(g, reduce_generators(g, central)));
}

PermGroup quotient_group(PermGroup const &g, PermGroup const &n,
                         std::size_t size_cap)
{
  if (n.degree() != g.degree() || !n.is_subgroup_of(g))
    throw InputError("quotient: N is not a subgroup of G");
  for (auto const &x : n.generators())
    for (auto const &s : g.generators())
      if (!n.contains(conjugate(x, s)))
        throw InputError("quotient: N is not normal in G");

  GroupTable table(g, size_cap);
  std::vector<ElementId> n_gens;
  for (auto const &x : n.generators())
    n_gens.push_back(*table.index_of(x));
  Bitset n_members(table.size());
  n_members.set(0);
  std::vector<ElementId> n_list{0};
  close_under(table, n_list, n_members, n_gens);

  constexpr std::size_t unlabeled = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(table.size(), unlabeled);
  std::vector<ElementId> coset_rep;
  for (ElementId x = 0; x < table.size(); ++x) {
    if (label[x] != unlabeled)
      continue;
    for (ElementId m : n_list)
      label[table.mul(m, x)] = coset_rep.size();
    coset_rep.push_back(x);
  }

  std::size_t const cosets = coset_rep.size();
  std::vector<Permutation> gens;
  for (ElementId s : table.generator_ids()) {
    std::vector<Point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c)
      images[c] = static_cast<Point>(label[table.mul(coset_rep[c], s)]);
    Permutation p(std::move(images));
    if (!p.is_identity())
      gens.push_back(std::move(p));
  }
  PermGroup result(cosets, std::move(gens));
  if (result.order() * n.order() != g.order())
    throw InvariantError("quotient order mismatch");
  return result;
}

PermGroup direct_product(PermGroup const &g, PermGroup const &h,
                         std::size_t size_cap)
{
  std::uint64_t order = g.order() * h.order();
  if (order > size_cap)
    throw ResourceCapError("direct product order " + std::to_string(order) +
                           " exceeds size cap " + std::to_string(size_cap));
  std::size_t degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (auto const &s : g.generators())
    gens.push_back(s.shifted(0, degree));
  for (auto const &s : h.generators())
    gens.push_back(s.shifted(g.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

} // namespace wam
