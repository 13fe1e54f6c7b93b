#include "wam/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "wam/errors.hpp"

namespace wam {

namespace {

void close_under(GroupTable const &g, Subgroup &h)
{
  for (std::size_t i = 0; i < h.elements.size(); ++i)
    for (ElementId s : h.generators) {
      ElementId y = g.mul(h.elements[i], s);
      if (!h.members.test(y)) {
        h.members.set(y);
        h.elements.push_back(y);
      }
    }
}

void normalize(Subgroup &h) { std::sort(h.elements.begin(), h.elements.end()); }

Subgroup trivial_subgroup(GroupTable const &g)
{
  Subgroup h{Bitset(g.size()), {0}, {}};
  h.members.set(0);
  return h;
}

} // namespace

Subgroup generate_subgroup(GroupTable const &g,
                           std::vector<ElementId> const &gens)
{
  Subgroup h = trivial_subgroup(g);
  for (ElementId s : gens)
    if (!h.members.test(s)) {
      h.generators.push_back(s);
      close_under(g, h);
    }
  normalize(h);
  return h;
}

Subgroup whole_group(GroupTable const &g)
{ return generate_subgroup(g, g.generator_ids()); }

PermGroup to_perm_group(GroupTable const &g, Subgroup const &h)
{
  std::vector<Permutation> gens;
  for (ElementId s : h.generators)
    gens.push_back(g.element(s));
  return PermGroup(g.group().degree(), std::move(gens));
}

Bitset conjugate_bitset(GroupTable const &g, Bitset const &h, ElementId c)
{
  Bitset result(g.size());
  h.for_each([&](std::size_t x) {
    result.set(g.conj(static_cast<ElementId>(x), c));
  });
  return result;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(GroupTable const &g)
{
  std::size_t const n = g.size();
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<SubgroupClass> classes;

  // Records the conjugacy class of `k` and returns its canonical
  // representative.
  auto register_class = [&](Subgroup const &k) {
    std::unordered_map<Bitset, ElementId, BitsetHash> conjugator;
    std::vector<Bitset> orbit{k.members};
    conjugator.emplace(k.members, 0);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      ElementId ci = conjugator.at(orbit[i]);
      for (ElementId s : g.generator_ids()) {
        Bitset next = conjugate_bitset(g, orbit[i], s);
        if (!conjugator.count(next)) {
          conjugator.emplace(next, g.mul(ci, s));
          orbit.push_back(std::move(next));
        }
      }
    }
    auto const &best = *std::min_element(orbit.begin(), orbit.end());
    ElementId c = conjugator.at(best);
    Subgroup rep{best, {}, {}};
    for (ElementId s : k.generators)
      rep.generators.push_back(g.conj(s, c));
    best.for_each(
      [&](std::size_t x) { rep.elements.push_back(static_cast<ElementId>(x)); });
    for (auto &b : orbit)
      seen.insert(std::move(b));
    classes.push_back(SubgroupClass{std::move(rep), orbit.size()});
  };

  register_class(trivial_subgroup(g));
  for (std::size_t idx = 0; idx < classes.size(); ++idx) {
    Subgroup const h = classes[idx].representative;
    Bitset covered(n);
    for (ElementId x = 0; x < n; ++x) {
      if (h.contains(x) || covered.test(x))
        continue;
      for (ElementId y : h.elements)
        covered.set(g.mul(y, x));
      Subgroup k = h;
      k.generators.push_back(x);
      k.members.set(x);
      k.elements.push_back(x);
      close_under(g, k);
      if (!seen.count(k.members))
        register_class(k);
    }
  }

  std::sort(classes.begin(), classes.end(), [](auto const &a, auto const &b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    if (a.class_length != b.class_length)
      return a.class_length < b.class_length;
    return a.representative.members < b.representative.members;
  });
  return classes;
}

std::vector<ElementClass> internal_classes(GroupTable const &g,
                                           Subgroup const &h)
{
  std::unordered_set<ElementId> seen;
  std::vector<ElementClass> result;
  for (ElementId x : h.elements) {
    if (seen.count(x))
      continue;
    std::vector<ElementId> orbit{x};
    seen.insert(x);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementId s : h.generators) {
        ElementId y = g.conj(orbit[i], s);
        if (seen.insert(y).second)
          orbit.push_back(y);
      }
    result.push_back(ElementClass{x, orbit.size()});
  }
  // h.elements is ascending, so each class is found at its smallest member.
  return result;
}

Subgroup derived_subgroup(GroupTable const &g, Subgroup const &h)
{
  std::vector<ElementId> commutators;
  for (ElementId a : h.generators)
    for (ElementId b : h.generators) {
      ElementId c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != 0)
        commutators.push_back(c);
    }
  auto elements = normal_closure(g, commutators, h.generators);
  Subgroup d{Bitset(g.size()), std::move(elements), {}};
  for (ElementId x : d.elements)
    d.members.set(x);
  normalize(d);
  // generators are not tracked for derived subgroups; rebuild a small set
  Subgroup rebuilt = trivial_subgroup(g);
  for (ElementId x : d.elements)
    if (!rebuilt.members.test(x)) {
      rebuilt.generators.push_back(x);
      close_under(g, rebuilt);
    }
  d.generators = std::move(rebuilt.generators);
  return d;
}

bool LinearCharacter::is_trivial() const
{
  return std::all_of(exponents.begin(), exponents.end(),
                     [](unsigned e) { return e == 0; });
}

std::vector<LinearCharacter> linear_characters(GroupTable const &g,
                                               Subgroup const &h)
{ return linear_characters(g, h, internal_classes(g, h)); }

std::vector<LinearCharacter>
linear_characters(GroupTable const &g, Subgroup const &h,
                  std::vector<ElementClass> const &classes)
{
  Subgroup const d = derived_subgroup(g, h);

  // Abelian quotient A = H/[H,H]: coset labels and representatives.
  std::unordered_map<ElementId, std::size_t> label;
  std::vector<ElementId> rep;
  for (ElementId x : h.elements) {
    if (label.count(x))
      continue;
    for (ElementId y : d.elements)
      label.emplace(g.mul(y, x), rep.size());
    rep.push_back(x);
  }
  std::size_t const a = rep.size();
  auto a_mul = [&](std::size_t i, std::size_t j) {
    return label.at(g.mul(rep[i], rep[j]));
  };

  unsigned exponent = 1;
  for (std::size_t i = 0; i < a; ++i) {
    unsigned ord = 1;
    for (std::size_t x = i; x != 0; x = a_mul(x, i))
      ++ord;
    exponent = std::lcm(exponent, ord);
  }

  // Extend characters along A_0 < A_1 < ... where A_{i+1} = <A_i, t_i>.
  constexpr unsigned undefined = static_cast<unsigned>(-1);
  std::vector<std::size_t> members{0};
  std::vector<bool> in_members(a, false);
  in_members[0] = true;
  std::vector<std::vector<unsigned>> chars{std::vector<unsigned>(a, undefined)};
  chars[0][0] = 0;

  for (ElementId s : h.generators) {
    std::size_t t = label.at(s);
    if (in_members[t])
      continue;
    unsigned m = 1;
    std::size_t tm = t;
    while (!in_members[tm]) {
      tm = a_mul(tm, t);
      ++m;
    }
    std::vector<std::size_t> grown;
    std::vector<std::size_t> power{0};
    for (unsigned k = 1; k < m; ++k)
      power.push_back(a_mul(power.back(), t));
    for (unsigned k = 0; k < m; ++k)
      for (std::size_t b : members)
        grown.push_back(a_mul(b, power[k]));

    std::vector<std::vector<unsigned>> extended;
    for (auto const &chi : chars) {
      unsigned c = chi[tm];
      if (c % m != 0)
        throw InvariantError("linear character extension is not solvable");
      for (unsigned j = 0; j < m; ++j) {
        unsigned mu = (c / m + j * (exponent / m)) % exponent;
        std::vector<unsigned> values(a, undefined);
        for (unsigned k = 0; k < m; ++k)
          for (std::size_t b : members)
            values[a_mul(b, power[k])] = (chi[b] + k * mu) % exponent;
        extended.push_back(std::move(values));
      }
    }
    chars = std::move(extended);
    members = std::move(grown);
    for (std::size_t x : members)
      in_members[x] = true;
  }
  if (members.size() != a || chars.size() != a)
    throw InvariantError("abelianization dual has wrong size");

  std::vector<LinearCharacter> result;
  for (auto const &chi : chars) {
    LinearCharacter lambda{exponent, {}};
    for (auto const &c : classes)
      lambda.exponents.push_back(chi[label.at(c.representative)]);
    result.push_back(std::move(lambda));
  }
  return result;
}

} // namespace wam
