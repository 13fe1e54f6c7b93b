#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

Perm compose(Perm const &a, Perm const &b)
{
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = b[a[i]];
  return c;
}

Perm inverse(Perm const &a)
{
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[a[i]] = static_cast<unsigned>(i);
  return c;
}

Perm to_perm(wam::Permutation const &p)
{
  return Perm(p.images().begin(), p.images().end());
}

std::set<Perm> closure(std::vector<Perm> const &gens, std::size_t degree)
{
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::deque<Perm> todo{id};
  while (!todo.empty()) {
    Perm x = todo.front();
    todo.pop_front();
    for (auto const &g : gens) {
      Perm y = compose(x, g);
      if (seen.insert(y).second)
        todo.push_back(y);
    }
  }
  return seen;
}

std::size_t count_sl2(unsigned p)
{
  std::size_t n = 0;
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c)
        for (unsigned d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p == 1)
            ++n;
  return n;
}

std::size_t count_gl2(unsigned p)
{
  std::size_t n = 0;
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c)
        for (unsigned d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p != 0)
            ++n;
  return n;
}

std::size_t count_even_permutations(unsigned n)
{
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::size_t even = 0;
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        inversions += p[i] > p[j];
    even += inversions % 2 == 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return even;
}

std::vector<std::size_t> class_sizes(std::set<Perm> const &group)
{
  std::set<Perm> done;
  std::vector<std::size_t> sizes;
  for (auto const &x : group) {
    if (done.count(x))
      continue;
    std::set<Perm> cls;
    for (auto const &g : group)
      cls.insert(compose(compose(inverse(g), x), g));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::set<Perm> derived(std::set<Perm> const &group)
{
  std::set<Perm> comms;
  for (auto const &a : group)
    for (auto const &b : group)
      comms.insert(compose(compose(compose(inverse(a), inverse(b)), a), b));
  return closure(std::vector<Perm>(comms.begin(), comms.end()),
                 group.begin()->size());
}

std::set<Perm> center(std::set<Perm> const &group)
{
  std::set<Perm> z;
  for (auto const &a : group)
    if (std::all_of(group.begin(), group.end(), [&](Perm const &b) {
          return compose(a, b) == compose(b, a);
        }))
      z.insert(a);
  return z;
}

namespace {

// Group elements as indices with a full multiplication table.
struct Indexed
{
  std::vector<Perm> elements;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv;
  std::size_t identity = 0;

  explicit Indexed(std::set<Perm> const &group)
  : elements(group.begin(), group.end())
  {
    std::map<Perm, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
      index[elements[i]] = i;
    std::size_t const n = elements.size();
    mul.assign(n, std::vector<std::size_t>(n));
    inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        mul[i][j] = index.at(compose(elements[i], elements[j]));
      inv[i] = index.at(inverse(elements[i]));
      if (mul[i][i] == i)
        identity = i;
    }
  }
};

using Members = std::vector<bool>;

Members close(Indexed const &g, Members members,
              std::vector<std::size_t> const &gens)
{
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i])
      todo.push_back(i);
  while (!todo.empty()) {
    std::size_t x = todo.back();
    todo.pop_back();
    for (std::size_t s : gens) {
      std::size_t y = g.mul[x][s];
      if (!members[y]) {
        members[y] = true;
        todo.push_back(y);
      }
    }
  }
  return members;
}

SubgroupCensus census(Indexed const &g, std::set<Members> const &all)
{
  SubgroupCensus c;
  c.total = all.size();
  std::set<Members> done;
  for (auto const &h : all) {
    if (done.count(h))
      continue;
    std::set<Members> orbit;
    for (std::size_t t = 0; t < g.elements.size(); ++t) {
      Members conj(h.size(), false);
      for (std::size_t x = 0; x < h.size(); ++x)
        if (h[x])
          conj[g.mul[g.mul[g.inv[t]][x]][t]] = true;
      orbit.insert(conj);
    }
    done.insert(orbit.begin(), orbit.end());
    c.classes.emplace_back(
      static_cast<std::size_t>(std::count(h.begin(), h.end(), true)),
      orbit.size());
  }
  std::sort(c.classes.begin(), c.classes.end());
  return c;
}

} // namespace

SubgroupCensus subgroups_by_subsets(std::set<Perm> const &group)
{
  Indexed g(group);
  std::size_t const n = g.elements.size();
  std::set<Members> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!((mask >> g.identity) & 1))
      continue;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      for (std::size_t j = 0; j < n && closed; ++j)
        if (((mask >> i) & 1) && ((mask >> j) & 1) &&
            !((mask >> g.mul[i][j]) & 1))
          closed = false;
    if (!closed)
      continue;
    Members m(n);
    for (std::size_t i = 0; i < n; ++i)
      m[i] = (mask >> i) & 1;
    all.insert(m);
  }
  return census(g, all);
}

SubgroupCensus subgroups_by_closure(std::set<Perm> const &group)
{
  Indexed g(group);
  std::size_t const n = g.elements.size();
  Members trivial(n, false);
  trivial[g.identity] = true;
  std::map<Members, std::vector<std::size_t>> all{{trivial, {}}};
  std::deque<Members> todo{trivial};
  while (!todo.empty()) {
    Members h = todo.front();
    todo.pop_front();
    std::vector<std::size_t> gens = all.at(h);
    for (std::size_t x = 0; x < n; ++x) {
      if (h[x])
        continue;
      auto more = gens;
      more.push_back(x);
      Members k = h;
      k[x] = true;
      k = close(g, k, more);
      if (all.emplace(k, more).second)
        todo.push_back(k);
    }
  }
  std::set<Members> keys;
  for (auto const &[k, v] : all)
    keys.insert(k);
  return census(g, keys);
}

std::size_t abelianization_order(std::set<Perm> const &group)
{
  return group.size() / derived(group).size();
}

namespace {

// Points of the box [0, top] in an order where every point follows all
// points below it.
void box_points(Vec const &top, std::function<void(Vec const &)> const &f)
{
  Vec x(top.size(), 0);
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == top[i]) {
      x[i] = 0;
      ++i;
    }
    if (i == x.size())
      return;
    ++x[i];
  }
}

bool leq(Vec const &a, Vec const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Vec minus(Vec a, Vec const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}

} // namespace

std::set<Vec> hilbert_basis(std::vector<Vec> const &gens)
{
  std::set<Vec> s;
  for (auto const &g : gens)
    if (std::any_of(g.begin(), g.end(), [](int x) { return x != 0; }))
      s.insert(g);
  std::set<Vec> basis;
  for (auto const &v : s) {
    std::set<Vec> reachable;
    box_points(v, [&](Vec const &x) {
      bool zero = std::all_of(x.begin(), x.end(), [](int c) { return c == 0; });
      if (zero) {
        reachable.insert(x);
        return;
      }
      for (auto const &g : s)
        if (leq(g, x) && reachable.count(minus(x, g))) {
          reachable.insert(x);
          return;
        }
    });
    bool reducible = false;
    for (auto const &g : s)
      if (g != v && leq(g, v) && reachable.count(minus(v, g)))
        reducible = true;
    if (!reducible)
      basis.insert(v);
  }
  return basis;
}

std::set<Vec> hol_basis(Vec const &d, int bound)
{
  auto in_hol = [&](Vec const &a) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += static_cast<long>(d[i]) * a[i];
    return s >= 0;
  };
  std::set<Vec> basis;
  Vec top(d.size(), bound);
  box_points(top, [&](Vec const &a) {
    bool zero = std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
    if (zero || !in_hol(a))
      return;
    bool reducible = false;
    box_points(a, [&](Vec const &b) {
      if (reducible || b == a)
        return;
      bool bzero = std::all_of(b.begin(), b.end(), [](int c) { return c == 0; });
      if (!bzero && in_hol(b) && in_hol(minus(a, b)))
        reducible = true;
    });
    if (!reducible)
      basis.insert(a);
  });
  return basis;
}

bool unique_factorization(std::vector<Vec> const &basis, int max_coeff)
{
  if (basis.empty())
    return false;
  std::map<Vec, Vec> first;
  Vec top(basis.size(), max_coeff);
  bool unique = true;
  box_points(top, [&](Vec const &c) {
    if (!unique)
      return;
    Vec sum(basis[0].size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < sum.size(); ++j)
        sum[j] += c[i] * basis[i][j];
    auto [it, fresh] = first.emplace(sum, c);
    if (!fresh)
      unique = false;
  });
  return unique;
}

std::optional<BamHit> bam_search(std::vector<Vec> const &basis, int bound)
{
  std::size_t const r = basis.at(0).size();
  for (std::size_t k = 0; k < r; ++k) {
    Vec psi(r, -bound);
    while (true) {
      bool ok = true;
      bool zero = std::all_of(psi.begin(), psi.end(), [](int c) { return c == 0; });
      bool unit = true;
      for (std::size_t i = 0; i < r; ++i)
        unit = unit && psi[i] == (i == k ? 1 : 0);
      if (zero || unit)
        ok = false;
      for (std::size_t t = 0; t < basis.size() && ok; ++t) {
        long s = 0;
        for (std::size_t i = 0; i < r; ++i)
          s += static_cast<long>(basis[t][i]) * psi[i];
        ok = s >= 0 && s <= basis[t][k];
      }
      if (ok)
        return BamHit{k, psi}; // the odometer below runs in lex order
      std::size_t i = r;
      while (i > 0 && psi[i - 1] == bound) {
        psi[i - 1] = -bound;
        --i;
      }
      if (i == 0)
        break;
      ++psi[i - 1];
    }
  }
  return std::nullopt;
}

std::size_t rank(std::vector<Vec> const &rows)
{
  if (rows.empty())
    return 0;
  std::vector<std::vector<long long>> m;
  for (auto const &r : rows)
    m.emplace_back(r.begin(), r.end());
  std::size_t const cols = m[0].size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
    std::size_t p = rk;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[rk]);
    for (std::size_t i = rk + 1; i < m.size(); ++i) {
      long long a = m[rk][c], b = m[i][c];
      long long g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = a * m[i][j] - b * m[rk][j];
        g = std::gcd(g, std::llabs(m[i][j]));
      }
      if (g > 1)
        for (auto &x : m[i])
          x /= g;
    }
    ++rk;
  }
  return rk;
}

Vec to_vec(Eigen::VectorXi const &v)
{
  return Vec(v.data(), v.data() + v.size());
}

std::set<Vec> to_set(std::vector<Eigen::VectorXi> const &vs)
{
  std::set<Vec> s;
  for (auto const &v : vs)
    s.insert(to_vec(v));
  return s;
}

} // namespace oracle
