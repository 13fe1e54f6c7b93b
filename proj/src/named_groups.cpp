#include "wam/named_groups.hpp"

#include <algorithm>
#include <limits>

#include "wam/errors.hpp"

namespace wam {

namespace {

using Poly = std::vector<unsigned>; // coefficients, lowest degree first

Poly decode(unsigned a, unsigned p, unsigned k)
{
  Poly result(k, 0);
  for (unsigned i = 0; i < k; ++i, a /= p)
    result[i] = a % p;
  return result;
}

unsigned encode(Poly const &c, unsigned p)
{
  unsigned result = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    result = result * p + c[i];
  return result;
}

// Remainder of `a` modulo the monic polynomial `m`.
Poly poly_mod(Poly a, Poly const &m, unsigned p)
{
  std::size_t const dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    unsigned c = a[i] % p;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dm; ++j)
      a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool divides(Poly const &m, Poly const &f, unsigned p)
{
  Poly r = poly_mod(f, m, p);
  return std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; });
}

// Monic polynomial of degree d with lower coefficients given by `code`.
Poly monic(unsigned code, unsigned p, unsigned d)
{
  Poly result = decode(code, p, d);
  result.push_back(1);
  return result;
}

unsigned ipow(unsigned b, unsigned e)
{
  unsigned r = 1;
  while (e--)
    r *= b;
  return r;
}

Poly find_irreducible(unsigned p, unsigned k)
{
  for (unsigned code = 0; code < ipow(p, k); ++code) {
    Poly f = monic(code, p, k);
    bool irreducible = true;
    for (unsigned d = 1; irreducible && 2 * d <= k; ++d)
      for (unsigned c = 0; c < ipow(p, d); ++c)
        if (divides(monic(c, p, d), f, p)) {
          irreducible = false;
          break;
        }
    if (irreducible)
      return f;
  }
  throw InvariantError("no irreducible polynomial found");
}

} // namespace

unsigned prime_power_base(unsigned long long q)
{
  if (q < 2)
    return 0;
  unsigned long long p = 2;
  while (p * p <= q && q % p != 0)
    ++p;
  if (q % p != 0)
    p = q; // q is prime
  while (q % p == 0)
    q /= p;
  return q == 1 ? static_cast<unsigned>(p) : 0;
}

GaloisField::GaloisField(unsigned q)
: q_(q)
{
  p_ = prime_power_base(q);
  if (p_ == 0)
    throw InputError("field order " + std::to_string(q) +
                     " is not a prime power");
  if (q > 1024)
    throw InputError("field order " + std::to_string(q) + " is too large");
  k_ = 0;
  for (unsigned t = q; t > 1; t /= p_)
    ++k_;

  Poly modulus = find_irreducible(p_, k_);
  add_.resize(q * q);
  mul_.resize(q * q);
  for (unsigned a = 0; a < q; ++a) {
    Poly pa = decode(a, p_, k_);
    for (unsigned b = 0; b < q; ++b) {
      Poly pb = decode(b, p_, k_);
      Poly sum(k_);
      for (unsigned i = 0; i < k_; ++i)
        sum[i] = (pa[i] + pb[i]) % p_;
      add_[a * q + b] = encode(sum, p_);
      Poly prod(2 * k_, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
      mul_[a * q + b] = encode(poly_mod(prod, modulus, p_), p_);
    }
  }

  for (unsigned g = 1; g < q; ++g) {
    unsigned x = g, ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

unsigned GaloisField::neg(unsigned a) const
{
  for (unsigned b = 0; b < q_; ++b)
    if (add(a, b) == 0)
      return b;
  throw InvariantError("field element without negative");
}

unsigned GaloisField::inv(unsigned a) const
{
  if (a == 0)
    throw InputError("division by zero in GF(q)");
  for (unsigned b = 1; b < q_; ++b)
    if (mul(a, b) == 1)
      return b;
  throw InvariantError("field element without inverse");
}

unsigned GaloisField::pow(unsigned a, unsigned e) const
{
  unsigned r = 1;
  while (e--)
    r = mul(r, a);
  return r;
}

namespace {

using Matrix = std::vector<std::vector<unsigned>>;

Permutation matrix_action(GaloisField const &f, Matrix const &m)
{
  std::size_t const n = m.size();
  unsigned const q = f.order();
  unsigned points = ipow(q, static_cast<unsigned>(n)) - 1;
  std::vector<Point> images(points);
  for (unsigned code = 1; code <= points; ++code) {
    std::vector<unsigned> v(n);
    for (std::size_t i = 0, c = code; i < n; ++i, c /= q)
      v[i] = static_cast<unsigned>(c % q);
    // row vector times matrix
    unsigned image = 0;
    for (std::size_t j = n; j-- > 0;) {
      unsigned s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s = f.add(s, f.mul(v[i], m[i][j]));
      image = image * q + s;
    }
    images[code - 1] = image - 1;
  }
  return Permutation(std::move(images));
}

Matrix identity_matrix(std::size_t n)
{
  Matrix m(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

PermGroup linear_group(unsigned n, unsigned q, bool special)
{
  GaloisField f(q);
  std::vector<Permutation> gens;
  // Transvections I + a E_ij over an additive basis of GF(q) generate SL.
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j)
        continue;
      for (unsigned t = 0; t < f.degree(); ++t) {
        Matrix m = identity_matrix(n);
        m[i][j] = f.pow(f.primitive_element(), t);
        gens.push_back(matrix_action(f, m));
      }
    }
  if (!special && q > 2) {
    Matrix m = identity_matrix(n);
    m[0][0] = f.primitive_element();
    gens.push_back(matrix_action(f, m));
  }
  return PermGroup(ipow(q, n) - 1, std::move(gens));
}

// M10 = PSL(2,9) extended by x -> w * x^3 (w primitive) on the projective
// line over GF(9); point 9 is infinity.
PermGroup mathieu10()
{
  GaloisField f(9);
  unsigned const inf = 9;
  unsigned const w = f.primitive_element();
  auto make = [&](auto &&map) {
    std::vector<Point> images(10);
    for (unsigned x = 0; x <= inf; ++x)
      images[x] = map(x);
    return Permutation(std::move(images));
  };
  auto translate = make([&](unsigned x) { return x == inf ? inf : f.add(x, 1); });
  auto scale = make([&](unsigned x) {
    return x == inf ? inf : f.mul(f.mul(w, w), x);
  });
  auto invert = make([&](unsigned x) {
    if (x == inf)
      return 0u;
    if (x == 0)
      return inf;
    return f.neg(f.inv(x));
  });
  auto twist = make([&](unsigned x) {
    return x == inf ? inf : f.mul(w, f.pow(x, 3));
  });
  return PermGroup(10, {translate, scale, invert, twist});
}

std::uint64_t checked_order(long double order, std::size_t size_cap,
                            std::string const &what)
{
  if (order > static_cast<long double>(size_cap))
    throw ResourceCapError(what + " has order above size cap " +
                           std::to_string(size_cap));
  return static_cast<std::uint64_t>(order);
}

void expect_args(std::string const &name, std::vector<long long> const &args,
                 std::size_t count)
{
  if (args.size() != count)
    throw InputError(name + " expects " + std::to_string(count) +
                     " argument(s), got " + std::to_string(args.size()));
}

} // namespace

PermGroup construct_named(std::string const &name,
                          std::vector<long long> const &args,
                          std::size_t size_cap)
{
  std::string const what = name;
  std::uint64_t expected = 0;
  PermGroup result(1);

  if (name == "Sym" || name == "Alt") {
    expect_args(name, args, 1);
    long long n = args[0];
    if (n < 1)
      throw InputError(name + " needs n >= 1");
    long double order = 1;
    for (long long i = 2; i <= n; ++i)
      order *= static_cast<long double>(i);
    if (name == "Alt" && n >= 2)
      order /= 2;
    expected = checked_order(order, size_cap, what);
    std::vector<Permutation> gens;
    if (name == "Sym" && n >= 2) {
      gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
      std::vector<Point> cycle(n);
      for (long long i = 0; i < n; ++i)
        cycle[i] = static_cast<Point>(i);
      gens.push_back(Permutation::from_cycles(n, {cycle}));
    } else if (name == "Alt") {
      for (long long i = 2; i < n; ++i)
        gens.push_back(
          Permutation::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
    }
    result = PermGroup(n, std::move(gens));
  } else if (name == "Cyclic") {
    expect_args(name, args, 1);
    long long n = args[0];
    if (n < 1)
      throw InputError("Cyclic needs n >= 1");
    expected = checked_order(n, size_cap, what);
    std::vector<Point> cycle(n);
    for (long long i = 0; i < n; ++i)
      cycle[i] = static_cast<Point>(i);
    result = PermGroup(n, {Permutation::from_cycles(n, {cycle})});
  } else if (name == "Dihedral") {
    expect_args(name, args, 1);
    long long m = args[0];
    if (m < 4 || m % 2 != 0)
      throw InputError("Dihedral(m) needs an even order m >= 4");
    expected = checked_order(m, size_cap, what);
    long long n = m / 2;
    if (n == 2) {
      result = PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                             Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
    } else {
      std::vector<Point> rot(n), refl(n);
      for (long long i = 0; i < n; ++i) {
        rot[i] = static_cast<Point>((i + 1) % n);
        refl[i] = static_cast<Point>((n - i) % n);
      }
      result = PermGroup(n, {Permutation(rot), Permutation(refl)});
    }
  } else if (name == "SL" || name == "GL") {
    expect_args(name, args, 2);
    long long n = args[0], q = args[1];
    if (n != 2 && n != 3)
      throw InputError(name + "(n,q) supports n in {2,3}");
    if (q < 2 || prime_power_base(static_cast<unsigned long long>(q)) == 0)
      throw InputError(name + ": q = " + std::to_string(q) +
                       " is not a prime power");
    long double order = 1;
    long double qn = 1;
    for (long long i = 0; i < n; ++i)
      qn *= q;
    for (long long i = 0, qi = 1; i < n; ++i, qi *= q)
      order *= qn - static_cast<long double>(qi);
    if (name == "SL")
      order /= static_cast<long double>(q - 1);
    expected = checked_order(order, size_cap, what);
    result = linear_group(static_cast<unsigned>(n), static_cast<unsigned>(q),
                          name == "SL");
  } else if (name == "Mathieu") {
    expect_args(name, args, 1);
    if (args[0] != 10)
      throw InputError("only Mathieu(10) is supported");
    expected = checked_order(720, size_cap, what);
    result = mathieu10();
  } else {
    throw InputError("unsupported group descriptor '" + name + "'");
  }

  if (result.order() != expected)
    throw InvariantError(name + " construction has order " +
                         std::to_string(result.order()) + ", expected " +
                         std::to_string(expected));
  return result;
}

} // namespace wam
