#include "wam/permutation.hpp"

#include <numeric>
#include <sstream>

#include "wam/errors.hpp"

namespace wam {

Permutation::Permutation(std::size_t degree)
: images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InputError("permutation images do not form a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(
  std::size_t degree, std::vector<std::vector<Point>> const &cycles)
{
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InputError("cycle point " + std::to_string(x + 1) +
                         " exceeds degree " + std::to_string(degree));
      if (used[x])
        throw InputError("repeated point " + std::to_string(x + 1) +
                         " in cycle notation");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return result;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation result(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

std::size_t Permutation::order() const
{
  std::vector<bool> seen(degree(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const
{
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out << '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first)
        out << ',';
      out << x + 1;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation Permutation::shifted(std::size_t offset,
                                 std::size_t new_degree) const
{
  Permutation result(new_degree);
  for (std::size_t i = 0; i < degree(); ++i)
    result.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return result;
}

Permutation operator*(Permutation const &a, Permutation const &b)
{
  Permutation result;
  result.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i)
    result.images_[i] = b.images_[a.images_[i]];
  return result;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace wam
