#ifndef WAM_BITSET_HPP
#define WAM_BITSET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wam {

/// Fixed-size dynamic bitset used as subgroup identity over a group's element
/// enumeration.
class Bitset
{
public:
  Bitset() = default;
  explicit Bitset(std::size_t bits)
  : bits_(bits), words_((bits + 63) / 64, 0)
  {}

  std::size_t size() const { return bits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const
  { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const
  {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(Bitset const &other) const
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  template<typename F>
  void for_each(F &&f) const
  {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<std::uint64_t> const &words() const { return words_; }

  /// Lowercase hex, least significant word first, 16 digits per word.
  std::string to_hex() const;
  static Bitset from_hex(std::size_t bits, std::string const &hex);

  friend bool operator==(Bitset const &, Bitset const &) = default;
  friend std::strong_ordering operator<=>(Bitset const &,
                                          Bitset const &) = default;

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash
{
  std::size_t operator()(Bitset const &b) const noexcept
  {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : b.words())
      h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

} // namespace wam

#endif // WAM_BITSET_HPP
