#include "wam/bitset.hpp"

#include <cstdio>

#include "wam/errors.hpp"

namespace wam {

std::string Bitset::to_hex() const
{
  std::string out;
  char buf[17];
  for (auto w : words_) {
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

Bitset Bitset::from_hex(std::size_t bits, std::string const &hex)
{
  Bitset result(bits);
  if (hex.size() != result.words_.size() * 16)
    throw InputError("bitset hex has wrong length");
  for (std::size_t w = 0; w < result.words_.size(); ++w) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < 16; ++i) {
      char c = hex[w * 16 + i];
      int v;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (c >= 'a' && c <= 'f')
        v = c - 'a' + 10;
      else
        throw InputError("bitset hex has invalid digit");
      word = (word << 4) | static_cast<std::uint64_t>(v);
    }
    result.words_[w] = word;
  }
  return result;
}

} // namespace wam
