#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace xorkneser {

// Fixed-length bit vector backed by 64-bit words. Unused high bits of the
// last word are always zero.
class Bitset {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<word_type> &words() const noexcept { return words_; }

  bool test(std::size_t i) const {
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }
  void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
  void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word_type w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (word_type w : words_)
      if (w)
        return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  // Number of set bits in [lo, hi).
  std::size_t count_range(std::size_t lo, std::size_t hi) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = lo; i < hi;) {
      const std::size_t w = i / word_bits, off = i % word_bits;
      const std::size_t take = std::min(word_bits - off, hi - i);
      word_type mask = take == word_bits ? ~word_type{0} : ((word_type{1} << take) - 1);
      c += static_cast<std::size_t>(std::popcount((words_[w] >> off) & mask));
      i += take;
    }
    return c;
  }

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= size_)
      return size_;
    std::size_t w = from / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (cur)
        return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size())
        return size_;
      cur = words_[w];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i < size_; i = find_next(i + 1))
      out.push_back(i);
    return out;
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  Bitset &operator^=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] ^= o.words_[i];
    return *this;
  }
  // this &= ~o
  Bitset &subtract(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset &b) { return a ^= b; }

  bool intersects(const Bitset &o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i])
        return true;
    return false;
  }

  friend bool operator==(const Bitset &, const Bitset &) = default;

private:
  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

} // namespace xorkneser
