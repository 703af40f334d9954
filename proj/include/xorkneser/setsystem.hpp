#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xorkneser/bitset.hpp"

namespace xorkneser {

// Universe A_1 ∪ ... ∪ A_ell of ell blocks with n elements each. Element e
// lives in block e / n.
class Layout {
public:
  Layout(int ell, int n, int k);

  int ell() const noexcept { return ell_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t universe_size() const noexcept {
    return static_cast<std::size_t>(ell_) * static_cast<std::size_t>(n_);
  }
  int block_of(std::size_t e) const noexcept { return static_cast<int>(e / n_); }
  std::size_t block_begin(int block) const noexcept {
    return static_cast<std::size_t>(block) * n_;
  }
  std::size_t element(int block, int offset) const noexcept {
    return block_begin(block) + static_cast<std::size_t>(offset);
  }

  friend bool operator==(const Layout &, const Layout &) = default;

private:
  int ell_;
  int n_;
  int k_;
};

// A subset of the universe, intended to meet every block in exactly k
// elements. Conformance is checked by conforms()/verify_family rather than
// at construction so that malformed inputs can be reported.
class TransversalSet {
public:
  TransversalSet() = default;
  explicit TransversalSet(Bitset bits) : bits_(std::move(bits)) {}
  TransversalSet(const Layout &layout, std::span<const std::size_t> elements);
  TransversalSet(const Layout &layout, std::initializer_list<std::size_t> elements)
      : TransversalSet(layout, std::span<const std::size_t>(elements.begin(), elements.size())) {}

  const Bitset &bits() const noexcept { return bits_; }
  std::vector<std::size_t> elements() const { return bits_.indices(); }
  bool contains(std::size_t e) const { return e < bits_.size() && bits_.test(e); }
  std::size_t size() const noexcept { return bits_.count(); }

  bool conforms(const Layout &layout) const;

  friend bool operator==(const TransversalSet &, const TransversalSet &) = default;
  // Lexicographic order on the ascending element lists.
  friend std::strong_ordering operator<=>(const TransversalSet &a, const TransversalSet &b);

private:
  Bitset bits_;
};

// Number of blocks i with s ∩ t ∩ A_i = ∅.
int disjoint_block_count(const TransversalSet &s, const TransversalSet &t, const Layout &layout);

// True iff s and t are disjoint in an odd number of blocks, i.e. adjacent in
// the xor-power of Kneser graphs.
bool xor_adjacent(const TransversalSet &s, const TransversalSet &t, const Layout &layout);

// Distinct transversal sets over one layout, kept in canonical (sorted) order.
class Family {
public:
  explicit Family(Layout layout) : layout_(layout) {}
  Family(Layout layout, std::vector<TransversalSet> members);

  const Layout &layout() const noexcept { return layout_; }
  const std::vector<TransversalSet> &members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const TransversalSet &operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const Family &, const Family &) = default;

private:
  Layout layout_;
  std::vector<TransversalSet> members_;
};

struct Violation {
  enum class Kind { NonUniform, EvenDisjoint };
  Kind kind;
  std::size_t first;
  std::size_t second;
  // Blocks where the pair is disjoint (EvenDisjoint), or the offending
  // member's first non-conforming block (NonUniform, first == second).
  int disjoint_blocks;
};

struct VerifyReport {
  bool valid = true;
  std::optional<Violation> violation;
};

VerifyReport verify_family(const Family &family, unsigned threads = 1);

std::size_t degree(const Family &family, std::size_t element);

// Line-oriented text format: "ell n k" then one member per line.
std::string encode(const Family &family);
Family decode(const std::string &text);

std::string encode_json(const Family &family);
Family decode_json(const std::string &text);

// Accepts either format, dispatching on the first non-space character.
Family decode_any(const std::string &text);

} // namespace xorkneser
