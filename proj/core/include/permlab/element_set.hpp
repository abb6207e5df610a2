#pragma once

#include <cstdint>
#include <vector>

namespace permlab {

/// Fixed-width bitset over the element indices of one parent group.
/// Subgroup membership, intersection and containment are the inner loop of
/// the whole lattice machinery, so they stay word operations.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(int size_bits)
      : bits_(size_bits), words_((size_bits + 63) / 64, 0) {}

  int universe_size() const { return bits_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const;
  bool empty() const;

  bool operator==(const ElementSet&) const = default;

  bool subset_of(const ElementSet& o) const;
  bool intersects(const ElementSet& o) const;

  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// -1 when no set bit at or after `from`.
  int next(int from) const;
  std::vector<int> to_indices() const;

  /// Calls f(i) for each set bit, ascending.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int b = __builtin_ctzll(word);
        f(static_cast<int>(w * 64 + b));
        word &= word - 1;
      }
    }
  }

  /// Canonical order on equal-universe sets: compare as ascending index
  /// sequences; for equal cardinality this is the order used to pick all
  /// "canonically first" witnesses.
  static bool lex_less(const ElementSet& a, const ElementSet& b);

  std::uint64_t hash() const;

private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace permlab
