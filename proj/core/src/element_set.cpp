#include "permlab/element_set.hpp"

#include <bit>

namespace permlab {

int ElementSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool ElementSet::subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

int ElementSet::next(int from) const {
  if (from >= bits_) return -1;
  std::size_t w = static_cast<std::size_t>(from) >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t(0) << (from & 63));
  while (true) {
    if (word) return static_cast<int>(w * 64 + std::countr_zero(word));
    if (++w >= words_.size()) return -1;
    word = words_[w];
  }
}

std::vector<int> ElementSet::to_indices() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

bool ElementSet::lex_less(const ElementSet& a, const ElementSet& b) {
  // first differing index decides; the set containing it sorts first
  // (list-lexicographic for equal cardinalities)
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return a.words_[i] & low;
    }
  }
  return false;
}

std::uint64_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace permlab
