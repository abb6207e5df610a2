#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace permlab {

/// A permutation of {0..degree-1}, stored as its image array.
///
/// Composition convention is left-to-right everywhere in this library:
/// a.then(b) first applies a, then b, i.e. (a.then(b))(i) = b(a(i)).
/// Cycle text I/O is 1-based; the in-memory points are 0-based.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);

  static Perm identity(int degree);
  /// cycles: list of cycles, each a list of 0-based points.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[point]; }
  int operator()(int point) const { return img_[point]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  Perm then(const Perm& next) const;
  Perm inverse() const;
  bool is_identity() const;
  /// order of the permutation = lcm of its cycle lengths
  long order() const;
  std::vector<std::vector<int>> cycles() const; // nontrivial cycles, canonical

  /// Canonical total order: lexicographic on image arrays. The identity is
  /// the minimum, so sorted element lists always start with it.
  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

private:
  std::vector<std::uint16_t> img_;
};

/// Applies a, then b. Degrees must match.
Perm compose(const Perm& a, const Perm& b);

/// g^-1 * h * g (left-to-right), the conjugate of h by g.
Perm conjugate(const Perm& h, const Perm& g);

/// "(1 2 3)(4 5)" with 1-based points; identity renders as "()".
std::string format_cycles(const Perm& p);

} // namespace permlab
