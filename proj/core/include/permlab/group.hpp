#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/common.hpp"
#include "permlab/element_set.hpp"
#include "permlab/perm.hpp"

namespace permlab {

/// A fully enumerated permutation group on a fixed degree.
///
/// Elements are stored deduplicated and canonically sorted (lexicographic on
/// image arrays), which puts the identity at index 0 and makes every
/// set-valued result of the library deterministic. Instances are immutable
/// after construction and safe to share across threads.
class FiniteGroup {
public:
  /// ⟨gens⟩ by breadth-first closure. Throws CapExceeded when the element
  /// count passes limits.max_order (a wrong group is worse than no group).
  static FiniteGroup closure(int degree, std::vector<Perm> gens, const Limits& limits = {});

  /// Wraps an element list already known to be a group (e.g. a subgroup
  /// reinterpreted as a standalone group). Sorts, verifies closure.
  static FiniteGroup from_elements(int degree, std::vector<Perm> elems,
                                   std::vector<Perm> gens = {});

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }
  const Perm& element(int i) const { return elements_[i]; }

  /// -1 when the permutation is not an element.
  int index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  int mul(int a, int b) const {
    return table_.empty() ? mul_slow(a, b) : table_[static_cast<std::size_t>(a) * order() + b];
  }
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }
  /// [a,b] = a^-1 b^-1 a b
  int comm(int a, int b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  int identity_index() const { return 0; }

  long element_order(int i) const { return elem_order_[i]; }
  /// ⟨x⟩ as a bitset; precomputed, shared, do not mutate.
  const ElementSet& cyclic_set(int i) const { return cyclic_[i]; }

  ElementSet full_set() const;
  ElementSet identity_set() const;

private:
  FiniteGroup() = default;
  void finalize();
  int mul_slow(int a, int b) const;

  int degree_ = 1;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::vector<int> gen_idx_;
  std::vector<int> inv_;
  std::vector<long> elem_order_;
  std::vector<ElementSet> cyclic_;
  std::vector<std::uint16_t> table_; // order*order when order <= kMulTableLimit
};

/// Groups up to this order get a dense multiplication table (2 bytes/entry).
inline constexpr int kMulTableLimit = 2048;

/// A subgroup of a fixed parent, identified by its member bitset. Cheap to
/// copy; the parent must outlive every ref onto it.
class SubgroupRef {
public:
  SubgroupRef() = default;

  /// Verifies the member set is a subgroup (it must equal the closure of its
  /// own greedily extracted generators) and caches order + generators.
  static SubgroupRef from_members(const FiniteGroup& parent, ElementSet members);
  /// ⟨seed⟩ within parent.
  static SubgroupRef generated_by(const FiniteGroup& parent, const ElementSet& seed);
  static SubgroupRef generated_by(const FiniteGroup& parent, const std::vector<int>& gen_indices);
  static SubgroupRef trivial(const FiniteGroup& parent);
  static SubgroupRef full(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  int order() const { return order_; }
  bool contains(int idx) const { return members_.test(idx); }
  bool is_trivial() const { return order_ == 1; }
  bool is_full() const { return order_ == parent_->order(); }
  std::vector<int> element_indices() const { return members_.to_indices(); }
  /// Small generating set, greedily extracted in canonical element order.
  const std::vector<int>& generator_indices() const { return gens_; }

  bool operator==(const SubgroupRef& o) const { return members_ == o.members_; }
  bool subset_of(const SubgroupRef& o) const { return members_.subset_of(o.members_); }

  /// The subgroup as a standalone group on the parent's degree (the natural
  /// action of a subgroup of Sym(n) is faithful as-is).
  FiniteGroup as_group() const;

private:
  SubgroupRef(const FiniteGroup* parent, ElementSet members, std::vector<int> gens);

  const FiniteGroup* parent_ = nullptr;
  ElementSet members_;
  int order_ = 0;
  std::vector<int> gens_;
};

/// Closure of a seed bitset inside the parent (identity always included).
ElementSet closure_in_group(const FiniteGroup& g, const ElementSet& seed);
ElementSet closure_in_group(const FiniteGroup& g, const std::vector<int>& gen_indices);

} // namespace permlab
