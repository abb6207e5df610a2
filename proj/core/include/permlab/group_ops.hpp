#pragma once

#include <vector>

#include "permlab/group.hpp"

namespace permlab {

/// {hk : h in H, k in K} as a bitset. Parents must be the same group.
ElementSet set_product(const SubgroupRef& h, const SubgroupRef& k);
ElementSet set_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

/// True iff HK = KH as sets (equivalently, HK is a subgroup).
bool permutes(const SubgroupRef& h, const SubgroupRef& k);

/// H^g = {g^-1 h g}. g must lie in the parent.
SubgroupRef conjugate_subgroup(const SubgroupRef& h, const Perm& g);
SubgroupRef conjugate_subgroup(const SubgroupRef& h, int g_index);
ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, int g_index);

SubgroupRef normalizer(const FiniteGroup& g, const SubgroupRef& h);
SubgroupRef centralizer(const FiniteGroup& g, const ElementSet& s);
SubgroupRef center(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const SubgroupRef& h);

/// Largest normal subgroup of g inside m: the intersection of all conjugates.
SubgroupRef core_of(const FiniteGroup& g, const SubgroupRef& m);

/// ⟨x^G⟩ for all x in seed.
SubgroupRef normal_closure(const FiniteGroup& g, const ElementSet& seed);
SubgroupRef normal_closure(const FiniteGroup& g, int x);

/// ⟨[a,b] : a in A, b in B⟩
SubgroupRef commutator_subgroup(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

SubgroupRef join(const SubgroupRef& a, const SubgroupRef& b);
SubgroupRef intersection(const SubgroupRef& a, const SubgroupRef& b);
SubgroupRef cyclic_subgroup(const FiniteGroup& g, int x);

/// G/N via the action of G on the right cosets of N, together with the
/// epimorphism. The quotient's elements are canonically re-sorted, so use
/// image_of/coset_of rather than assuming any index correspondence.
struct Quotient {
  FiniteGroup group;           // permutation group of degree |G:N|
  std::vector<int> coset_of;   // parent element index -> coset index (identity coset = 0)
  std::vector<int> image_of;   // parent element index -> element index in `group`
  const FiniteGroup* parent = nullptr;
  ElementSet kernel;           // = N

  SubgroupRef push_forward(const SubgroupRef& h) const; // HN/N
  SubgroupRef preimage(const SubgroupRef& hbar) const;
};

/// Throws std::invalid_argument when N is not normal in g.
Quotient quotient_group(const FiniteGroup& g, const SubgroupRef& n);

} // namespace permlab
