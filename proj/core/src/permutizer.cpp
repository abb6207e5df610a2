#include "permlab/permutizer.hpp"

#include <stdexcept>

#include "permlab/classify.hpp"

namespace permlab {

namespace {

/// ⟨x⟩H = H⟨x⟩ as element sets.
bool cyclic_permutes(const FiniteGroup& g, int x, const ElementSet& h,
                     const std::vector<int>& h_idx) {
  const ElementSet& cx = g.cyclic_set(x);
  ElementSet left(g.order()), right(g.order());
  cx.for_each([&](int c) {
    for (int hh : h_idx) {
      left.set(g.mul(c, hh));
      right.set(g.mul(hh, c));
    }
  });
  return left == right;
}

} // namespace

SubgroupRef permutizer(const SubgroupRef& ambient, const SubgroupRef& h) {
  if (&ambient.parent() != &h.parent()) throw std::invalid_argument("parent group mismatch");
  if (!h.members().subset_of(ambient.members()))
    throw std::invalid_argument("permutizer requires H <= U");
  const FiniteGroup& g = h.parent();
  auto h_idx = h.element_indices();
  ElementSet collected = h.members(); // every h in H trivially permutes with H
  ambient.members().for_each([&](int x) {
    if (!collected.test(x) && cyclic_permutes(g, x, h.members(), h_idx)) collected.set(x);
  });
  return SubgroupRef::generated_by(g, collected);
}

SubgroupRef permutizer(const FiniteGroup& g, const SubgroupRef& h) {
  return permutizer(SubgroupRef::full(g), h);
}

bool is_permuteral(const FiniteGroup& g, const SubgroupRef& h) {
  return permutizer(g, h).is_full();
}

StronglyPermuteralResult is_strongly_permuteral(const SubgroupLattice& lattice, int node) {
  StronglyPermuteralResult result;
  for (int u : lattice.overgroups(node)) {
    SubgroupRef p = permutizer(lattice.node(u), lattice.node(node));
    if (p.order() != lattice.node(u).order()) {
      result.value = false;
      result.failing_node = u;
      result.failing_permutizer = std::move(p);
      return result;
    }
  }
  result.value = true;
  return result;
}

PSubnormalResult is_p_subnormal(const SubgroupLattice& lattice, int node, int top_node) {
  if (top_node < 0) top_node = lattice.top();
  if (!lattice.node(node).members().subset_of(lattice.node(top_node).members()))
    throw std::invalid_argument("chain search requires H <= top");
  PSubnormalResult result;
  std::vector<int> chain = lattice.prime_chain(node, top_node);
  if (chain.empty()) {
    result.value = false;
    return result;
  }
  result.value = true;
  ChainWitness witness;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    witness.terms.push_back(lattice.node(chain[i]));
    if (i + 1 < chain.size())
      witness.indices.push_back(lattice.node(chain[i + 1]).order() /
                                lattice.node(chain[i]).order());
  }
  result.witness = std::move(witness);
  return result;
}

bool is_w_supersoluble(const SubgroupLattice& lattice) {
  for (int p : prime_divisors(lattice.group().order())) {
    std::vector<int> syl = lattice.sylow(p);
    if (syl.empty()) return false; // unreachable: p divides |G|
    if (!lattice.prime_reachable(syl.front(), lattice.top())) return false;
  }
  return true;
}

bool is_w_supersoluble(const FiniteGroup& g) {
  return is_w_supersoluble(SubgroupLattice::build(g));
}

namespace {

ElementSet join_with_conjugate(const FiniteGroup& g, const SubgroupRef& h, int x) {
  std::vector<int> gens = h.generator_indices();
  for (int hg : h.generator_indices()) gens.push_back(g.conj(hg, x));
  return closure_in_group(g, gens);
}

} // namespace

bool is_pronormal(const FiniteGroup& g, const SubgroupRef& h) {
  for (int x = 0; x < g.order(); ++x) {
    ElementSet hx = conjugate_set(g, h.members(), x);
    if (hx == h.members()) continue;
    ElementSet join = join_with_conjugate(g, h, x);
    bool conjugate_in_join = false;
    for (int j = join.next(0); j >= 0; j = join.next(j + 1)) {
      if (conjugate_set(g, h.members(), j) == hx) {
        conjugate_in_join = true;
        break;
      }
    }
    if (!conjugate_in_join) return false;
  }
  return true;
}

bool is_abnormal(const FiniteGroup& g, const SubgroupRef& h) {
  for (int x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    if (!join_with_conjugate(g, h, x).test(x)) return false;
  }
  return true;
}

std::vector<int> carter_subgroups(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  std::vector<int> out;
  for (int i = 0; i < lattice.size(); ++i) {
    const SubgroupRef& h = lattice.node(i);
    if (!is_nilpotent_subgroup(g, h.members())) continue;
    if (normalizer(g, h).order() == h.order()) out.push_back(i);
  }
  return out;
}

} // namespace permlab
