#pragma once

#include <optional>
#include <vector>

#include "permlab/group_ops.hpp"
#include "permlab/lattice.hpp"

namespace permlab {

/// P_U(H) = ⟨x in U : ⟨x⟩H = H⟨x⟩⟩ for H <= U, as subgroups of one parent.
/// Always contains N_U(H). The ambient defaults to the whole parent group.
SubgroupRef permutizer(const SubgroupRef& ambient, const SubgroupRef& h);
SubgroupRef permutizer(const FiniteGroup& g, const SubgroupRef& h);

/// P_G(H) = G.
bool is_permuteral(const FiniteGroup& g, const SubgroupRef& h);

struct StronglyPermuteralResult {
  bool value = false;
  /// Canonically first intermediate U with P_U(H) != U; -1 when none.
  int failing_node = -1;
  /// P_U(H) for the failing U.
  std::optional<SubgroupRef> failing_permutizer;
};

/// P_U(H) = U for every U with H <= U <= G. Walks intermediates in
/// canonical (ascending) order and short-circuits on the first failure.
StronglyPermuteralResult is_strongly_permuteral(const SubgroupLattice& lattice, int node);

/// A prime-index chain H = terms[0] < ... < terms.back() = top.
struct ChainWitness {
  std::vector<SubgroupRef> terms;
  std::vector<int> indices; // indices[i] = |terms[i+1]| / |terms[i]|, all prime
};

struct PSubnormalResult {
  bool value = false;
  std::optional<ChainWitness> witness; // shortest chain, canonical tie-break
};

/// H joined to `top` by a chain of prime indices (or H = top, empty chain).
PSubnormalResult is_p_subnormal(const SubgroupLattice& lattice, int node, int top_node = -1);

/// Every Sylow subgroup admits a prime-index chain to G (checked on one
/// representative per Sylow class; the property is conjugation-invariant).
bool is_w_supersoluble(const SubgroupLattice& lattice);
bool is_w_supersoluble(const FiniteGroup& g); // builds the lattice ad hoc

/// H and H^x are conjugate inside ⟨H, H^x⟩ for every x (exhaustive sweep).
bool is_pronormal(const FiniteGroup& g, const SubgroupRef& h);
/// x in ⟨H, H^x⟩ for every x.
bool is_abnormal(const FiniteGroup& g, const SubgroupRef& h);

/// Nilpotent self-normalizing nodes, ascending.
std::vector<int> carter_subgroups(const SubgroupLattice& lattice);

} // namespace permlab
