#pragma once

#include <map>
#include <vector>

#include "permlab/group_ops.hpp"
#include "permlab/lattice.hpp"

namespace permlab {

// Everything here works on a bare FiniteGroup unless it genuinely needs the
// full lattice (only frattini does); quotients and subgroups-as-groups can
// therefore be classified without enumerating their lattices.

SubgroupRef derived_subgroup(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
bool is_soluble(const FiniteGroup& g);   // derived series reaches 1
bool is_nilpotent(const FiniteGroup& g); // lower central series reaches 1
long exponent_of(const FiniteGroup& g);  // lcm of element orders

// Series tests for a subgroup run inside its parent, no standalone rebuild.
bool is_nilpotent_subgroup(const FiniteGroup& g, const ElementSet& members);
bool is_soluble_subgroup(const FiniteGroup& g, const ElementSet& members);
bool is_abelian_subgroup(const FiniteGroup& g, const ElementSet& members);

/// O_p(G), the largest normal p-subgroup.
SubgroupRef p_core(const FiniteGroup& g, int p);
/// F(G) = product of the O_p over p | |G|.
SubgroupRef fitting(const FiniteGroup& g);
/// Intersection of the maximal subgroups.
SubgroupRef frattini(const SubgroupLattice& lattice);
/// Product of the minimal normal subgroups.
SubgroupRef socle(const FiniteGroup& g);

/// Minimal normal subgroups, via normal closures of single elements
/// (every minimal normal subgroup is the closure of any of its non-identity
/// elements). Canonical order.
std::vector<SubgroupRef> minimal_normal_subgroups(const FiniteGroup& g);

/// All normal subgroups, as the join-closure of the single-element normal
/// closures. Lattice-free; the lattice filter is the cross-check.
std::vector<SubgroupRef> normal_subgroups(const FiniteGroup& g);

/// Does the subgroup (given as member set of g) have a normal p-complement?
bool has_normal_p_complement(const FiniteGroup& g, const ElementSet& members, int p);

/// F_p(G): product of all normal p-nilpotent subgroups.
SubgroupRef p_nilpotent_radical(const FiniteGroup& g, int p);

/// One Sylow p-subgroup, found by normalizer climbing; deterministic.
SubgroupRef sylow_subgroup_direct(const FiniteGroup& g, int p);

/// True iff G has a normal Sylow p-subgroup; requires p | |G|.
bool is_p_closed(const FiniteGroup& g, int p);

struct ChiefSeries {
  std::vector<SubgroupRef> terms; // 1 = terms[0] < ... < terms.back() = G, all normal in G
  std::vector<int> factor_orders; // |terms[i+1]| / |terms[i]|
};

/// Ascending chief series; each step is the canonically first normal
/// subgroup covering the previous term inside the normal-subgroup poset
/// (equivalently: pull back the first minimal normal subgroup of the
/// quotient). The factor-order multiset is series-independent.
ChiefSeries chief_series(const FiniteGroup& g);

/// C_G(H/K) = {g : [g,h] in K for all h in H}; requires K <= H, both normal.
SubgroupRef chief_factor_centralizer(const FiniteGroup& g, const SubgroupRef& k,
                                     const SubgroupRef& h);

struct ChiefFactorAction {
  long induced_order; // |G / C_G(H/K)|
  bool abelian;
  long exponent;
};
ChiefFactorAction chief_factor_action(const FiniteGroup& g, const SubgroupRef& k,
                                      const SubgroupRef& h);

/// Soluble with all chief factors of prime order.
bool is_supersoluble(const FiniteGroup& g);
/// Cross-validation route: every maximal subgroup has prime index.
bool huppert_supersoluble(const SubgroupLattice& lattice);

/// Normal Sylow tower for the primes in decreasing order: for each prefix of
/// the primes, the elements whose order involves only those primes must form
/// a normal subgroup of exactly the corresponding order.
bool is_ore_dispersive(const FiniteGroup& g);

/// Smallest l with F_l(G) = G along the iterated Fitting series.
/// Throws std::invalid_argument when g is not soluble. Trivial group -> 0.
int nilpotent_length(const FiniteGroup& g);
bool is_metanilpotent(const FiniteGroup& g); // soluble with nilpotent_length <= 2

enum class FormationClass { Nilpotent, Supersoluble };

/// G^F: intersection of all normal N with G/N in the class.
SubgroupRef residual(const FiniteGroup& g, FormationClass cls);

/// Abelian of exponent dividing p-1.
bool in_A_class(const FiniteGroup& g, int p);

/// For every p | |G|: G/F_p(G) is soluble and each of its Sylow subgroups is
/// abelian of exponent dividing p-1. Local membership test for the class
/// of groups whose Sylow subgroups all admit prime-index chains; used to
/// cross-validate the chain-based definition.
bool wU_local_check(const FiniteGroup& g);

struct Classification {
  bool abelian = false;
  bool nilpotent = false;
  bool soluble = false;
  bool supersoluble = false;
  bool w_supersoluble = false;
  bool metanilpotent = false;
  bool ore_dispersive = false;
  int nilpotent_length = -1; // -1 when not soluble
  std::map<int, bool> p_closed;
};

Classification classify(const FiniteGroup& g, const SubgroupLattice& lattice);

} // namespace permlab
