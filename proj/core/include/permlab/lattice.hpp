#pragma once

#include <vector>

#include "permlab/group.hpp"

namespace permlab {

/// Every subgroup of one parent group, with inclusion covers, conjugacy
/// classes, and the prime-index reachability used by the chain predicates.
///
/// Enumeration seeds with all cyclic subgroups and closes under pairwise
/// joins until fixpoint; complete because every subgroup is the join of the
/// cyclic subgroups of its elements. Nodes are in canonical order: ascending
/// order, ties by member-set sequence. Immutable once built.
class SubgroupLattice {
public:
  static SubgroupLattice build(const FiniteGroup& g, const Limits& limits = {});

  const FiniteGroup& group() const { return *group_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const SubgroupRef& node(int id) const { return nodes_[id]; }
  const std::vector<SubgroupRef>& nodes() const { return nodes_; }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  /// -1 when the set is not a node (i.e. not a subgroup).
  int find(const ElementSet& members) const;
  int node_of(const SubgroupRef& h) const { return find(h.members()); }

  /// Node ids U with node(id) <= U <= G, both endpoints included, ascending.
  std::vector<int> overgroups(int id) const;
  std::vector<int> subgroups_of(int id) const;

  /// maximal proper subgroups of node v (covers in the inclusion DAG)
  const std::vector<int>& covered_by(int v) const { return covers_[v]; }
  std::vector<int> maximal_subgroups() const { return covers_[top()]; }

  int class_of(int id) const { return class_of_[id]; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  /// Node ids of one conjugacy class, ascending; front() is the class rep.
  const std::vector<int>& conjugacy_class(int c) const { return classes_[c]; }
  std::vector<int> class_representatives() const;

  std::vector<int> sylow(int p) const;                     // all Sylow p-nodes
  std::vector<int> hall(const std::vector<int>& pi) const; // may be empty
  std::vector<int> normal_nodes() const;
  std::vector<int> minimal_normal_nodes() const;

  /// Reachability along edges U -> V with U < V and |V:U| prime. A path
  /// from H to U stays inside U automatically, so this is exactly the
  /// prime-index chain relation with ambient U.
  bool prime_reachable(int from, int to) const { return reach_[from].test(to); }
  /// Shortest prime-index chain from -> to as node ids (ties broken by
  /// canonical node order); {from} when from == to; empty when unreachable.
  std::vector<int> prime_chain(int from, int to) const;

private:
  const FiniteGroup* group_ = nullptr;
  std::vector<SubgroupRef> nodes_;
  std::vector<std::vector<int>> covers_;   // covers_[v] = maximal proper subgroups of v
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<ElementSet> reach_;          // reach_[u]: nodes reachable via prime steps
  std::vector<std::vector<int>> prime_up_; // prime-index successors, ascending
};

} // namespace permlab
