#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permlab/classify.hpp"
#include "permlab/lattice.hpp"
#include "permlab/permutizer.hpp"

namespace permlab {

/// Per-group workspace: one lattice plus memoized node predicates, owned by
/// a single worker while a corpus member is processed. Nothing here is
/// thread-safe; share the underlying group, not the analysis.
class GroupAnalysis {
public:
  GroupAnalysis(std::string name, FiniteGroup group, const Limits& limits = {});
  // lattice nodes point into the owned group; the analysis must stay put
  GroupAnalysis(const GroupAnalysis&) = delete;
  GroupAnalysis& operator=(const GroupAnalysis&) = delete;

  const std::string& name() const { return name_; }
  const FiniteGroup& group() const { return group_; }
  const Limits& limits() const { return limits_; }

  const SubgroupLattice& lattice();
  const Classification& classification();

  // memoized node predicates (ids into lattice())
  bool node_permuteral(int id);
  bool node_strongly_permuteral(int id);
  int strongly_permuteral_failing_node(int id); // -1 when strongly permuteral
  bool node_pronormal(int id);
  bool node_abnormal(int id);
  bool node_nilpotent(int id);
  bool node_abelian(int id);
  bool node_soluble(int id);
  bool node_supersoluble(int id);
  bool node_normal(int id);
  bool node_psn(int id); // prime-index chain to G
  bool node_self_normalizing(int id);
  int normalizer_node(int id);
  const SubgroupRef& node_permutizer(int id);
  const SubgroupRef& residual_of(FormationClass cls);

  /// Primes of |G|, descending p1 > p2 > ...
  const std::vector<int>& primes() const { return primes_; }
  /// One Sylow class representative node per prime, keyed like primes().
  std::vector<int> sylow_rep_nodes();
  /// One Hall class representative node per subset of primes() for which a
  /// Hall subgroup exists (includes the trivial and full subsets).
  std::vector<int> hall_rep_nodes();
  std::vector<int> carter_nodes();
  int fitting_node();

  /// All conjugacy-class representative nodes.
  std::vector<int> class_rep_nodes();

private:
  template <typename F>
  bool memo(std::vector<signed char>& cache, int id, F&& compute);

  std::string name_;
  FiniteGroup group_;
  Limits limits_;
  std::vector<int> primes_;
  std::unique_ptr<SubgroupLattice> lattice_;
  std::optional<Classification> classification_;

  std::vector<signed char> permuteral_, strongly_, pronormal_, abnormal_;
  std::vector<signed char> nilpotent_, abelian_, soluble_, supersoluble_, normal_, psn_;
  std::vector<int> strong_fail_;
  std::vector<int> normalizer_node_;
  std::vector<std::optional<SubgroupRef>> permutizer_;
  std::optional<std::vector<int>> sylow_reps_, hall_reps_, carter_;
  std::optional<SubgroupRef> residual_n_, residual_u_;
  int fitting_node_ = -2;
};

} // namespace permlab
