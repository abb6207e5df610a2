#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "permlab/analysis.hpp"
#include "permlab/suites.hpp"

namespace permlab::detail {

/// One corpus member's quotient, built at most once per normal subgroup.
struct QuotientEntry {
  Quotient quotient;
  std::unique_ptr<SubgroupLattice> lattice; // built on demand
};

/// Scratch state for one (suite, corpus member) evaluation. Domains are
/// exhaustive up to kExhaustiveOrderLimit and deterministically sampled
/// above it; samples always keep the Sylow, Hall, Fitting and Carter
/// representatives so the known boundary witnesses stay in range.
class MemberContext {
public:
  MemberContext(GroupAnalysis& analysis, std::uint64_t seed)
      : a(analysis), rng_(seed) {}

  GroupAnalysis& a;
  long checks = 0;
  bool member_skipped = false;
  std::vector<std::string> failures;

  template <typename F>
  void expect(bool ok, F&& witness) {
    ++checks;
    if (!ok) failures.push_back(witness());
  }

  void skip() {
    member_skipped = true;
    ++checks; // the hypothesis evaluation itself counts
  }

  bool exhaustive() {
    return a.group().order() <= kExhaustiveOrderLimit;
  }

  /// Subgroup quantifier domain (node ids, ascending).
  const std::vector<int>& nodes();
  /// Element quantifier domain (element indices, ascending).
  const std::vector<int>& elements();
  /// Normal-subgroup quantifier domain. Sampled members drop the trivial
  /// subgroup when `proper_when_sampled` (quotient-by-1 only re-derives the
  /// group itself at full cost).
  std::vector<int> normals(bool proper_when_sampled = false);
  /// Intermediate subgroups of `node` intersected with the node domain;
  /// always contains the node itself and the top.
  std::vector<int> overgroups_of(int node);

  QuotientEntry& quotient(int normal_node);
  const SubgroupLattice& quotient_lattice(int normal_node);

  std::string node_desc(int id);
  static std::string subgroup_desc(const SubgroupRef& h);

private:
  std::mt19937_64 rng_;
  std::vector<int> node_domain_, element_domain_;
  bool nodes_ready_ = false, elements_ready_ = false;
  std::map<int, std::unique_ptr<QuotientEntry>> quotients_;
};

using SuiteFn = std::function<void(MemberContext&)>;

struct SuiteDef {
  std::string id;
  std::string description;
  SuiteFn run;
};

const std::vector<SuiteDef>& suite_registry();

} // namespace permlab::detail
