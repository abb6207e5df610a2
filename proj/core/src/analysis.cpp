#include "permlab/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace permlab {

GroupAnalysis::GroupAnalysis(std::string name, FiniteGroup group, const Limits& limits)
    : name_(std::move(name)), group_(std::move(group)), limits_(limits) {
  primes_ = prime_divisors(group_.order());
  std::sort(primes_.rbegin(), primes_.rend());
}

const SubgroupLattice& GroupAnalysis::lattice() {
  if (!lattice_) {
    lattice_ = std::make_unique<SubgroupLattice>(SubgroupLattice::build(group_, limits_));
    int n = lattice_->size();
    permuteral_.assign(n, -1);
    strongly_.assign(n, -1);
    pronormal_.assign(n, -1);
    abnormal_.assign(n, -1);
    nilpotent_.assign(n, -1);
    abelian_.assign(n, -1);
    soluble_.assign(n, -1);
    supersoluble_.assign(n, -1);
    normal_.assign(n, -1);
    psn_.assign(n, -1);
    strong_fail_.assign(n, -2);
    normalizer_node_.assign(n, -1);
    permutizer_.assign(n, std::nullopt);
  }
  return *lattice_;
}

const Classification& GroupAnalysis::classification() {
  if (!classification_) classification_ = classify(group_, lattice());
  return *classification_;
}

template <typename F>
bool GroupAnalysis::memo(std::vector<signed char>& cache, int id, F&& compute) {
  lattice();
  if (cache[id] < 0) cache[id] = compute() ? 1 : 0;
  return cache[id] == 1;
}

bool GroupAnalysis::node_permuteral(int id) {
  return memo(permuteral_, id,
              [&] { return permutizer(group_, lattice().node(id)).is_full(); });
}

bool GroupAnalysis::node_strongly_permuteral(int id) {
  return memo(strongly_, id, [&] {
    auto r = is_strongly_permuteral(lattice(), id);
    strong_fail_[id] = r.value ? -1 : r.failing_node;
    return r.value;
  });
}

int GroupAnalysis::strongly_permuteral_failing_node(int id) {
  node_strongly_permuteral(id);
  return strong_fail_[id];
}

bool GroupAnalysis::node_pronormal(int id) {
  return memo(pronormal_, id, [&] { return is_pronormal(group_, lattice().node(id)); });
}

bool GroupAnalysis::node_abnormal(int id) {
  return memo(abnormal_, id, [&] { return is_abnormal(group_, lattice().node(id)); });
}

bool GroupAnalysis::node_nilpotent(int id) {
  return memo(nilpotent_, id,
              [&] { return is_nilpotent_subgroup(group_, lattice().node(id).members()); });
}

bool GroupAnalysis::node_abelian(int id) {
  return memo(abelian_, id,
              [&] { return is_abelian_subgroup(group_, lattice().node(id).members()); });
}

bool GroupAnalysis::node_soluble(int id) {
  return memo(soluble_, id,
              [&] { return is_soluble_subgroup(group_, lattice().node(id).members()); });
}

bool GroupAnalysis::node_supersoluble(int id) {
  return memo(supersoluble_, id,
              [&] { return is_supersoluble(lattice().node(id).as_group()); });
}

bool GroupAnalysis::node_normal(int id) {
  return memo(normal_, id, [&] { return is_normal(group_, lattice().node(id)); });
}

bool GroupAnalysis::node_psn(int id) {
  return memo(psn_, id, [&] { return lattice().prime_reachable(id, lattice().top()); });
}

bool GroupAnalysis::node_self_normalizing(int id) {
  return normalizer_node(id) == id;
}

int GroupAnalysis::normalizer_node(int id) {
  lattice();
  if (normalizer_node_[id] < 0)
    normalizer_node_[id] = lattice().node_of(normalizer(group_, lattice().node(id)));
  return normalizer_node_[id];
}

const SubgroupRef& GroupAnalysis::node_permutizer(int id) {
  lattice();
  if (!permutizer_[id]) permutizer_[id] = permutizer(group_, lattice().node(id));
  return *permutizer_[id];
}

const SubgroupRef& GroupAnalysis::residual_of(FormationClass cls) {
  auto& slot = cls == FormationClass::Nilpotent ? residual_n_ : residual_u_;
  if (!slot) slot = residual(group_, cls);
  return *slot;
}

std::vector<int> GroupAnalysis::sylow_rep_nodes() {
  if (!sylow_reps_) {
    std::vector<int> reps;
    for (int p : primes_) reps.push_back(lattice().sylow(p).front());
    sylow_reps_ = std::move(reps);
  }
  return *sylow_reps_;
}

std::vector<int> GroupAnalysis::hall_rep_nodes() {
  if (!hall_reps_) {
    // one representative per conjugacy class of Hall subgroups; a single
    // order can carry several classes, so filter the class reps directly
    std::vector<int> reps;
    for (int r : lattice().class_representatives()) {
      long o = lattice().node(r).order();
      if (std::gcd(o, static_cast<long>(group_.order()) / o) == 1) reps.push_back(r);
    }
    hall_reps_ = std::move(reps);
  }
  return *hall_reps_;
}

std::vector<int> GroupAnalysis::carter_nodes() {
  if (!carter_) carter_ = carter_subgroups(lattice());
  return *carter_;
}

int GroupAnalysis::fitting_node() {
  if (fitting_node_ == -2) fitting_node_ = lattice().node_of(fitting(group_));
  return fitting_node_;
}

std::vector<int> GroupAnalysis::class_rep_nodes() { return lattice().class_representatives(); }

} // namespace permlab
