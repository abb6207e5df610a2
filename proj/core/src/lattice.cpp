#include "permlab/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "permlab/group_ops.hpp"

namespace permlab {

namespace {

struct BuildNode {
  ElementSet members;
  std::vector<int> gens;
  int order;
};

} // namespace

SubgroupLattice SubgroupLattice::build(const FiniteGroup& g, const Limits& limits) {
  const int n = g.order();

  std::unordered_map<ElementSet, int, ElementSetHash> ids;
  std::vector<BuildNode> work;

  auto add = [&](ElementSet members, std::vector<int> gens) -> int {
    auto it = ids.find(members);
    if (it != ids.end()) return -1;
    if (static_cast<long>(work.size()) + 1 > limits.max_subgroups)
      throw CapExceeded("subgroup count exceeds the cap of " +
                        std::to_string(limits.max_subgroups));
    int id = static_cast<int>(work.size());
    ids.emplace(members, id);
    int order = members.count();
    work.push_back(BuildNode{std::move(members), std::move(gens), order});
    return id;
  };

  add(g.identity_set(), {});
  std::vector<int> frontier;
  for (int x = 1; x < n; ++x) {
    int id = add(g.cyclic_set(x), {x});
    if (id >= 0) frontier.push_back(id);
  }

  // close under pairwise joins: every subgroup is a join of cyclic ones
  while (!frontier.empty()) {
    std::vector<int> next;
    const std::size_t snapshot = work.size();
    for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
      const int a = frontier[fi];
      for (std::size_t b = 0; b < snapshot; ++b) {
        if (static_cast<std::size_t>(a) == b) continue;
        if (work[a].members.subset_of(work[b].members) ||
            work[b].members.subset_of(work[a].members))
          continue;
        std::vector<int> gens = work[a].gens;
        gens.insert(gens.end(), work[b].gens.begin(), work[b].gens.end());
        ElementSet joined = closure_in_group(g, gens);
        int id = add(std::move(joined), std::move(gens));
        if (id >= 0) next.push_back(id);
      }
    }
    frontier = std::move(next);
  }

  // canonical node order: by order, then member-set sequence
  std::vector<int> perm(work.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if (work[x].order != work[y].order) return work[x].order < work[y].order;
    return ElementSet::lex_less(work[x].members, work[y].members);
  });

  SubgroupLattice lat;
  lat.group_ = &g;
  lat.nodes_.reserve(work.size());
  for (int old : perm) lat.nodes_.push_back(SubgroupRef::from_members(g, work[old].members));

  const int count = lat.size();

  // covers: walk proper subgroups in descending order, keep the maximal ones
  lat.covers_.assign(count, {});
  for (int v = 0; v < count; ++v) {
    std::vector<int> subs;
    for (int u = 0; u < v; ++u)
      if (lat.nodes_[u].order() < lat.nodes_[v].order() &&
          lat.nodes_[u].members().subset_of(lat.nodes_[v].members()))
        subs.push_back(u);
    std::sort(subs.begin(), subs.end(),
              [&](int x, int y) { return lat.nodes_[x].order() > lat.nodes_[y].order(); });
    for (int u : subs) {
      bool below_accepted = false;
      for (int w : lat.covers_[v]) {
        if (lat.nodes_[u].members().subset_of(lat.nodes_[w].members())) {
          below_accepted = true;
          break;
        }
      }
      if (!below_accepted) lat.covers_[v].push_back(u);
    }
    std::sort(lat.covers_[v].begin(), lat.covers_[v].end());
  }

  // conjugacy classes: orbits under conjugation by the group's generators
  lat.class_of_.assign(count, -1);
  std::unordered_map<ElementSet, int, ElementSetHash> index;
  for (int i = 0; i < count; ++i) index.emplace(lat.nodes_[i].members(), i);
  for (int i = 0; i < count; ++i) {
    if (lat.class_of_[i] >= 0) continue;
    int cls = static_cast<int>(lat.classes_.size());
    std::vector<int> orbit{i};
    lat.class_of_[i] = cls;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (int gen : g.generator_indices()) {
        ElementSet c = conjugate_set(g, lat.nodes_[orbit[qi]].members(), gen);
        auto it = index.find(c);
        if (it == index.end())
          throw std::logic_error("conjugate of a subgroup is missing from the lattice");
        if (lat.class_of_[it->second] < 0) {
          lat.class_of_[it->second] = cls;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat.classes_.push_back(std::move(orbit));
  }

  // prime-index edges and their reachability closure (node order is already
  // topological: strictly larger subgroups sort later)
  lat.prime_up_.assign(count, {});
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      int ou = lat.nodes_[u].order(), ov = lat.nodes_[v].order();
      if (ov <= ou || ov % ou != 0) continue;
      if (!is_prime(ov / ou)) continue;
      if (lat.nodes_[u].members().subset_of(lat.nodes_[v].members()))
        lat.prime_up_[u].push_back(v);
    }
  }
  lat.reach_.assign(count, ElementSet(count));
  for (int u = count - 1; u >= 0; --u) {
    lat.reach_[u].set(u);
    for (int v : lat.prime_up_[u]) lat.reach_[u] |= lat.reach_[v];
  }

  return lat;
}

int SubgroupLattice::find(const ElementSet& members) const {
  // nodes with one order form a short canonical run; binary search the order
  int lo = 0, hi = size();
  int target = members.count();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (nodes_[mid].order() < target)
      lo = mid + 1;
    else
      hi = mid;
  }
  for (int i = lo; i < size() && nodes_[i].order() == target; ++i)
    if (nodes_[i].members() == members) return i;
  return -1;
}

std::vector<int> SubgroupLattice::overgroups(int id) const {
  std::vector<int> out;
  for (int v = id; v < size(); ++v)
    if (nodes_[id].members().subset_of(nodes_[v].members())) out.push_back(v);
  return out;
}

std::vector<int> SubgroupLattice::subgroups_of(int id) const {
  std::vector<int> out;
  for (int u = 0; u <= id; ++u)
    if (nodes_[u].members().subset_of(nodes_[id].members())) out.push_back(u);
  return out;
}

std::vector<int> SubgroupLattice::class_representatives() const {
  std::vector<int> out;
  out.reserve(classes_.size());
  for (const auto& cls : classes_) out.push_back(cls.front());
  return out;
}

std::vector<int> SubgroupLattice::sylow(int p) const {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  long order = group().order();
  if (order % p != 0) throw std::invalid_argument("p does not divide the group order");
  long pp = p_part(order, p);
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (nodes_[i].order() == pp) out.push_back(i);
  return out;
}

std::vector<int> SubgroupLattice::hall(const std::vector<int>& pi) const {
  for (int p : pi)
    if (!is_prime(p)) throw std::invalid_argument("hall: set must consist of primes");
  long pp = pi_part(group().order(), pi);
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (nodes_[i].order() == pp) out.push_back(i);
  return out;
}

std::vector<int> SubgroupLattice::normal_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_normal(group(), nodes_[i])) out.push_back(i);
  return out;
}

std::vector<int> SubgroupLattice::minimal_normal_nodes() const {
  std::vector<int> normals = normal_nodes();
  std::vector<int> out;
  for (int i : normals) {
    if (nodes_[i].is_trivial()) continue;
    bool minimal = true;
    for (int j : normals) {
      if (j == i || nodes_[j].is_trivial()) continue;
      if (nodes_[j].order() < nodes_[i].order() &&
          nodes_[j].members().subset_of(nodes_[i].members())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<int> SubgroupLattice::prime_chain(int from, int to) const {
  if (from == to) return {from};
  if (!prime_reachable(from, to)) return {};
  std::vector<int> parent(size(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (int v : prime_up_[u]) {
      if (parent[v] < 0) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<int> chain;
  for (int v = to; v != from; v = parent[v]) chain.push_back(v);
  chain.push_back(from);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

} // namespace permlab
