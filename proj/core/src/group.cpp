#include "permlab/group.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace permlab {

FiniteGroup FiniteGroup::closure(int degree, std::vector<Perm> gens, const Limits& limits) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");

  const Perm id = Perm::identity(degree);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  for (const auto& g : gens)
    if (seen.insert(g).second) frontier.push_back(g);

  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        Perm p = f.then(g);
        if (seen.insert(p).second) {
          if (static_cast<int>(seen.size()) > limits.max_order)
            throw CapExceeded("closure exceeds the order cap of " +
                              std::to_string(limits.max_order));
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.elements_.assign(seen.begin(), seen.end());
  g.generators_ = std::move(gens);
  g.finalize();
  for (const auto& p : g.generators_) g.gen_idx_.push_back(g.index_of(p));
  return g;
}

FiniteGroup FiniteGroup::from_elements(int degree, std::vector<Perm> elems,
                                       std::vector<Perm> gens) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || !elems.front().is_identity())
    throw std::invalid_argument("element set must contain the identity");

  FiniteGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elems);
  g.generators_ = std::move(gens);
  g.finalize();

  // verify the element set is the closure of its generators; extract a
  // generating set greedily when none was given
  std::vector<int> gen_idx;
  if (g.generators_.empty()) {
    ElementSet covered = g.identity_set();
    for (int i = 0; i < g.order(); ++i) {
      if (covered.test(i)) continue;
      gen_idx.push_back(i);
      covered = closure_in_group(g, gen_idx);
    }
    for (int i : gen_idx) g.generators_.push_back(g.elements_[i]);
  } else {
    for (const auto& p : g.generators_) {
      int i = g.index_of(p);
      if (i < 0) throw std::invalid_argument("generator outside the element set");
      gen_idx.push_back(i);
    }
  }
  if (!(closure_in_group(g, gen_idx) == g.full_set()))
    throw std::invalid_argument("element set is not closed");
  g.gen_idx_ = std::move(gen_idx);
  return g;
}

void FiniteGroup::finalize() {
  const int n = order();
  if (n > 65535)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds the engine limit of 65535");

  if (!elements_.front().is_identity())
    throw std::invalid_argument("canonical element order must start with the identity");

  inv_.resize(n);
  elem_order_.resize(n);
  for (int i = 0; i < n; ++i) {
    inv_[i] = index_of(elements_[i].inverse());
    if (inv_[i] < 0) throw std::invalid_argument("element set is not closed under inverse");
    elem_order_[i] = elements_[i].order();
  }

  if (n <= kMulTableLimit) {
    table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int k = index_of(elements_[i].then(elements_[j]));
        if (k < 0) throw std::invalid_argument("element set is not closed under product");
        table_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(k);
      }
    }
  }

  cyclic_.reserve(n);
  for (int i = 0; i < n; ++i) {
    ElementSet s(n);
    int x = 0;
    do {
      s.set(x);
      x = mul(x, i);
    } while (x != 0);
    cyclic_.push_back(std::move(s));
  }
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int FiniteGroup::mul_slow(int a, int b) const {
  return index_of(elements_[a].then(elements_[b]));
}

ElementSet FiniteGroup::full_set() const {
  ElementSet s(order());
  for (int i = 0; i < order(); ++i) s.set(i);
  return s;
}

ElementSet FiniteGroup::identity_set() const {
  ElementSet s(order());
  s.set(0);
  return s;
}

ElementSet closure_in_group(const FiniteGroup& g, const std::vector<int>& gen_indices) {
  ElementSet set(g.order());
  set.set(0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int f : frontier) {
      for (int gen : gen_indices) {
        int p = g.mul(f, gen);
        if (!set.test(p)) {
          set.set(p);
          next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  return set;
}

ElementSet closure_in_group(const FiniteGroup& g, const ElementSet& seed) {
  return closure_in_group(g, seed.to_indices());
}

SubgroupRef::SubgroupRef(const FiniteGroup* parent, ElementSet members, std::vector<int> gens)
    : parent_(parent), members_(std::move(members)), order_(members_.count()),
      gens_(std::move(gens)) {}

SubgroupRef SubgroupRef::from_members(const FiniteGroup& parent, ElementSet members) {
  if (members.universe_size() != parent.order())
    throw std::invalid_argument("member set sized for a different parent");
  if (!members.test(0)) throw std::invalid_argument("member set must contain the identity");

  // greedy generator extraction doubles as the closure check
  std::vector<int> gens;
  ElementSet covered = parent.identity_set();
  members.for_each([&](int i) {
    if (!covered.test(i)) {
      gens.push_back(i);
      covered = closure_in_group(parent, gens);
    }
  });
  if (!(covered == members)) throw std::invalid_argument("member set is not a subgroup");
  return SubgroupRef(&parent, std::move(members), std::move(gens));
}

SubgroupRef SubgroupRef::generated_by(const FiniteGroup& parent, const ElementSet& seed) {
  return from_members(parent, closure_in_group(parent, seed));
}

SubgroupRef SubgroupRef::generated_by(const FiniteGroup& parent,
                                      const std::vector<int>& gen_indices) {
  return from_members(parent, closure_in_group(parent, gen_indices));
}

SubgroupRef SubgroupRef::trivial(const FiniteGroup& parent) {
  return SubgroupRef(&parent, parent.identity_set(), {});
}

SubgroupRef SubgroupRef::full(const FiniteGroup& parent) {
  return from_members(parent, parent.full_set());
}

FiniteGroup SubgroupRef::as_group() const {
  std::vector<Perm> elems;
  elems.reserve(order_);
  members_.for_each([&](int i) { elems.push_back(parent_->element(i)); });
  std::vector<Perm> gens;
  gens.reserve(gens_.size());
  for (int i : gens_) gens.push_back(parent_->element(i));
  return FiniteGroup::from_elements(parent_->degree(), std::move(elems), std::move(gens));
}

} // namespace permlab
