#include "permlab/group_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace permlab {

namespace {

void require_same_parent(const SubgroupRef& a, const SubgroupRef& b) {
  if (&a.parent() != &b.parent()) throw std::invalid_argument("parent group mismatch");
}

} // namespace

ElementSet set_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.order());
  auto bi = b.to_indices();
  a.for_each([&](int x) {
    for (int y : bi) out.set(g.mul(x, y));
  });
  return out;
}

ElementSet set_product(const SubgroupRef& h, const SubgroupRef& k) {
  require_same_parent(h, k);
  return set_product(h.parent(), h.members(), k.members());
}

bool permutes(const SubgroupRef& h, const SubgroupRef& k) {
  require_same_parent(h, k);
  return set_product(h, k) == set_product(k, h);
}

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, int g_index) {
  ElementSet out(g.order());
  s.for_each([&](int x) { out.set(g.conj(x, g_index)); });
  return out;
}

SubgroupRef conjugate_subgroup(const SubgroupRef& h, int g_index) {
  const FiniteGroup& g = h.parent();
  return SubgroupRef::from_members(g, conjugate_set(g, h.members(), g_index));
}

SubgroupRef conjugate_subgroup(const SubgroupRef& h, const Perm& g) {
  int idx = h.parent().index_of(g);
  if (idx < 0) throw std::invalid_argument("conjugating element is not in the parent group");
  return conjugate_subgroup(h, idx);
}

SubgroupRef normalizer(const FiniteGroup& g, const SubgroupRef& h) {
  ElementSet out(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_set(g, h.members(), x) == h.members()) out.set(x);
  return SubgroupRef::from_members(g, out);
}

SubgroupRef centralizer(const FiniteGroup& g, const ElementSet& s) {
  ElementSet out(g.order());
  auto si = s.to_indices();
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (int y : si) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.set(x);
  }
  return SubgroupRef::from_members(g, out);
}

SubgroupRef center(const FiniteGroup& g) { return centralizer(g, g.full_set()); }

bool is_normal(const FiniteGroup& g, const SubgroupRef& h) {
  for (int x : g.generator_indices())
    if (!(conjugate_set(g, h.members(), x) == h.members())) return false;
  return true;
}

SubgroupRef core_of(const FiniteGroup& g, const SubgroupRef& m) {
  ElementSet acc = m.members();
  for (int x = 0; x < g.order(); ++x) {
    acc &= conjugate_set(g, m.members(), x);
    if (acc.count() == 1) break;
  }
  return SubgroupRef::from_members(g, acc);
}

SubgroupRef normal_closure(const FiniteGroup& g, const ElementSet& seed) {
  ElementSet conj(g.order());
  seed.for_each([&](int x) {
    for (int y = 0; y < g.order(); ++y) conj.set(g.conj(x, y));
  });
  return SubgroupRef::from_members(g, closure_in_group(g, conj));
}

SubgroupRef normal_closure(const FiniteGroup& g, int x) {
  ElementSet seed(g.order());
  seed.set(x);
  return normal_closure(g, seed);
}

SubgroupRef commutator_subgroup(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet comms(g.order());
  auto bi = b.to_indices();
  a.for_each([&](int x) {
    for (int y : bi) comms.set(g.comm(x, y));
  });
  return SubgroupRef::from_members(g, closure_in_group(g, comms));
}

SubgroupRef join(const SubgroupRef& a, const SubgroupRef& b) {
  require_same_parent(a, b);
  std::vector<int> gens = a.generator_indices();
  const auto& bg = b.generator_indices();
  gens.insert(gens.end(), bg.begin(), bg.end());
  return SubgroupRef::from_members(a.parent(), closure_in_group(a.parent(), gens));
}

SubgroupRef intersection(const SubgroupRef& a, const SubgroupRef& b) {
  require_same_parent(a, b);
  return SubgroupRef::from_members(a.parent(), a.members() & b.members());
}

SubgroupRef cyclic_subgroup(const FiniteGroup& g, int x) {
  return SubgroupRef::from_members(g, g.cyclic_set(x));
}

SubgroupRef Quotient::push_forward(const SubgroupRef& h) const {
  ElementSet out(group.order());
  h.members().for_each([&](int x) { out.set(image_of[x]); });
  return SubgroupRef::from_members(group, out);
}

SubgroupRef Quotient::preimage(const SubgroupRef& hbar) const {
  ElementSet out(parent->order());
  for (int x = 0; x < parent->order(); ++x)
    if (hbar.contains(image_of[x])) out.set(x);
  return SubgroupRef::from_members(*parent, out);
}

Quotient quotient_group(const FiniteGroup& g, const SubgroupRef& n) {
  if (&n.parent() != &g) throw std::invalid_argument("parent group mismatch");
  if (!is_normal(g, n)) throw std::invalid_argument("quotient by a non-normal subgroup");

  const int order = g.order();
  const int index = order / n.order();

  // right cosets Nx, numbered by first occurrence in canonical element order;
  // the identity coset is 0
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  reps.reserve(index);
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    n.members().for_each([&](int h) { coset_of[g.mul(h, x)] = c; });
  }

  // action on cosets by right multiplication
  std::vector<Perm> gens;
  for (const Perm& gen : g.generators()) {
    int gi = g.index_of(gen);
    std::vector<std::uint16_t> img(index);
    for (int c = 0; c < index; ++c)
      img[c] = static_cast<std::uint16_t>(coset_of[g.mul(reps[c], gi)]);
    Perm p{std::move(img)};
    if (!p.is_identity()) gens.push_back(std::move(p));
  }

  std::vector<Perm> elems;
  elems.reserve(index);
  for (int c = 0; c < index; ++c) {
    std::vector<std::uint16_t> img(index);
    for (int d = 0; d < index; ++d)
      img[d] = static_cast<std::uint16_t>(coset_of[g.mul(reps[d], reps[c])]);
    elems.emplace_back(std::move(img));
  }

  Quotient q{FiniteGroup::from_elements(index, std::move(elems), std::move(gens)),
             std::move(coset_of),
             {},
             &g,
             n.members()};
  q.image_of.resize(order);
  for (int x = 0; x < order; ++x) {
    std::vector<std::uint16_t> img(index);
    for (int d = 0; d < index; ++d)
      img[d] = static_cast<std::uint16_t>(q.coset_of[g.mul(reps[d], x)]);
    q.image_of[x] = q.group.index_of(Perm{std::move(img)});
  }
  return q;
}

} // namespace permlab
