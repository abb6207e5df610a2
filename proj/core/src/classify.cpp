#include "permlab/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permlab/permutizer.hpp"

namespace permlab {

SubgroupRef derived_subgroup(const FiniteGroup& g) {
  return commutator_subgroup(g, g.full_set(), g.full_set());
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generator_indices();
  for (int a : gens)
    for (int b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_soluble(const FiniteGroup& g) {
  SubgroupRef d = SubgroupRef::full(g);
  while (true) {
    SubgroupRef next = commutator_subgroup(g, d.members(), d.members());
    if (next.order() == d.order()) return d.is_trivial();
    d = next;
  }
}

bool is_nilpotent(const FiniteGroup& g) {
  SubgroupRef term = SubgroupRef::full(g);
  while (true) {
    SubgroupRef next = commutator_subgroup(g, g.full_set(), term.members());
    if (next.order() == term.order()) return term.is_trivial();
    term = next;
  }
}

long exponent_of(const FiniteGroup& g) {
  long e = 1;
  for (int i = 0; i < g.order(); ++i) e = std::lcm(e, g.element_order(i));
  return e;
}

bool is_nilpotent_subgroup(const FiniteGroup& g, const ElementSet& members) {
  ElementSet term = members;
  while (true) {
    SubgroupRef next = commutator_subgroup(g, members, term);
    if (next.order() == term.count()) return term.count() == 1;
    term = next.members();
  }
}

bool is_soluble_subgroup(const FiniteGroup& g, const ElementSet& members) {
  ElementSet term = members;
  while (true) {
    SubgroupRef next = commutator_subgroup(g, term, term);
    if (next.order() == term.count()) return term.count() == 1;
    term = next.members();
  }
}

bool is_abelian_subgroup(const FiniteGroup& g, const ElementSet& members) {
  auto idx = members.to_indices();
  for (int a : idx)
    for (int b : idx)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

namespace {

bool order_is_p_power(long n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

} // namespace

SubgroupRef p_core(const FiniteGroup& g, int p) {
  // x lies in O_p(G) exactly when its normal closure is a p-group
  ElementSet seed(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (!order_is_p_power(g.element_order(x), p)) continue;
    if (order_is_p_power(normal_closure(g, x).order(), p)) seed.set(x);
  }
  return SubgroupRef::generated_by(g, seed);
}

SubgroupRef fitting(const FiniteGroup& g) {
  ElementSet seed(g.order());
  seed.set(0);
  for (int p : prime_divisors(g.order())) seed |= p_core(g, p).members();
  return SubgroupRef::generated_by(g, seed);
}

SubgroupRef frattini(const SubgroupLattice& lattice) {
  ElementSet acc = lattice.group().full_set();
  for (int m : lattice.maximal_subgroups()) acc &= lattice.node(m).members();
  return SubgroupRef::from_members(lattice.group(), acc);
}

std::vector<SubgroupRef> minimal_normal_subgroups(const FiniteGroup& g) {
  std::vector<SubgroupRef> closures;
  std::vector<ElementSet> seen;
  for (int x = 1; x < g.order(); ++x) {
    SubgroupRef ncl = normal_closure(g, x);
    if (std::find(seen.begin(), seen.end(), ncl.members()) == seen.end()) {
      seen.push_back(ncl.members());
      closures.push_back(std::move(ncl));
    }
  }
  std::vector<SubgroupRef> out;
  for (const auto& n : closures) {
    bool minimal = true;
    for (const auto& m : closures) {
      if (m.order() < n.order() && m.members().subset_of(n.members())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return ElementSet::lex_less(a.members(), b.members());
  });
  return out;
}

SubgroupRef socle(const FiniteGroup& g) {
  ElementSet seed(g.order());
  seed.set(0);
  for (const auto& n : minimal_normal_subgroups(g)) seed |= n.members();
  return SubgroupRef::generated_by(g, seed);
}

std::vector<SubgroupRef> normal_subgroups(const FiniteGroup& g) {
  // every normal subgroup is a join of single-element normal closures
  std::vector<ElementSet> sets{g.identity_set()};
  for (int x = 1; x < g.order(); ++x) {
    ElementSet ncl = normal_closure(g, x).members();
    if (std::find(sets.begin(), sets.end(), ncl) == sets.end()) sets.push_back(ncl);
  }
  std::size_t frontier_start = 0;
  while (frontier_start < sets.size()) {
    std::size_t frontier_end = sets.size();
    for (std::size_t i = frontier_start; i < frontier_end; ++i) {
      for (std::size_t j = 0; j < frontier_end; ++j) {
        if (sets[i].subset_of(sets[j]) || sets[j].subset_of(sets[i])) continue;
        ElementSet join = closure_in_group(g, sets[i] | sets[j]);
        if (std::find(sets.begin(), sets.end(), join) == sets.end())
          sets.push_back(std::move(join));
      }
    }
    frontier_start = frontier_end;
  }
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return ElementSet::lex_less(a, b);
  });
  std::vector<SubgroupRef> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(SubgroupRef::from_members(g, std::move(s)));
  return out;
}

bool has_normal_p_complement(const FiniteGroup& g, const ElementSet& members, int p) {
  // the p'-elements must form a subgroup of exactly the p'-part's order
  long order = members.count();
  long target = order / p_part(order, p);
  ElementSet k(g.order());
  members.for_each([&](int x) {
    if (g.element_order(x) % p != 0) k.set(x);
  });
  if (k.count() != target) return false;
  auto ki = k.to_indices();
  for (int a : ki)
    for (int b : ki)
      if (!k.test(g.mul(a, b))) return false;
  return true;
}

SubgroupRef p_nilpotent_radical(const FiniteGroup& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  ElementSet seed(g.order());
  seed.set(0);
  for (const auto& n : normal_subgroups(g))
    if (has_normal_p_complement(g, n.members(), p)) seed |= n.members();
  return SubgroupRef::generated_by(g, seed);
}

SubgroupRef sylow_subgroup_direct(const FiniteGroup& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  long target = p_part(g.order(), p);
  SubgroupRef part = SubgroupRef::trivial(g);
  while (part.order() < target) {
    // p divides |N_G(P) : P| while P is not yet Sylow, so some element of
    // the normalizer has a p-part outside P; adjoin the first one
    SubgroupRef norm = normalizer(g, part);
    bool grown = false;
    auto idx = norm.element_indices();
    for (int x : idx) {
      long ord = g.element_order(x);
      long m = ord / p_part(ord, p);
      int xp = x;
      for (long k = 1; k < m; ++k) xp = g.mul(xp, x); // x^m, the p-part of x
      if (xp != 0 && !part.contains(xp)) {
        ElementSet seed = part.members();
        seed.set(xp);
        SubgroupRef bigger = SubgroupRef::generated_by(g, seed);
        if (order_is_p_power(bigger.order(), p)) {
          part = std::move(bigger);
          grown = true;
          break;
        }
      }
    }
    if (!grown) throw std::logic_error("sylow climb stalled");
  }
  return part;
}

bool is_p_closed(const FiniteGroup& g, int p) {
  if (g.order() % p != 0) throw std::invalid_argument("p does not divide the group order");
  // normal Sylow p-subgroup <=> O_p(G) already has full p-part order
  return p_core(g, p).order() == p_part(g.order(), p);
}

ChiefSeries chief_series(const FiniteGroup& g) {
  std::vector<SubgroupRef> normals = normal_subgroups(g);
  ChiefSeries series;
  series.terms.push_back(SubgroupRef::trivial(g));
  while (series.terms.back().order() < g.order()) {
    const SubgroupRef& cur = series.terms.back();
    // canonically first minimal normal subgroup of G/cur, pulled back: the
    // first normal subgroup properly containing cur and covering it in the
    // normal-subgroup poset
    const SubgroupRef* next = nullptr;
    for (const auto& n : normals) {
      if (n.order() <= cur.order() || !cur.members().subset_of(n.members())) continue;
      bool covers = true;
      for (const auto& m : normals) {
        if (m.order() <= cur.order() || m.order() >= n.order()) continue;
        if (cur.members().subset_of(m.members()) && m.members().subset_of(n.members())) {
          covers = false;
          break;
        }
      }
      if (covers) {
        next = &n;
        break;
      }
    }
    if (!next) throw std::logic_error("chief series construction stalled");
    series.factor_orders.push_back(next->order() / cur.order());
    series.terms.push_back(*next);
  }
  return series;
}

SubgroupRef chief_factor_centralizer(const FiniteGroup& g, const SubgroupRef& k,
                                     const SubgroupRef& h) {
  if (!k.members().subset_of(h.members()))
    throw std::invalid_argument("chief factor requires K <= H");
  ElementSet out(g.order());
  auto hi = h.element_indices();
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y : hi) {
      if (!k.contains(g.comm(x, y))) {
        central = false;
        break;
      }
    }
    if (central) out.set(x);
  }
  return SubgroupRef::from_members(g, out);
}

ChiefFactorAction chief_factor_action(const FiniteGroup& g, const SubgroupRef& k,
                                      const SubgroupRef& h) {
  SubgroupRef c = chief_factor_centralizer(g, k, h);
  Quotient q = quotient_group(g, c);
  return ChiefFactorAction{q.group.order(), is_abelian(q.group), exponent_of(q.group)};
}

bool is_supersoluble(const FiniteGroup& g) {
  if (!is_soluble(g)) return false;
  for (int f : chief_series(g).factor_orders)
    if (!is_prime(f)) return false;
  return true;
}

bool huppert_supersoluble(const SubgroupLattice& lattice) {
  long order = lattice.group().order();
  for (int m : lattice.maximal_subgroups())
    if (!is_prime(order / lattice.node(m).order())) return false;
  return true;
}

bool is_ore_dispersive(const FiniteGroup& g) {
  std::vector<int> primes = prime_divisors(g.order());
  std::sort(primes.rbegin(), primes.rend());
  std::vector<int> prefix;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    prefix.push_back(primes[i]);
    long target = pi_part(g.order(), prefix);
    if (target == g.order()) continue; // full prefix: the tower term is G itself
    ElementSet s(g.order());
    for (int x = 0; x < g.order(); ++x) {
      long ord = g.element_order(x);
      for (int p : prefix) ord /= p_part(ord, p);
      if (ord == 1) s.set(x);
    }
    if (s.count() != target) return false;
    auto si = s.to_indices();
    for (int a : si) {
      bool ok = true;
      for (int b : si)
        if (!s.test(g.mul(a, b))) {
          ok = false;
          break;
        }
      if (!ok) return false;
    }
    for (int gen : g.generator_indices())
      if (!(conjugate_set(g, s, gen) == s)) return false;
  }
  return true;
}

int nilpotent_length(const FiniteGroup& g) {
  if (!is_soluble(g)) throw std::invalid_argument("nilpotent length needs a soluble group");
  int length = 0;
  // iterated Fitting series via quotients
  FiniteGroup cur = g;
  while (cur.order() > 1) {
    SubgroupRef f = fitting(cur);
    if (f.is_trivial()) throw std::logic_error("soluble group with trivial Fitting subgroup");
    Quotient q = quotient_group(cur, f);
    cur = std::move(q.group);
    ++length;
  }
  return length;
}

bool is_metanilpotent(const FiniteGroup& g) {
  return is_soluble(g) && nilpotent_length(g) <= 2;
}

SubgroupRef residual(const FiniteGroup& g, FormationClass cls) {
  ElementSet acc = g.full_set();
  for (const auto& n : normal_subgroups(g)) {
    Quotient q = quotient_group(g, n);
    bool in_class = cls == FormationClass::Nilpotent ? is_nilpotent(q.group)
                                                     : is_supersoluble(q.group);
    if (in_class) acc &= n.members();
  }
  return SubgroupRef::from_members(g, acc);
}

bool in_A_class(const FiniteGroup& g, int p) {
  return is_abelian(g) && (p - 1) % exponent_of(g) == 0;
}

bool wU_local_check(const FiniteGroup& g) {
  for (int p : prime_divisors(g.order())) {
    Quotient q = quotient_group(g, p_nilpotent_radical(g, p));
    if (!is_soluble(q.group)) return false;
    for (int r : prime_divisors(q.group.order())) {
      FiniteGroup syl = sylow_subgroup_direct(q.group, r).as_group();
      if (!in_A_class(syl, p)) return false;
    }
  }
  return true;
}

Classification classify(const FiniteGroup& g, const SubgroupLattice& lattice) {
  Classification c;
  c.abelian = is_abelian(g);
  c.nilpotent = is_nilpotent(g);
  c.soluble = is_soluble(g);
  c.supersoluble = is_supersoluble(g);
  c.ore_dispersive = is_ore_dispersive(g);
  c.metanilpotent = c.soluble && is_metanilpotent(g);
  c.nilpotent_length = c.soluble ? nilpotent_length(g) : -1;
  for (int p : prime_divisors(g.order())) c.p_closed[p] = lattice.sylow(p).size() == 1;
  c.w_supersoluble = is_w_supersoluble(lattice);
  return c;
}

} // namespace permlab
