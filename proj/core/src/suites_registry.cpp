#include <numeric>

#include "permlab/classify.hpp"
#include "permlab/group_io.hpp"
#include "permlab/permutizer.hpp"
#include "suite_context.hpp"

// One registered suite per verified statement. Every suite receives a single
// corpus member at a time; quantifier domains come from the context so that
// groups above the exhaustive-order limit get the documented sampled sweeps.
// Statements with hypotheses skip members where the hypothesis fails.

namespace permlab::detail {

namespace {

std::string desc(MemberContext& ctx, int node) { return ctx.node_desc(node); }

bool set_eq(const SubgroupRef& x, const SubgroupRef& y) { return x.members() == y.members(); }

int node_checked(const SubgroupLattice& lat, const ElementSet& s) {
  int id = lat.find(s);
  if (id < 0) throw std::logic_error("subgroup missing from the lattice");
  return id;
}

// ---- section 1 lemmas -------------------------------------------------------

void suite_L1_1(MemberContext& ctx) {
  const FiniteGroup& g = ctx.a.group();
  ChiefSeries cs = chief_series(g);
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    const SubgroupRef& k = cs.terms[i];
    const SubgroupRef& h = cs.terms[i + 1];
    SubgroupRef c = chief_factor_centralizer(g, k, h);
    Quotient q = quotient_group(g, c);
    for (int p : prime_divisors(cs.factor_orders[i])) {
      SubgroupRef fp = p_nilpotent_radical(g, p);
      ctx.expect(fp.members().subset_of(c.members()), [&] {
        return "F_" + std::to_string(p) + " not inside the centralizer of the chief factor " +
               std::to_string(h.order()) + "/" + std::to_string(k.order());
      });
      ctx.expect(p_core(q.group, p).is_trivial(), [&] {
        return "G/C_G(H/K) has a nontrivial normal " + std::to_string(p) +
               "-subgroup at factor " + std::to_string(h.order()) + "/" +
               std::to_string(k.order());
      });
    }
  }
}

void suite_L1_2(MemberContext& ctx) {
  for (int n : ctx.normals()) {
    QuotientEntry& qe = ctx.quotient(n);
    for (FormationClass cls : {FormationClass::Nilpotent, FormationClass::Supersoluble}) {
      SubgroupRef lhs = residual(qe.quotient.group, cls);
      SubgroupRef rhs = qe.quotient.push_forward(ctx.a.residual_of(cls));
      ctx.expect(set_eq(lhs, rhs), [&] {
        return std::string("residual of quotient by ") + desc(ctx, n) +
               " differs from the pushed-forward residual (" +
               (cls == FormationClass::Nilpotent ? "nilpotent" : "supersoluble") + " class)";
      });
    }
  }
}

void suite_L1_3(MemberContext& ctx) {
  if (!ctx.a.classification().soluble) {
    ctx.skip();
    return;
  }
  const FiniteGroup& g = ctx.a.group();
  Quotient q = quotient_group(g, frattini(ctx.a.lattice()));
  SubgroupRef f = fitting(q.group);
  SubgroupRef c = centralizer(q.group, f.members());
  SubgroupRef s = socle(q.group);
  ctx.expect(set_eq(f, c),
             [&] { return "Fitting subgroup of G/Phi is not self-centralizing"; });
  ctx.expect(set_eq(f, s), [&] { return "Fitting subgroup of G/Phi differs from the socle"; });
}

void suite_L1_5(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const int top = lat.top();
  const FiniteGroup& g = a.group();
  const bool soluble = a.classification().soluble;
  std::vector<int> normals = ctx.normals();
  const auto& nodes = ctx.nodes();

  auto must_find = [&](const ElementSet& s) { return node_checked(lat, s); };
  auto product_node = [&](int x, int y) {
    return must_find(set_product(lat.node(x), lat.node(y)));
  };
  auto meet_node = [&](int x, int y) {
    return must_find(lat.node(x).members() & lat.node(y).members());
  };

  for (int n : normals) {
    for (int h : nodes) {
      if (!a.node_psn(h)) continue;
      // (1) restriction to a normal subgroup and passage to the quotient
      ctx.expect(lat.prime_reachable(meet_node(h, n), n), [&] {
        return "H meet N lost its chain inside N; H " + desc(ctx, h) + ", N " + desc(ctx, n);
      });
      int hn = product_node(h, n);
      if (ctx.exhaustive()) {
        const SubgroupLattice& qlat = ctx.quotient_lattice(n);
        SubgroupRef img = ctx.quotient(n).quotient.push_forward(lat.node(h));
        ctx.expect(qlat.prime_reachable(qlat.node_of(img), qlat.top()), [&] {
          return "HN/N has no chain in G/N; H " + desc(ctx, h) + ", N " + desc(ctx, n);
        });
      } else {
        ctx.expect(lat.prime_reachable(hn, top), [&] {
          return "HN has no chain to G; H " + desc(ctx, h) + ", N " + desc(ctx, n);
        });
      }
    }
  }

  // (2) lifting along a quotient
  for (int n : normals) {
    for (int h : nodes) {
      if (!lat.node(n).members().subset_of(lat.node(h).members())) continue;
      bool quotient_psn;
      if (ctx.exhaustive()) {
        const SubgroupLattice& qlat = ctx.quotient_lattice(n);
        SubgroupRef img = ctx.quotient(n).quotient.push_forward(lat.node(h));
        quotient_psn = qlat.prime_reachable(qlat.node_of(img), qlat.top());
      } else {
        quotient_psn = lat.prime_reachable(h, top);
      }
      if (quotient_psn)
        ctx.expect(lat.prime_reachable(h, top), [&] {
          return "H/N has a chain but H does not; H " + desc(ctx, h) + ", N " + desc(ctx, n);
        });
    }
  }

  // (3) intersection of two normal-padded chain subgroups
  for (int h : nodes) {
    for (std::size_t i = 0; i < normals.size(); ++i) {
      int hn1 = product_node(h, normals[i]);
      if (!lat.prime_reachable(hn1, top)) continue;
      for (std::size_t j = i; j < normals.size(); ++j) {
        int hn2 = product_node(h, normals[j]);
        if (!lat.prime_reachable(hn2, top)) continue;
        ctx.expect(lat.prime_reachable(meet_node(hn1, hn2), top), [&] {
          return "HN1 meet HN2 lost its chain; H " + desc(ctx, h);
        });
      }
    }
  }

  // (4) transitivity
  for (int h : nodes) {
    for (int k : nodes) {
      if (k <= h || !lat.node(h).members().subset_of(lat.node(k).members())) continue;
      if (lat.prime_reachable(h, k) && lat.prime_reachable(k, top))
        ctx.expect(lat.prime_reachable(h, top), [&] {
          return "chains H..K and K..G do not concatenate; H " + desc(ctx, h) + ", K " +
                 desc(ctx, k);
        });
    }
  }

  // (5) conjugation invariance
  for (int h : nodes) {
    if (!a.node_psn(h)) continue;
    for (int x : ctx.elements()) {
      int hx = must_find(conjugate_set(g, lat.node(h).members(), x));
      ctx.expect(lat.prime_reachable(hx, top), [&] {
        return "conjugate of a chain subgroup lost its chain; H " + desc(ctx, h) + ", x = " +
               format_cycles(g.element(x));
      });
    }
  }

  // (6) subgroups above the supersoluble residual
  const SubgroupRef& gu = a.residual_of(FormationClass::Supersoluble);
  for (int h : nodes) {
    if (!gu.members().subset_of(lat.node(h).members())) continue;
    ctx.expect(lat.prime_reachable(h, top), [&] {
      return "subgroup above the supersoluble residual has no chain; H " + desc(ctx, h);
    });
  }

  if (!soluble) return; // (7) and (8) assume solubility

  for (int h : nodes) {
    if (!a.node_psn(h)) continue;
    for (int k : nodes) {
      ctx.expect(lat.prime_reachable(meet_node(h, k), k), [&] {
        return "H meet K has no chain inside K; H " + desc(ctx, h) + ", K " + desc(ctx, k);
      });
    }
  }
  for (int h1 : nodes) {
    if (!a.node_psn(h1)) continue;
    for (int h2 : nodes) {
      if (h2 < h1 || !a.node_psn(h2)) continue;
      ctx.expect(lat.prime_reachable(meet_node(h1, h2), top), [&] {
        return "intersection of chain subgroups lost its chain; " + desc(ctx, h1) + " and " +
               desc(ctx, h2);
      });
    }
  }
}

void suite_P1_6(MemberContext& ctx) {
  if (!ctx.a.classification().w_supersoluble) {
    ctx.skip();
    return;
  }
  ctx.expect(ctx.a.classification().ore_dispersive,
             [&] { return "w-supersoluble member without a full normal Sylow tower"; });
}

void suite_T1_7_local(MemberContext& ctx) {
  bool local = wU_local_check(ctx.a.group());
  bool chains = ctx.a.classification().w_supersoluble;
  ctx.expect(local == chains, [&] {
    return std::string("local membership test disagrees with the Sylow-chain definition: ") +
           (local ? "local yes" : "local no") + " vs " + (chains ? "chains yes" : "chains no");
  });
}

void suite_T1_8(MemberContext& ctx) {
  if (!ctx.a.classification().w_supersoluble) {
    ctx.skip();
    return;
  }
  for (int h : ctx.nodes()) {
    if (prime_divisors(ctx.a.lattice().node(h).order()).size() != 2) continue;
    ctx.expect(ctx.a.node_supersoluble(h), [&] {
      return "biprimary subgroup is not supersoluble: " + desc(ctx, h);
    });
  }
}

void suite_T1_9(MemberContext& ctx) {
  const FiniteGroup& g = ctx.a.group();
  ChiefSeries cs = chief_series(g);
  bool any = false;
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    auto primes = prime_divisors(cs.factor_orders[i]);
    if (primes.size() != 1) continue; // only chief p-factors
    any = true;
    int p = primes[0];
    ChiefFactorAction act = chief_factor_action(g, cs.terms[i], cs.terms[i + 1]);
    bool prime_factor = is_prime(cs.factor_orders[i]);
    bool small_action = act.abelian && (p - 1) % act.exponent == 0;
    ctx.expect(prime_factor == small_action, [&] {
      return "factor of order " + std::to_string(cs.factor_orders[i]) +
             " disagrees with its induced automorphism group (order " +
             std::to_string(act.induced_order) + ")";
    });
  }
  if (!any) ctx.skip();
}

void suite_L1_10(MemberContext& ctx) {
  for (int h : ctx.nodes()) {
    if (!ctx.a.node_pronormal(h)) continue;
    ctx.expect(ctx.a.node_abnormal(ctx.a.normalizer_node(h)), [&] {
      return "normalizer of pronormal " + desc(ctx, h) + " is not abnormal";
    });
  }
}

void suite_L1_11(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const FiniteGroup& g = a.group();
  for (int h : ctx.nodes()) {
    bool abnormal = a.node_abnormal(h);
    bool pronormal = a.node_pronormal(h);
    bool self_norm = a.node_self_normalizing(h);

    // (1) <=> (4), all sides exact
    ctx.expect(abnormal == (pronormal && self_norm), [&] {
      return "abnormality disagrees with pronormal+self-normalizing for " + desc(ctx, h);
    });

    auto overs = ctx.overgroups_of(h);

    // (2): H <= U and H <= U^x force x in U
    bool cond2 = true;
    std::pair<int, int> c2_witness{-1, -1};
    for (int x = 0; x < g.order() && cond2; ++x) {
      ElementSet h_back = conjugate_set(g, lat.node(h).members(), g.inv(x));
      for (int u : overs) {
        if (h_back.subset_of(lat.node(u).members()) && !lat.node(u).contains(x)) {
          cond2 = false;
          c2_witness = {u, x};
          break;
        }
      }
    }
    // (3): pronormal with every intermediate self-normalizing
    bool cond3 = pronormal;
    int c3_witness = -1;
    if (cond3) {
      for (int u : overs) {
        if (!a.node_self_normalizing(u)) {
          cond3 = false;
          c3_witness = u;
          break;
        }
      }
    }

    if (ctx.exhaustive()) {
      ctx.expect(abnormal == cond2, [&] {
        return "abnormality disagrees with the double-intersection condition for " +
               desc(ctx, h);
      });
      ctx.expect(abnormal == cond3, [&] {
        return "abnormality disagrees with pronormal+self-normalizing intermediates for " +
               desc(ctx, h);
      });
    } else {
      // sampled intermediates: only violations are conclusive
      ctx.expect(!abnormal || cond2, [&] {
        return "abnormal " + desc(ctx, h) + " violates the double-intersection condition at U " +
               desc(ctx, c2_witness.first);
      });
      ctx.expect(!abnormal || cond3, [&] {
        return "abnormal " + desc(ctx, h) + " has a non-self-normalizing intermediate " +
               desc(ctx, c3_witness);
      });
    }
  }
}

void suite_L1_12(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const FiniteGroup& g = a.group();

  auto pronormal_within = [&](const SubgroupRef& h, const ElementSet& ambient) {
    bool ok = true;
    ambient.for_each([&](int x) {
      if (!ok) return;
      ElementSet hx = conjugate_set(g, h.members(), x);
      if (hx == h.members()) return;
      std::vector<int> gens = h.generator_indices();
      for (int hg : h.generator_indices()) gens.push_back(g.conj(hg, x));
      ElementSet join = closure_in_group(g, gens);
      bool found = false;
      for (int j = join.next(0); j >= 0 && !found; j = join.next(j + 1))
        found = conjugate_set(g, h.members(), j) == hx;
      if (!found) ok = false;
    });
    return ok;
  };

  for (int h : ctx.nodes()) {
    if (!a.node_pronormal(h)) {
      // (2) reverse direction handled below for N <= H
      for (int n : ctx.normals()) {
        if (!lat.node(n).members().subset_of(lat.node(h).members())) continue;
        QuotientEntry& qe = ctx.quotient(n);
        SubgroupRef img = qe.quotient.push_forward(lat.node(h));
        ctx.expect(!is_pronormal(qe.quotient.group, img), [&] {
          return "H/N pronormal though H is not: H " + desc(ctx, h) + ", N " + desc(ctx, n);
        });
      }
      continue;
    }
    // (1) pronormality persists in intermediates
    for (int u : ctx.overgroups_of(h)) {
      ctx.expect(pronormal_within(lat.node(h), lat.node(u).members()), [&] {
        return "pronormal " + desc(ctx, h) + " loses pronormality inside " + desc(ctx, u);
      });
    }
    for (int n : ctx.normals()) {
      QuotientEntry& qe = ctx.quotient(n);
      if (lat.node(n).members().subset_of(lat.node(h).members())) {
        // (2) forward direction
        SubgroupRef img = qe.quotient.push_forward(lat.node(h));
        ctx.expect(is_pronormal(qe.quotient.group, img), [&] {
          return "H/N not pronormal though H is: H " + desc(ctx, h) + ", N " + desc(ctx, n);
        });
      }
      // (3) the padded image stays pronormal
      SubgroupRef hn_img = qe.quotient.push_forward(lat.node(h));
      ctx.expect(is_pronormal(qe.quotient.group, hn_img), [&] {
        return "HN/N not pronormal: H " + desc(ctx, h) + ", N " + desc(ctx, n);
      });
    }
  }
}

void suite_L1_13(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const FiniteGroup& g = a.group();

  // self-centralizing minimal normal subgroups != G
  std::vector<int> special;
  for (int n : lat.minimal_normal_nodes()) {
    if (lat.node(n).is_full()) continue;
    if (set_eq(centralizer(g, lat.node(n).members()), lat.node(n))) special.push_back(n);
  }
  if (special.empty()) {
    ctx.skip();
    return;
  }

  bool any_factorization = false;
  for (int ai = 0; ai < lat.size(); ++ai) {
    for (int bi = ai; bi < lat.size(); ++bi) {
      long prod = static_cast<long>(lat.node(ai).order()) * lat.node(bi).order();
      long meet = (lat.node(ai).members() & lat.node(bi).members()).count();
      if (prod != static_cast<long>(g.order()) * meet) continue;
      if (!a.node_nilpotent(ai) || !a.node_nilpotent(bi)) continue;
      any_factorization = true;
      for (int n : special) {
        ctx.expect(meet == 1, [&] {
          return "nilpotent factors intersect nontrivially: A " + desc(ctx, ai) + ", B " +
                 desc(ctx, bi);
        });
        bool in_a = lat.node(n).members().subset_of(lat.node(ai).members());
        bool in_b = lat.node(n).members().subset_of(lat.node(bi).members());
        ctx.expect(in_a || in_b, [&] {
          return "self-centralizing minimal normal subgroup avoids both factors: N " +
                 desc(ctx, n);
        });
        int p = prime_divisors(lat.node(n).order()).front();
        for (auto [inside, factor, other] :
             {std::tuple{in_a, ai, bi}, std::tuple{in_b, bi, ai}}) {
          if (!inside) continue;
          ctx.expect(p_part(lat.node(factor).order(), p) == lat.node(factor).order(), [&] {
            return "factor containing N is not a p-group: " + desc(ctx, factor);
          });
          ctx.expect(lat.node(other).order() % p != 0, [&] {
            return "other factor is not a p'-group: " + desc(ctx, other);
          });
        }
      }
    }
  }
  if (!any_factorization) ctx.skip();
}

// ---- section 2 lemmas -------------------------------------------------------

void suite_L2_1(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const FiniteGroup& g = a.group();

  for (int h : ctx.nodes()) {
    const SubgroupRef& ph = a.node_permutizer(h);
    // (3) the normalizer sits inside the permutizer
    ctx.expect(normalizer(g, lat.node(h)).members().subset_of(ph.members()),
               [&] { return "normalizer escapes the permutizer of " + desc(ctx, h); });
    // (1) permutizers grow with the ambient subgroup
    for (int u : ctx.overgroups_of(h)) {
      SubgroupRef pu = permutizer(lat.node(u), lat.node(h));
      ctx.expect(pu.members().subset_of(ph.members()), [&] {
        return "P_U(H) escapes P_G(H); H " + desc(ctx, h) + ", U " + desc(ctx, u);
      });
    }
    // (2) conjugation equivariance
    for (int x : ctx.elements()) {
      int hx = lat.find(conjugate_set(g, lat.node(h).members(), x));
      ctx.expect(conjugate_set(g, ph.members(), x) == a.node_permutizer(hx).members(), [&] {
        return "P_G(H)^x differs from P_G(H^x); H " + desc(ctx, h) + ", x = " +
               format_cycles(g.element(x));
      });
    }
    for (int n : ctx.normals(true)) {
      QuotientEntry& qe = ctx.quotient(n);
      SubgroupRef img_h = qe.quotient.push_forward(lat.node(h));
      SubgroupRef rhs = permutizer(qe.quotient.group, img_h);
      // (4) the permutizer maps into the quotient permutizer
      ctx.expect(qe.quotient.push_forward(ph).members().subset_of(rhs.members()), [&] {
        return "P_G(H)N/N escapes P_{G/N}(HN/N); H " + desc(ctx, h) + ", N " + desc(ctx, n);
      });
      // (5) equality when N <= H
      if (lat.node(n).members().subset_of(lat.node(h).members())) {
        ctx.expect(set_eq(qe.quotient.push_forward(ph), rhs), [&] {
          return "P_{G/N}(H/N) differs from P_G(H)/N; H " + desc(ctx, h) + ", N " + desc(ctx, n);
        });
      }
    }
  }
}

void suite_L2_2(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();

  for (int h : ctx.nodes()) {
    bool permuteral = a.node_permuteral(h);
    for (int n : ctx.normals(true)) {
      QuotientEntry& qe = ctx.quotient(n);
      SubgroupRef img = qe.quotient.push_forward(lat.node(h));
      int hn = node_checked(lat, set_product(lat.node(h), lat.node(n)));
      if (permuteral) {
        // (1) and (2)
        ctx.expect(is_permuteral(qe.quotient.group, img), [&] {
          return "HN/N not permuteral in G/N; H " + desc(ctx, h) + ", N " + desc(ctx, n);
        });
        ctx.expect(a.node_permuteral(hn), [&] {
          return "HN not permuteral; H " + desc(ctx, h) + ", N " + desc(ctx, n);
        });
      }
      // (3) equivalence when N <= H
      if (lat.node(n).members().subset_of(lat.node(h).members())) {
        ctx.expect(permuteral == is_permuteral(qe.quotient.group, img), [&] {
          return "permuterality does not transfer along G -> G/N; H " + desc(ctx, h) + ", N " +
                 desc(ctx, n);
        });
      }
      // (4) strong permuterality passes to quotients
      if (a.node_strongly_permuteral(h)) {
        const SubgroupLattice& qlat = ctx.quotient_lattice(n);
        ctx.expect(is_strongly_permuteral(qlat, qlat.node_of(img)).value, [&] {
          return "HN/N not strongly permuteral in G/N; H " + desc(ctx, h) + ", N " +
                 desc(ctx, n);
        });
      }
    }
  }
}

void suite_L2_3(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const FiniteGroup& g = a.group();
  int p = a.primes().front(); // largest prime
  std::vector<bool> cyclic(lat.size(), false);
  for (int c = 0; c < lat.size(); ++c) {
    lat.node(c).members().for_each([&](int x) {
      if (g.element_order(x) == lat.node(c).order()) cyclic[c] = true;
    });
  }
  bool hypothesis = false;
  for (int s : lat.sylow(p)) {
    for (int c = 0; c < lat.size() && !hypothesis; ++c) {
      if (!cyclic[c]) continue;
      long meet = (lat.node(s).members() & lat.node(c).members()).count();
      if (static_cast<long>(lat.node(s).order()) * lat.node(c).order() ==
          static_cast<long>(g.order()) * meet)
        hypothesis = true;
    }
    if (hypothesis) break;
  }
  if (!hypothesis) {
    ctx.skip();
    return;
  }
  ctx.expect(a.classification().p_closed.at(p), [&] {
    return "product of the largest-prime Sylow with a cyclic subgroup, but no normal Sylow " +
           std::to_string(p) + "-subgroup";
  });
}

void suite_L2_4(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  int p = a.primes().front();
  int rep = a.sylow_rep_nodes().front();
  if (!a.node_permuteral(rep)) {
    ctx.skip();
    return;
  }
  ctx.expect(a.classification().p_closed.at(p), [&] {
    return "largest-prime Sylow is permuteral but not normal (p = " + std::to_string(p) + ")";
  });
}

void suite_L2_5(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  for (int rep : a.sylow_rep_nodes()) {
    if (!a.node_permuteral(rep)) {
      ctx.skip();
      return;
    }
  }
  ctx.expect(a.classification().ore_dispersive,
             [&] { return "all Sylow subgroups permuteral, yet no normal Sylow tower"; });
}

void suite_L2_6(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  if (!a.classification().supersoluble) {
    ctx.skip();
    return;
  }
  for (int h : ctx.nodes()) {
    if (!a.node_pronormal(h)) continue;
    ctx.expect(a.node_strongly_permuteral(h), [&] {
      return "pronormal subgroup of a supersoluble group is not strongly permuteral: " +
             desc(ctx, h);
    });
  }
  // corollaries: Sylow, Carter and Hall subgroups
  for (int rep : a.sylow_rep_nodes())
    ctx.expect(a.node_strongly_permuteral(rep),
               [&] { return "Sylow rep not strongly permuteral: " + desc(ctx, rep); });
  for (int rep : a.carter_nodes())
    ctx.expect(a.node_strongly_permuteral(rep),
               [&] { return "Carter subgroup not strongly permuteral: " + desc(ctx, rep); });
  for (int rep : a.hall_rep_nodes())
    ctx.expect(a.node_strongly_permuteral(rep),
               [&] { return "Hall rep not strongly permuteral: " + desc(ctx, rep); });
}

void suite_L2_8(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  if (!a.classification().soluble) {
    ctx.skip();
    return;
  }
  for (int rep : a.hall_rep_nodes()) {
    if (!a.node_psn(rep)) continue;
    ctx.expect(a.node_strongly_permuteral(rep), [&] {
      return "chain-connected Hall subgroup is not strongly permuteral: " + desc(ctx, rep);
    });
  }
  // corollary: in a w-supersoluble group every Sylow subgroup qualifies
  if (a.classification().w_supersoluble) {
    for (int rep : a.sylow_rep_nodes())
      ctx.expect(a.node_strongly_permuteral(rep),
                 [&] { return "Sylow rep not strongly permuteral: " + desc(ctx, rep); });
  }
}

void suite_KW(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const FiniteGroup& g = a.group();
  bool found = false;
  for (int ai = 0; ai < lat.size() && !found; ++ai) {
    if (!a.node_nilpotent(ai)) continue;
    for (int bi = ai; bi < lat.size() && !found; ++bi) {
      long meet = (lat.node(ai).members() & lat.node(bi).members()).count();
      if (static_cast<long>(lat.node(ai).order()) * lat.node(bi).order() !=
          static_cast<long>(g.order()) * meet)
        continue;
      if (a.node_nilpotent(bi)) found = true;
    }
  }
  if (!found) {
    ctx.skip();
    return;
  }
  ctx.expect(a.classification().soluble,
             [&] { return "product of nilpotent subgroups is not soluble"; });
}

// ---- section 3 theorems -----------------------------------------------------

void suite_T3_1(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  bool chains = a.classification().w_supersoluble;
  bool strong = true;
  int first_bad = -1;
  for (int rep : a.sylow_rep_nodes()) {
    if (!a.node_strongly_permuteral(rep)) {
      strong = false;
      first_bad = rep;
      break;
    }
  }
  ctx.expect(chains == strong, [&] {
    std::string msg = chains ? "w-supersoluble but Sylow rep fails strong permuterality"
                             : "all Sylow reps strongly permuteral but not w-supersoluble";
    if (first_bad >= 0) msg += ": " + desc(ctx, first_bad);
    return msg;
  });
}

void suite_T3_2(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  if (!a.classification().metanilpotent) {
    ctx.skip();
    return;
  }
  bool s1 = a.classification().supersoluble;
  bool s2 = true, s3 = true;
  for (int rep : a.sylow_rep_nodes()) {
    s2 = s2 && a.node_strongly_permuteral(rep);
    s3 = s3 && a.node_permuteral(rep);
  }
  ctx.expect(s1 == s2, [&] {
    return std::string("supersoluble(") + (s1 ? "yes" : "no") +
           ") vs all-Sylows-strongly-permuteral(" + (s2 ? "yes" : "no") + ")";
  });
  ctx.expect(s1 == s3, [&] {
    return std::string("supersoluble(") + (s1 ? "yes" : "no") + ") vs all-Sylows-permuteral(" +
           (s3 ? "yes" : "no") + ")";
  });
}

void suite_T3_3(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  bool s1 = a.classification().supersoluble;

  bool s4 = true, s5 = true; // Hall statements, exact via class reps
  for (int rep : a.hall_rep_nodes()) {
    s4 = s4 && a.node_strongly_permuteral(rep);
    s5 = s5 && a.node_permuteral(rep);
  }
  ctx.expect(s1 == s4, [&] {
    return std::string("supersoluble(") + (s1 ? "yes" : "no") +
           ") vs all-Halls-strongly-permuteral(" + (s4 ? "yes" : "no") + ")";
  });
  ctx.expect(s1 == s5, [&] {
    return std::string("supersoluble(") + (s1 ? "yes" : "no") + ") vs all-Halls-permuteral(" +
           (s5 ? "yes" : "no") + ")";
  });

  // pronormal statements: full equivalence on exhaustive members, sound
  // one-way instances on sampled ones
  bool s2 = true, s3 = true;
  for (int h : ctx.nodes()) {
    if (!a.node_pronormal(h)) continue;
    bool strong = a.node_strongly_permuteral(h);
    bool perm = a.node_permuteral(h);
    s2 = s2 && strong;
    s3 = s3 && perm;
    if (s1) {
      ctx.expect(strong, [&] {
        return "pronormal subgroup of a supersoluble group not strongly permuteral: " +
               desc(ctx, h);
      });
      ctx.expect(perm, [&] {
        return "pronormal subgroup of a supersoluble group not permuteral: " + desc(ctx, h);
      });
    }
  }
  if (ctx.exhaustive()) {
    ctx.expect(s1 == s2, [&] {
      return std::string("supersoluble(") + (s1 ? "yes" : "no") +
             ") vs all-pronormal-strongly-permuteral(" + (s2 ? "yes" : "no") + ")";
    });
    ctx.expect(s1 == s3, [&] {
      return std::string("supersoluble(") + (s1 ? "yes" : "no") +
             ") vs all-pronormal-permuteral(" + (s3 ? "yes" : "no") + ")";
    });
  }
}

void suite_C3_3_1(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  for (int rep : a.hall_rep_nodes()) {
    if (!a.node_psn(rep)) {
      ctx.skip();
      return;
    }
  }
  ctx.expect(a.classification().supersoluble,
             [&] { return "every Hall subgroup chain-connected, yet not supersoluble"; });
}

void suite_T3_4(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const FiniteGroup& g = a.group();
  bool s1 = a.classification().supersoluble;

  if (s1) {
    // the Fitting subgroup times any Carter subgroup factorizes the group,
    // with both factors (strongly) permuteral
    int f = a.fitting_node();
    auto carters = a.carter_nodes();
    ctx.expect(!carters.empty(), [&] { return "supersoluble member without Carter subgroups"; });
    for (int c : carters) {
      long meet = (lat.node(f).members() & lat.node(c).members()).count();
      ctx.expect(static_cast<long>(lat.node(f).order()) * lat.node(c).order() ==
                     static_cast<long>(g.order()) * meet,
                 [&] { return "F(G) times Carter " + desc(ctx, c) + " misses the group"; });
      ctx.expect(a.node_permuteral(c) && a.node_strongly_permuteral(c),
                 [&] { return "Carter factor not (strongly) permuteral: " + desc(ctx, c); });
    }
    ctx.expect(a.node_permuteral(f) && a.node_strongly_permuteral(f),
               [&] { return "Fitting factor not (strongly) permuteral"; });
  }

  // converse: any factorization into permuteral nilpotent subgroups forces
  // supersolubility (exact: the pair scan is an order computation)
  bool factored = false;
  std::pair<int, int> pair_witness{-1, -1};
  for (int ai = 0; ai < lat.size() && !factored; ++ai) {
    if (!a.node_nilpotent(ai)) continue;
    for (int bi = ai; bi < lat.size() && !factored; ++bi) {
      long meet = (lat.node(ai).members() & lat.node(bi).members()).count();
      if (static_cast<long>(lat.node(ai).order()) * lat.node(bi).order() !=
          static_cast<long>(g.order()) * meet)
        continue;
      if (!a.node_nilpotent(bi)) continue;
      if (a.node_permuteral(ai) && a.node_permuteral(bi)) {
        factored = true;
        pair_witness = {ai, bi};
      }
    }
  }
  ctx.expect(factored == s1, [&] {
    if (factored)
      return "permuteral nilpotent factorization A " + desc(ctx, pair_witness.first) + ", B " +
             desc(ctx, pair_witness.second) + " in a non-supersoluble group";
    return std::string("supersoluble group admits no permuteral nilpotent factorization");
  });
}

void suite_C3_4_1(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  if (a.primes().size() != 2) {
    ctx.skip();
    return;
  }
  // biprimary: any Sylow p with any Sylow q multiplies out to the group
  auto reps = a.sylow_rep_nodes();
  bool both = a.node_permuteral(reps[0]) && a.node_permuteral(reps[1]);
  ctx.expect(both == a.classification().supersoluble, [&] {
    return std::string("Sylow-pair factorization: permuteral-pair(") + (both ? "yes" : "no") +
           ") vs supersoluble(" + (a.classification().supersoluble ? "yes" : "no") + ")";
  });
}

void suite_C3_4_2(MemberContext& ctx) {
  GroupAnalysis& a = ctx.a;
  const SubgroupLattice& lat = a.lattice();
  const FiniteGroup& g = a.group();
  int f = a.fitting_node();
  bool exists = false;
  for (int c : a.carter_nodes()) {
    long meet = (lat.node(f).members() & lat.node(c).members()).count();
    if (static_cast<long>(lat.node(f).order()) * lat.node(c).order() !=
        static_cast<long>(g.order()) * meet)
      continue;
    if (a.node_permuteral(c)) {
      exists = true;
      break;
    }
  }
  ctx.expect(exists == a.classification().supersoluble, [&] {
    return std::string("F(G)·Carter factorization with a permuteral Carter factor: ") +
           (exists ? "found" : "none") + ", supersoluble: " +
           (a.classification().supersoluble ? "yes" : "no");
  });
}

} // namespace

const std::vector<SuiteDef>& suite_registry() {
  static const std::vector<SuiteDef> defs = {
      {"L1.1", "chief factor centralizers contain the p-nilpotent radicals and the induced "
               "action has no normal p-part",
       suite_L1_1},
      {"L1.2", "residuals commute with quotients: (G/K)^F = G^F K/K for the nilpotent and "
               "supersoluble classes",
       suite_L1_2},
      {"L1.3", "in G/Phi(G) of a soluble group the Fitting subgroup is self-centralizing and "
               "equals the socle",
       suite_L1_3},
      {"L1.5", "prime-index chain calculus: restriction, quotients, intersections, "
               "transitivity, conjugation, residual floor",
       suite_L1_5},
      {"P1.6", "groups whose Sylow subgroups all admit prime-index chains have a normal Sylow "
               "tower",
       suite_P1_6},
      {"T1.7-local", "the local membership test agrees with the Sylow-chain definition",
       suite_T1_7_local},
      {"T1.8", "biprimary subgroups inherit supersolubility when all Sylow subgroups admit "
               "prime-index chains",
       suite_T1_8},
      {"T1.9", "a chief p-factor has prime order exactly when its induced automorphism group "
               "is abelian of exponent dividing p-1",
       suite_T1_9},
      {"L1.10", "normalizers of pronormal subgroups are abnormal", suite_L1_10},
      {"L1.11", "the four characterizations of abnormality agree", suite_L1_11},
      {"L1.12", "pronormality persists in intermediates and transfers along quotients",
       suite_L1_12},
      {"L1.13", "nilpotent factorizations with a self-centralizing minimal normal subgroup "
               "split into a p-group and a p'-group",
       suite_L1_13},
      {"L2.1", "permutizer calculus: monotonicity, conjugation, normalizer floor, quotient "
               "compatibility",
       suite_L2_1},
      {"L2.2", "permuterality transfers to padded subgroups and quotients", suite_L2_2},
      {"L2.3", "largest-prime Sylow times a cyclic subgroup forces a normal Sylow subgroup",
       suite_L2_3},
      {"L2.4", "a permuteral largest-prime Sylow subgroup is normal", suite_L2_4},
      {"L2.5", "all Sylow subgroups permuteral forces a normal Sylow tower", suite_L2_5},
      {"L2.6", "in supersoluble groups pronormal subgroups (hence Sylow, Carter and Hall "
               "subgroups) are strongly permuteral",
       suite_L2_6},
      {"L2.8", "in soluble groups chain-connected Hall subgroups are strongly permuteral",
       suite_L2_8},
      {"KW", "a product of two nilpotent subgroups is soluble", suite_KW},
      {"T3.1", "w-supersoluble exactly when every Sylow subgroup is strongly permuteral",
       suite_T3_1},
      {"T3.2", "for metanilpotent groups: supersoluble, all Sylows strongly permuteral and "
               "all Sylows permuteral coincide",
       suite_T3_2},
      {"T3.3", "supersoluble exactly when every pronormal (equivalently Hall) subgroup is "
               "(strongly) permuteral",
       suite_T3_3},
      {"C3.3.1", "all Hall subgroups chain-connected forces supersolubility", suite_C3_3_1},
      {"T3.4", "supersoluble exactly when the group is a product of permuteral nilpotent "
               "subgroups",
       suite_T3_4},
      {"C3.4.1", "a product of two Sylow subgroups is supersoluble exactly when both factors "
                 "are permuteral",
       suite_C3_4_1},
      {"C3.4.2", "supersoluble exactly when the Fitting subgroup times a permuteral Carter "
                 "subgroup factorizes the group",
       suite_C3_4_2},
  };
  return defs;
}

} // namespace permlab::detail
