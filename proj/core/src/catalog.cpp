#include "permlab/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "permlab/classify.hpp"
#include "permlab/group_ops.hpp"
#include "permlab/lattice.hpp"

namespace permlab {

namespace {

Perm rotation(int n) {
  std::vector<std::uint16_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
  return Perm{std::move(img)};
}

Perm transposition(int n, int a, int b) {
  Perm id = Perm::identity(n);
  std::vector<std::uint16_t> img(id.images());
  std::swap(img[a], img[b]);
  return Perm{std::move(img)};
}

void check_order(const FiniteGroup& g, long expected, const char* what) {
  if (g.order() != expected)
    throw std::logic_error(std::string(what) + ": built order " + std::to_string(g.order()) +
                           ", expected " + std::to_string(expected));
}

} // namespace

FiniteGroup make_cyclic(int n, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("cyclic order must be positive");
  FiniteGroup g = n == 1 ? FiniteGroup::closure(1, {}, limits)
                         : FiniteGroup::closure(n, {rotation(n)}, limits);
  check_order(g, n, "cyclic");
  return g;
}

FiniteGroup make_dihedral(int n, const Limits& limits) {
  if (n < 3) throw std::invalid_argument("dihedral needs n >= 3");
  std::vector<std::uint16_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((n - i) % n);
  FiniteGroup g = FiniteGroup::closure(n, {rotation(n), Perm{std::move(img)}}, limits);
  check_order(g, 2L * n, "dihedral");
  return g;
}

FiniteGroup make_symmetric(int n, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("symmetric needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(transposition(n, 0, 1));
  if (n >= 3) gens.push_back(rotation(n));
  FiniteGroup g = FiniteGroup::closure(n, std::move(gens), limits);
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  check_order(g, fact, "symmetric");
  return g;
}

FiniteGroup make_alternating(int n, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("alternating needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 3) {
    gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
    if (n > 3) {
      if (n % 2 == 1)
        gens.push_back(rotation(n));
      else {
        std::vector<int> cyc(n - 1);
        std::iota(cyc.begin(), cyc.end(), 1);
        gens.push_back(Perm::from_cycles(n, {cyc}));
      }
    }
  }
  FiniteGroup g = FiniteGroup::closure(n, std::move(gens), limits);
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  check_order(g, n <= 2 ? 1 : fact / 2, "alternating");
  return g;
}

FiniteGroup make_elementary_abelian(int p, int k, const Limits& limits) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (k < 1) throw std::invalid_argument("rank must be positive");
  int degree = p * k;
  std::vector<Perm> gens;
  for (int c = 0; c < k; ++c) {
    std::vector<std::uint16_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < p; ++i) img[c * p + i] = static_cast<std::uint16_t>(c * p + (i + 1) % p);
    gens.emplace_back(std::move(img));
  }
  FiniteGroup g = FiniteGroup::closure(degree, std::move(gens), limits);
  long expected = 1;
  for (int i = 0; i < k; ++i) expected *= p;
  check_order(g, expected, "elementary abelian");
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  int degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& p : a.generators()) {
    std::vector<std::uint16_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < a.degree(); ++i) img[i] = static_cast<std::uint16_t>(p(i));
    gens.emplace_back(std::move(img));
  }
  for (const Perm& p : b.generators()) {
    std::vector<std::uint16_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < b.degree(); ++i)
      img[a.degree() + i] = static_cast<std::uint16_t>(a.degree() + p(i));
    gens.emplace_back(std::move(img));
  }
  FiniteGroup g = FiniteGroup::closure(degree, std::move(gens), limits);
  check_order(g, static_cast<long>(a.order()) * b.order(), "direct product");
  return g;
}

FiniteGroup make_psl27(const Limits& limits) {
  // points 1..7 are the field elements 0..6, point 8 is infinity
  Perm translate = Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6}});
  Perm neg_inv = Perm::from_cycles(8, {{0, 7}, {1, 6}, {2, 3}, {4, 5}}); // x -> -1/x
  FiniteGroup g = FiniteGroup::closure(8, {translate, neg_inv}, limits);
  check_order(g, 168, "psl27");
  auto minimal = minimal_normal_subgroups(g);
  if (minimal.size() != 1 || minimal.front().order() != 168)
    throw std::logic_error("psl27: expected a simple group");
  return g;
}

Example27 make_example_2_7(const Limits&) {
  // scan degree-8 pairs in canonical order for the defining relations with
  // closure of order exactly 16; the relations bound every such closure by
  // 16, so the first hit realizes the presented group
  const int degree = 8;
  std::vector<Perm> order4;
  {
    std::vector<std::uint16_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    do {
      Perm p{img};
      long o = p.order();
      if (o == 1 || o == 2 || o == 4) order4.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
  }
  for (const Perm& a : order4) {
    Perm ainv = a.inverse();
    for (const Perm& b : order4) {
      Perm ab = a.then(b);
      if (!ab.then(ab).is_identity()) continue;
      Perm aib = ainv.then(b);
      if (!aib.then(aib).is_identity()) continue;
      try {
        Limits tight;
        tight.max_order = 16;
        FiniteGroup g = FiniteGroup::closure(degree, {a, b}, tight);
        if (g.order() != 16) continue;
        return Example27{std::move(g), a, b};
      } catch (const CapExceeded&) {
        continue;
      }
    }
  }
  throw std::logic_error("no degree-8 realization of the order-16 relations");
}

FiniteGroup make_wu_not_u(const Limits& limits) {
  // affine action on the 49 points of a 2-dimensional space over F7
  auto pt = [](int x, int y) { return 7 * x + y; };
  auto lin = [&](int m00, int m01, int m10, int m11) {
    std::vector<std::uint16_t> img(49);
    for (int x = 0; x < 7; ++x)
      for (int y = 0; y < 7; ++y)
        img[pt(x, y)] = static_cast<std::uint16_t>(
            pt(((m00 * x + m01 * y) % 7 + 7) % 7, ((m10 * x + m11 * y) % 7 + 7) % 7));
    return Perm{std::move(img)};
  };
  std::vector<std::uint16_t> t1(49), t2(49);
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y) {
      t1[pt(x, y)] = static_cast<std::uint16_t>(pt((x + 1) % 7, y));
      t2[pt(x, y)] = static_cast<std::uint16_t>(pt(x, (y + 1) % 7));
    }
  Perm rot3 = lin(0, -1, 1, -1);  // order 3
  Perm refl = lin(-1, 1, 0, 1);   // order 2

  // the two matrices must leave no line invariant (irreducible module)
  for (int lx = 0; lx < 7; ++lx)
    for (int ly = 0; ly < 7; ++ly) {
      if (lx == 0 && ly == 0) continue;
      if (lx != 0 && lx != 1) continue; // line reps: (1, y) and (0, 1)
      if (lx == 0 && ly != 1) continue;
      bool invariant = true;
      for (const Perm* m : {&rot3, &refl}) {
        int image = m->apply(pt(lx, ly));
        int ix = image / 7, iy = image % 7;
        // (ix, iy) must be a multiple of (lx, ly)
        bool multiple = false;
        for (int c = 0; c < 7 && !multiple; ++c)
          multiple = (c * lx % 7 == ix) && (c * ly % 7 == iy);
        if (!multiple) invariant = false;
      }
      if (invariant) throw std::logic_error("wu-not-u: module has an invariant line");
    }

  FiniteGroup g = FiniteGroup::closure(49, {Perm{std::move(t1)}, Perm{std::move(t2)}, rot3, refl},
                                       limits);
  check_order(g, 294, "wu-not-u");
  return g;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string name, int order, std::string note,
                 std::function<FiniteGroup(const Limits&)> make) {
    entries.push_back(CatalogEntry{std::move(name), order, std::move(note), std::move(make)});
  };
  auto cyclic = [](int n) {
    return [n](const Limits& l) { return make_cyclic(n, l); };
  };
  add("Z1", 1, "trivial group", cyclic(1));
  add("Z2", 2, "cyclic", cyclic(2));
  add("Z3", 3, "cyclic", cyclic(3));
  add("Z4", 4, "cyclic", cyclic(4));
  add("V4", 4, "elementary abelian 2^2",
      [](const Limits& l) { return make_elementary_abelian(2, 2, l); });
  add("Z5", 5, "cyclic", cyclic(5));
  add("Z6", 6, "cyclic", cyclic(6));
  add("S3", 6, "symmetric, degree 3", [](const Limits& l) { return make_symmetric(3, l); });
  add("Z7", 7, "cyclic", cyclic(7));
  add("Z8", 8, "cyclic", cyclic(8));
  add("D4", 8, "dihedral on a square", [](const Limits& l) { return make_dihedral(4, l); });
  add("E8", 8, "elementary abelian 2^3",
      [](const Limits& l) { return make_elementary_abelian(2, 3, l); });
  add("Z9", 9, "cyclic", cyclic(9));
  add("D5", 10, "dihedral on a pentagon", [](const Limits& l) { return make_dihedral(5, l); });
  add("A4", 12, "alternating, degree 4", [](const Limits& l) { return make_alternating(4, l); });
  add("D6", 12, "dihedral on a hexagon", [](const Limits& l) { return make_dihedral(6, l); });
  add("Z12", 12, "cyclic", cyclic(12));
  add("D7", 14, "dihedral on a heptagon", [](const Limits& l) { return make_dihedral(7, l); });
  add("example2.7", 16, "order 16 from the two-generator relations, degree-8 search",
      [](const Limits& l) { return make_example_2_7(l).group; });
  add("Z3xS3", 18, "direct product",
      [](const Limits& l) { return direct_product(make_cyclic(3, l), make_symmetric(3, l), l); });
  add("S4", 24, "symmetric, degree 4", [](const Limits& l) { return make_symmetric(4, l); });
  add("Z2xA4", 24, "direct product",
      [](const Limits& l) { return direct_product(make_cyclic(2, l), make_alternating(4, l), l); });
  add("Z30", 30, "cyclic", cyclic(30));
  add("A5", 60, "alternating, degree 5; simple",
      [](const Limits& l) { return make_alternating(5, l); });
  add("S5", 120, "symmetric, degree 5", [](const Limits& l) { return make_symmetric(5, l); });
  add("psl27", 168, "projective action on the 7-element projective line",
      [](const Limits& l) { return make_psl27(l); });
  add("wu-not-u", 294, "affine plane over F7 extended by an irreducible S3",
      [](const Limits& l) { return make_wu_not_u(l); });
  return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool catalog_has(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return true;
  return false;
}

FiniteGroup catalog_make(const std::string& name, const Limits& limits) {
  for (const auto& e : catalog()) {
    if (e.name == name) {
      FiniteGroup g = e.make(limits);
      check_order(g, e.expected_order, e.name.c_str());
      return g;
    }
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::string default_corpus_spec() {
  std::string spec;
  for (const auto& e : catalog()) {
    if (!spec.empty()) spec += ',';
    spec += e.name;
  }
  spec += ",subgroups-of:S4,subgroups-of:S5";
  return spec;
}

namespace {

void expand_subgroups_of(const std::string& parent_name, const Limits& limits,
                         std::vector<NamedGroup>& out) {
  FiniteGroup parent = catalog_make(parent_name, limits);
  SubgroupLattice lattice = SubgroupLattice::build(parent, limits);
  std::vector<int> reps = lattice.class_representatives();
  int width = reps.size() >= 100 ? 3 : 2;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ":sub%0*d", width, static_cast<int>(i + 1));
    out.push_back(NamedGroup{parent_name + buf, lattice.node(reps[i]).as_group()});
  }
}

} // namespace

std::vector<NamedGroup> corpus(const std::string& spec, const Limits& limits) {
  std::vector<NamedGroup> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string item =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? spec.size() + 1 : comma + 1;
    if (item.empty()) continue;
    if (item == "default") {
      auto sub = corpus(default_corpus_spec(), limits);
      out.insert(out.end(), std::make_move_iterator(sub.begin()),
                 std::make_move_iterator(sub.end()));
    } else if (item.rfind("subgroups-of:", 0) == 0) {
      expand_subgroups_of(item.substr(13), limits, out);
    } else {
      out.push_back(NamedGroup{item, catalog_make(item, limits)});
    }
  }
  return out;
}

} // namespace permlab
