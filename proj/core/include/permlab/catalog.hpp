#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permlab/group.hpp"

namespace permlab {

// Standard families, realized by their natural actions.
FiniteGroup make_cyclic(int n, const Limits& limits = {});
FiniteGroup make_dihedral(int n, const Limits& limits = {});          // order 2n, n >= 3
FiniteGroup make_symmetric(int n, const Limits& limits = {});
FiniteGroup make_alternating(int n, const Limits& limits = {});
FiniteGroup make_elementary_abelian(int p, int k, const Limits& limits = {});
/// Acts on the disjoint union of the two point sets.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});

/// Order 168, degree 8: the projective line over the 7-element field under
/// x -> x+1 and x -> -1/x. Simplicity and order are asserted at build time.
FiniteGroup make_psl27(const Limits& limits = {});

/// Order 16 with distinguished generators a, b satisfying
/// a^4 = b^4 = (ab)^2 = (a^-1 b)^2 = 1. Found by scanning degree-8
/// permutation pairs in canonical order for the first pair satisfying the
/// relations with closure of order exactly 16; the relations bound any such
/// closure by 16, so every hit realizes the same group.
struct Example27 {
  FiniteGroup group;
  Perm a, b;
};
Example27 make_example_2_7(const Limits& limits = {});

/// Order 294, degree 49: translations of a 2-dimensional space over the
/// 7-element field extended by S3 acting irreducibly. Irreducibility (no
/// invariant line among the 8) and the order are asserted at build time.
FiniteGroup make_wu_not_u(const Limits& limits = {});

struct CatalogEntry {
  std::string name;
  int expected_order;
  std::string note;
  std::function<FiniteGroup(const Limits&)> make;
};

/// Registered named groups, in the deterministic listing order.
const std::vector<CatalogEntry>& catalog();
bool catalog_has(const std::string& name);
/// Builds a catalog group; the constructed order is asserted against the
/// entry's expected order. Throws std::invalid_argument for unknown names.
FiniteGroup catalog_make(const std::string& name, const Limits& limits = {});

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Comma list of catalog names and expanders. "subgroups-of:<name>" yields
/// one standalone group per conjugacy class of subgroups, in canonical class
/// order, named <name>:sub01... The literal "default" expands to every
/// catalog entry plus subgroups-of:S4 and subgroups-of:S5.
std::vector<NamedGroup> corpus(const std::string& spec, const Limits& limits = {});

std::string default_corpus_spec();

} // namespace permlab
