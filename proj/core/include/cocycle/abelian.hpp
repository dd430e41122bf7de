#pragma once

// Finite abelian groups with their duals, alternating forms classifying
// H^2(A-hat;T), K-actions, and the tau homomorphism
// H^2(A-hat;T)^K -> H^2(K;A) built from cochains z_g with c = c^g + dz_g
// and b(g,h) = z_g + (z_h)^g - z_{gh}.

#include "cocycle/cohomology.hpp"
#include "cocycle/group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cocycle {

struct AbelianGroup {
  std::vector<int> factors; // invariant factors d1 | d2 | ... | dr, each >= 2

  int order() const;
  int exponent() const { return factors.empty() ? 1 : factors.back(); }
  int rank() const { return int(factors.size()); }

  // elements are tuples, encoded mixed-radix with the first factor most
  // significant; 0 is the identity
  std::vector<int> tuple(int index) const;
  int index(const std::vector<int>& tuple) const;
  int add(int a, int b) const;
  int neg(int a) const;

  /// The same group as a multiplication table (element order preserved).
  GroupPtr as_group() const;

  static AbelianGroup from_factors(std::vector<int> factors); // validates chain
};

/// <chi, a> = sum_i chi_i a_i (m / d_i) mod m, m = exp(A).  A perfect pairing
/// identifying A-hat with A's own tuple model.
int dual_pairing(const AbelianGroup& a, int chi, int elem);

struct AlternatingForm {
  AbelianGroup group;                 // the A whose dual carries the form
  std::vector<std::vector<int>> b;    // r x r, b[i][j] in Z/gcd(d_i,d_j), antisymmetric

  /// Value on dual characters, in Z/exp(A).
  int value(int chi, int psi) const;
  bool is_zero() const;
  bool operator==(const AlternatingForm& o) const { return b == o.b; }
};

std::vector<AlternatingForm> alternating_classes(const AbelianGroup& a);

/// Upper-triangular representative cocycle on A-hat (realized on as_group()).
Cocycle form_to_cocycle(const AlternatingForm& form);

/// Antisymmetrization of a cocycle on A-hat, recovered as a form.
AlternatingForm cocycle_to_form(const AbelianGroup& a, const Cocycle& c);

struct RadicalAndB {
  std::vector<int> radical; // dual characters chi with form(chi,.) = 0
  std::vector<int> b;       // elements of A annihilated by every radical character
};
RadicalAndB radical_and_b(const AlternatingForm& form);

struct KAction {
  GroupPtr k;
  AbelianGroup a;
  std::vector<std::vector<int>> table; // per K element, permutation of A indices

  int act(int g, int elem) const { return table[g][elem]; }
  /// Action on dual characters: (g . chi)(a) = chi(g^-1 . a).
  int act_dual(int g, int chi) const;

  static std::shared_ptr<const KAction> make(GroupPtr k, AbelianGroup a,
                                             std::vector<std::vector<int>> table);
};
using KActionPtr = std::shared_ptr<const KAction>;

/// Forms fixed by the induced K-action on A-hat (class-invariance equals
/// form-invariance for abelian duals).
std::vector<AlternatingForm> k_invariant_classes(const KAction& act);

struct ExtensionCocycle {
  KActionPtr action;
  std::vector<std::vector<int>> table; // |K| x |K| -> A element index

  bool is_zero() const;
  static ExtensionCocycle zero(KActionPtr act);
  /// Validates normalization and the twisted cocycle identity.
  static ExtensionCocycle from_table(KActionPtr act, std::vector<std::vector<int>> table);
  ExtensionCocycle add(const ExtensionCocycle& o) const;
  ExtensionCocycle sub(const ExtensionCocycle& o) const;
};

/// z_g with c = c^g + d z_g over Z/M (M = exp(A) * modulus of c), z_e = 0,
/// solved deterministically.  order_seed permutes the solver's generator
/// order (solution changes by a coboundary only).
std::vector<std::uint32_t> solve_z(const KAction& act, const Cocycle& c, int g,
                                   std::uint64_t order_seed = 0);

/// The tau homomorphism applied to one invariant cocycle.
ExtensionCocycle tau(KActionPtr act, const Cocycle& c, std::uint64_t order_seed = 0);

/// True if diff is the coboundary of some 1-cochain K -> A (twisted action).
bool is_extension_coboundary(const KAction& act, const ExtensionCocycle& diff);

/// Transversal of H^2(K;A) classes (at most cap of them).
std::vector<ExtensionCocycle> extension_class_transversal(KActionPtr act, std::size_t cap);

GroupPtr extension_group(const KAction& act, const ExtensionCocycle& b);

struct MonoidalPairCertificate {
  KActionPtr action;
  GroupPtr g1, g2;
  bool groups_isomorphic = true;
  bool form_degenerate = false;     // flagged: uniqueness claims differ
  AlternatingForm form;
  ExtensionCocycle b1, tau_c;
  std::string description;
};

MonoidalPairCertificate monoidal_pair(KActionPtr act, const Cocycle& c,
                                      const ExtensionCocycle& b1);

struct PairSearchOptions {
  int max_a = 81;
  int max_k = 24;
  int max_group = 128;        // |A| * |K| bound for candidates actually built
  std::size_t b1_cap = 64;    // H^2(K;A) transversal classes tried per action
  std::size_t max_certified = 1;
  bool require_nonisomorphic = true;
};

/// Search for extension pairs differing by a tau image, preferring small
/// orders; stops after max_certified nonisomorphic pairs.
std::vector<MonoidalPairCertificate> monoidal_pair_search(const PairSearchOptions& opt);

/// Automorphisms of A as permutations of element indices (all of them when
/// the generator-image enumeration stays under cap, else empty).
std::vector<std::vector<int>> automorphism_group(const AbelianGroup& a, std::size_t cap = 2'000'000);

/// Action tables for homomorphisms K -> Aut(A); first generator image is
/// deduplicated by permutation cycle type when Aut(A) is large.
std::vector<std::vector<std::vector<int>>> enumerate_actions(GroupPtr k, const AbelianGroup& a,
                                                             std::size_t cap = 4096);

struct H2FgAbelian {
  int torus_rank = 0;
  std::vector<int> invariant_factors;
};

/// H^2 of the dual of a compact abelian Lie group with dual Z^r + sum Z/d_i:
/// Hom(wedge^2 Gamma, T) split into a torus rank and a finite part.
H2FgAbelian h2_fg_abelian(int free_rank, const std::vector<int>& torsion);

/// Invariant factor form of a direct sum of cyclic groups (arbitrary orders).
std::vector<int> invariant_factor_form(std::vector<int> cyclic_orders);

} // namespace cocycle
