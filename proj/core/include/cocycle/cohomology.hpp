#pragma once

// H^2(G;T) for finite G through modular linear algebra.  Cocycles take
// values in Z/m (additively, v standing for exp(2*pi*i*v/m)); a mu_m-valued
// cocycle bounds in T exactly when it bounds over mu_M with
// M = m * exp(G^ab), so T-triviality is decided over Z/M.

#include "cocycle/group.hpp"
#include "cocycle/zn.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cocycle {

struct Cocycle {
  GroupPtr group;
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> table; // n x n, normalized

  std::uint32_t at(int g, int h) const { return table[std::size_t(g) * group->order() + h]; }
  void set(int g, int h, std::uint32_t v) { table[std::size_t(g) * group->order() + h] = v; }

  static Cocycle zero(GroupPtr g, std::uint32_t modulus);
  /// Validates normalization and the cocycle identity; throws otherwise.
  static Cocycle from_table(GroupPtr g, std::uint32_t modulus, std::vector<std::uint32_t> table);

  Cocycle add(const Cocycle& other) const;
  Cocycle sub(const Cocycle& other) const;
  /// (g.c)(x,y) = c(g^-1 x g, g^-1 y g)
  Cocycle conjugated_by(int g) const;
  bool is_valid() const;
};

/// d(phi)(g,h) = phi(g) + phi(h) - phi(gh) for a 1-cochain phi (phi(e) = 0).
Cocycle coboundary_of(GroupPtr g, std::uint32_t modulus, const std::vector<std::uint32_t>& phi);

class CohClassSet {
public:
  GroupPtr group;
  std::uint32_t modulus = 1;          // m = |G|
  std::uint32_t extended_modulus = 1; // M = m * exp(G^ab)
  std::vector<std::uint32_t> invariant_factors;
  std::vector<Cocycle> transversal; // empty if the class count exceeds the cap
  std::uint64_t class_count = 1;

  bool is_t_coboundary(const Cocycle& c) const;
  bool cohomologous(const Cocycle& c1, const Cocycle& c2) const;
  /// Index of the transversal class c belongs to.
  std::optional<std::size_t> class_of(const Cocycle& c) const;

  // membership data: Howell span of (M/m)-scaled T-coboundaries over Z/M
  zn::Ring ring_m{1};
  zn::RowSpan t_coboundaries{zn::Ring{1}, 0};
};

struct H2Options {
  int max_order = 36;
  std::uint64_t transversal_cap = 4096;
};

CohClassSet h2_classes(GroupPtr g, const H2Options& opt = {});

bool is_t_coboundary(const Cocycle& c);
bool cohomologous(const Cocycle& c1, const Cocycle& c2);

/// h |-> c(g,h) - c(h,g) on the centralizer of g; verified to be a
/// homomorphism into Z/m.
std::map<int, std::uint32_t> antisym_character(const Cocycle& c, int g);

bool is_nondegenerate(const Cocycle& c);

/// Dimension of the center of the twisted group algebra C[G;c], computed as
/// an exact linear system over the m-th cyclotomic field.
int twisted_center_dim(const Cocycle& c);

bool is_central_type(GroupPtr g, const H2Options& opt = {});

struct DualH2Row {
  Subgroup subgroup;
  std::uint64_t h2_order = 1;
  std::uint64_t nondegenerate_classes = 0;
  std::uint64_t nondegenerate_orbits = 0;
};

struct DualH2Report {
  GroupPtr group;
  std::vector<DualH2Row> rows;
  std::uint64_t total = 0; // |H^2(G-hat;T)| = sum of orbit counts
};

DualH2Report dual_h2_report(GroupPtr g, const H2Options& opt = {});

} // namespace cocycle
