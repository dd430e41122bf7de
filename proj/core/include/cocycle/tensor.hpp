#pragma once

// Exact group-algebra tensors: dual cocycles F on G-hat as elements of
// CG (x) CG with cyclotomic coefficients, their R-matrices R = F_21 F^*, and
// the slice spans whose rank and support decide nondegeneracy and the
// minimal-subalgebra support.

#include "cocycle/abelian.hpp"
#include "cocycle/cohomology.hpp"
#include "cocycle/cyclotomic.hpp"
#include "cocycle/group.hpp"

#include <vector>

namespace cocycle {

class GroupTensor {
public:
  GroupTensor(GroupPtr g, int degree, std::uint32_t conductor);
  static GroupTensor identity(GroupPtr g, int degree, std::uint32_t conductor);

  const GroupPtr& group() const { return group_; }
  int degree() const { return degree_; }
  std::uint32_t conductor() const { return conductor_; }

  const Cyclotomic& at(std::span<const int> idx) const { return coeff_[flat(idx)]; }
  void set(std::span<const int> idx, Cyclotomic v) { coeff_[flat(idx)] = std::move(v); }
  const Cyclotomic& at2(int g, int h) const;
  void set2(int g, int h, Cyclotomic v);

  GroupTensor mul(const GroupTensor& o) const;       // leg-wise convolution
  GroupTensor star() const;                          // conjugate coefficients, invert indices
  GroupTensor flip21() const;                        // degree 2 only
  GroupTensor add(const GroupTensor& o) const;
  bool operator==(const GroupTensor& o) const;
  bool is_identity() const;

  /// Delta (x) iota and iota (x) Delta of a degree-2 tensor (degree 3 results).
  GroupTensor coproduct_left() const;
  GroupTensor coproduct_right() const;
  /// T (x) 1 and 1 (x) T of a degree-2 tensor.
  GroupTensor tensor_with_unit_right() const;
  GroupTensor tensor_with_unit_left() const;

  /// m(T) = sum T(g,h) gh as a degree-1 tensor (Drinfeld-element check).
  GroupTensor multiplied_legs() const;

  std::size_t nonzero_count() const;

private:
  std::size_t flat(std::span<const int> idx) const;
  GroupPtr group_;
  int degree_;
  std::uint32_t conductor_;
  std::vector<Cyclotomic> coeff_;
};

/// A subgroup of g with an explicit splitting into cyclic factors; cocycles
/// on the dual are indexed by the same tuple model.
struct AbelianStructure {
  Subgroup subgroup;
  AbelianGroup group;
  std::vector<int> to_parent;   // tuple index -> parent element
  std::vector<int> from_parent; // parent element -> tuple index, -1 outside
};

AbelianStructure abelian_structure(GroupPtr g, const Subgroup& s);

/// F = sum_{chi,psi} zeta^{c(chi,psi)} e_chi (x) e_psi embedded in CG (x) CG;
/// unitarity is verified.  The conductor is lcm(modulus of c, exp(G)).
GroupTensor embed_dual_cocycle(GroupPtr g, const AbelianStructure& a, const Cocycle& c);

/// (F (x) 1)(Delta (x) i)(F) = (1 (x) F)(i (x) Delta)(F), exactly.  Dense for
/// |G| <= 16, streaming comparison above that.
bool check_dual_cocycle(const GroupTensor& f);

/// R = F_21 F^*; triangularity (R_21 = R^*, R_21 R = 1) is verified.
GroupTensor r_matrix(const GroupTensor& f);

struct SliceSpan {
  std::vector<std::vector<Cyclotomic>> basis; // row-space basis of the G x G matrix
  std::size_t rank = 0;
  Subgroup support; // subgroup generated by the supports of the basis slices
};

SliceSpan slice_span(const GroupTensor& r);

/// F^* F_21 commutes with g (x) g for every g (twisted coproduct cocommutative).
bool is_cocommutative_twist(const GroupTensor& f);

} // namespace cocycle
