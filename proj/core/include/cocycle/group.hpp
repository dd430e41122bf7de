#pragma once

// Finite groups as explicit multiplication tables.  Element 0 is always the
// identity; conjugacy, subgroup and isomorphism machinery works directly on
// the table, which keeps everything exact and order-independent.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cocycle {

class FiniteGroup {
public:
  static FiniteGroup from_table(int n, std::vector<int> table,
                                std::vector<std::string> labels = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[std::size_t(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1
  int element_order(int a) const;
  int exponent() const;
  bool is_abelian() const;

  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  FiniteGroup() = default;
  int n_ = 1;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements; // strictly increasing, contains 0

  int order() const { return int(elements.size()); }
  bool contains(int g) const;
};

/// Plain data describing an extension of K by an abelian group A: the
/// underlying set is A x K with (a,g)(a',g') = (a + g.a' + b(g,g'), g g').
struct ExtensionTable {
  std::vector<int> a_factors;      // invariant factors of A, d1 | d2 | ...
  std::shared_ptr<struct GroupSpec> k;
  std::vector<std::vector<int>> action; // per k-element, permutation of A's element indices
  std::vector<std::vector<int>> b;      // |K| x |K| table of A element indices (may be empty = zero)
};

struct GroupSpec {
  enum class Kind {
    cyclic,
    dihedral,   // parameter = group order (even, >= 2)
    symmetric,  // parameter = number of letters, <= 5
    quaternion8,
    direct_product,
    semidirect, // extension with b = 0
    extension
  };
  Kind kind = Kind::cyclic;
  int parameter = 1;
  std::shared_ptr<GroupSpec> left, right;
  ExtensionTable ext;

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int order);
  static GroupSpec symmetric(int letters);
  static GroupSpec quaternion8();
  static GroupSpec direct_product(GroupSpec a, GroupSpec b);
  static GroupSpec semidirect(std::vector<int> a_factors, GroupSpec k,
                              std::vector<std::vector<int>> action);
  static GroupSpec extension(std::vector<int> a_factors, GroupSpec k,
                             std::vector<std::vector<int>> action,
                             std::vector<std::vector<int>> b);
};

GroupPtr build_group(const GroupSpec& spec);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);
int conjugacy_class_of(const FiniteGroup& g, int x); // index into conjugacy_classes order

Subgroup centralizer(GroupPtr g, int x);
Subgroup center(GroupPtr g);
Subgroup normalizer(GroupPtr g, const Subgroup& h);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
Subgroup generated_subgroup(GroupPtr g, std::span<const int> generators);

struct SubgroupClass {
  Subgroup representative; // lexicographically least element list in its orbit
  Subgroup normalizer;
  int orbit_size = 1;
};

/// Every subgroup up to conjugacy, by layered closure.  Throws if the group
/// order exceeds max_order.
std::vector<SubgroupClass> subgroups_up_to_conjugacy(GroupPtr g, int max_order = 64);

/// All subgroups (canonical element lists, sorted).
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, int max_order = 64);

/// Witness map m with m[x*y] = m[x]*m[y], bijective, if one exists.
std::optional<std::vector<int>> isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& map);

/// Quotient of g by a normal subgroup: table on cosets, plus the projection
/// map g -> quotient element index.
std::pair<GroupPtr, std::vector<int>> quotient_group(GroupPtr g, const Subgroup& n);

} // namespace cocycle
