#pragma once

// The fixed group catalog reachable from GroupSpec constructors.  Names are
// products of atoms separated by 'x': c<n>, d<order>, s<letters>, a4, q8,
// v4 (= c2xc2) and c3rs3 (Z/3 and S3 acting through the sign character).

#include "cocycle/group.hpp"

#include <string>
#include <vector>

namespace cocycle {

GroupSpec parse_group_name(const std::string& name);
GroupPtr catalog_group(const std::string& name);

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
};

/// Every abelian isomorphism type of order 2..max as invariant factor lists.
std::vector<std::vector<int>> abelian_types(int max_order);

/// The scan catalog: cyclic and abelian products up to max_abelian, dihedral
/// groups up to order 16, q8, s3, s4, a4, c2xd8 and c2xc3rs3.
std::vector<CatalogEntry> scan_catalog(int max_abelian = 36);

std::string abelian_name(const std::vector<int>& invariant_factors);

} // namespace cocycle
