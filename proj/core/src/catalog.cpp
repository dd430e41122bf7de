#include "cocycle/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cocycle {

namespace {

// Z/3 x| S3, S3 acting through the sign of the permutation: transpositions
// invert, even permutations fix.
GroupSpec c3_rtimes_s3() {
  GroupPtr s3 = build_group(GroupSpec::symmetric(3));
  std::vector<std::vector<int>> action(6, std::vector<int>(3));
  for (int g = 0; g < 6; ++g) {
    // parity of permutation g in lexicographic S3 ordering: recompute from the
    // group itself (transpositions have order 2 and are odd in S3)
    bool odd = s3->element_order(g) == 2;
    for (int a = 0; a < 3; ++a) action[g][a] = odd ? (3 - a) % 3 : a;
  }
  return GroupSpec::semidirect({3}, GroupSpec::symmetric(3), std::move(action));
}

// A4 = V4 x| C3 cycling the three involutions
GroupSpec a4_spec() {
  // V4 elements indexed by tuples over {2,2}: 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1)
  // generator of C3 sends 1 -> 2 -> 3 -> 1
  std::vector<std::vector<int>> action = {
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  return GroupSpec::semidirect({2, 2}, GroupSpec::cyclic(3), std::move(action));
}

GroupSpec parse_atom(const std::string& atom) {
  if (atom == "q8") return GroupSpec::quaternion8();
  if (atom == "a4") return a4_spec();
  if (atom == "v4") return GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::cyclic(2));
  if (atom == "c3rs3") return c3_rtimes_s3();
  if (atom.size() >= 2 && (atom[0] == 'c' || atom[0] == 'd' || atom[0] == 's')) {
    int n = 0;
    for (std::size_t i = 1; i < atom.size(); ++i) {
      if (atom[i] < '0' || atom[i] > '9') throw std::invalid_argument("bad group atom: " + atom);
      n = n * 10 + (atom[i] - '0');
    }
    if (atom[0] == 'c') return GroupSpec::cyclic(n);
    if (atom[0] == 'd') return GroupSpec::dihedral(n);
    return GroupSpec::symmetric(n);
  }
  throw std::invalid_argument("unknown group atom: " + atom);
}

} // namespace

GroupSpec parse_group_name(const std::string& name) {
  std::vector<std::string> atoms;
  std::string cur;
  for (char ch : name) {
    if (ch == 'x') {
      // 'x' splits atoms except inside no atom of ours
      atoms.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  atoms.push_back(cur);
  if (atoms.empty() || atoms[0].empty()) throw std::invalid_argument("empty group name");
  GroupSpec spec = parse_atom(atoms[0]);
  for (std::size_t i = 1; i < atoms.size(); ++i)
    spec = GroupSpec::direct_product(std::move(spec), parse_atom(atoms[i]));
  return spec;
}

GroupPtr catalog_group(const std::string& name) { return build_group(parse_group_name(name)); }

namespace {

void abelian_rec(int max_order, std::vector<int>& chain, int product,
                 std::vector<std::vector<int>>& out) {
  // extend the divisibility chain d1 | d2 | ... downward: chain holds the
  // factors from largest to smallest while recursing, emitted sorted
  int last = chain.empty() ? max_order : chain.back();
  for (int d = 2; d <= last; ++d) {
    if (!chain.empty() && chain.back() % d) continue;
    long long p = (long long)product * d;
    if (p > max_order) break;
    chain.push_back(d);
    std::vector<int> entry(chain.rbegin(), chain.rend());
    out.push_back(entry);
    abelian_rec(max_order, chain, int(p), out);
    chain.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> abelian_types(int max_order) {
  // chains built largest factor first; d_{i+1} divides d_i while recursing
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  abelian_rec(max_order, chain, 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long pa = 1, pb = 1;
    for (int d : a) pa *= d;
    for (int d : b) pb *= d;
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

std::string abelian_name(const std::vector<int>& invariant_factors) {
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += "x";
    s += "c" + std::to_string(invariant_factors[i]);
  }
  return s.empty() ? "c1" : s;
}

std::vector<CatalogEntry> scan_catalog(int max_abelian) {
  std::vector<CatalogEntry> out;
  out.push_back({"c1", GroupSpec::cyclic(1)});
  for (const auto& type : abelian_types(max_abelian)) {
    GroupSpec spec = GroupSpec::cyclic(type[0]);
    for (std::size_t i = 1; i < type.size(); ++i)
      spec = GroupSpec::direct_product(std::move(spec), GroupSpec::cyclic(type[i]));
    out.push_back({abelian_name(type), std::move(spec)});
  }
  for (int order = 6; order <= 16; order += 2)
    out.push_back({"d" + std::to_string(order), GroupSpec::dihedral(order)});
  out.push_back({"q8", GroupSpec::quaternion8()});
  out.push_back({"s3", GroupSpec::symmetric(3)});
  out.push_back({"s4", GroupSpec::symmetric(4)});
  out.push_back({"a4", parse_group_name("a4")});
  out.push_back({"c2xd8", parse_group_name("c2xd8")});
  out.push_back({"c2xc3rs3", parse_group_name("c2xc3rs3")});
  return out;
}

} // namespace cocycle
