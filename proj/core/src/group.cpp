#include "cocycle/group.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cocycle {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<int> mixed_radix_sizes(const std::vector<int>& factors) {
  std::vector<int> s = factors;
  return s;
}

int tuple_to_index(const std::vector<int>& t, const std::vector<int>& radix) {
  int idx = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) idx = idx * radix[i] + t[i];
  return idx;
}

std::vector<int> index_to_tuple(int idx, const std::vector<int>& radix) {
  std::vector<int> t(radix.size(), 0);
  for (std::size_t i = radix.size(); i-- > 0;) {
    t[i] = idx % radix[i];
    idx /= radix[i];
  }
  return t;
}

} // namespace

FiniteGroup FiniteGroup::from_table(int n, std::vector<int> table, std::vector<std::string> labels) {
  if (n <= 0) fail("group order must be positive");
  if (int(table.size()) != n * n) fail("multiplication table has wrong size");
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) < 0 || g.mul(a, b) >= n) fail("table entry out of range");
  for (int a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a) fail("element 0 is not a two-sided identity");
  // rows and columns are permutations
  for (int a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int b = 0; b < n; ++b) {
      if (seen_row[g.mul(a, b)]) fail("row " + std::to_string(a) + " is not a permutation");
      seen_row[g.mul(a, b)] = true;
      if (seen_col[g.mul(b, a)]) fail("column " + std::to_string(a) + " is not a permutation");
      seen_col[g.mul(b, a)] = true;
    }
  }
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) g.inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inv_[a] < 0) fail("element " + std::to_string(a) + " has no two-sided inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")");
  return g;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  long long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, (long long)element_order(a));
  return int(e);
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) fail("cyclic: order must be >= 1");
  GroupSpec s;
  s.kind = Kind::cyclic;
  s.parameter = n;
  return s;
}

GroupSpec GroupSpec::dihedral(int order) {
  if (order < 2 || order % 2) fail("dihedral: order must be even and >= 2");
  GroupSpec s;
  s.kind = Kind::dihedral;
  s.parameter = order;
  return s;
}

GroupSpec GroupSpec::symmetric(int letters) {
  if (letters < 1 || letters > 5) fail("symmetric: letters must be in 1..5");
  GroupSpec s;
  s.kind = Kind::symmetric;
  s.parameter = letters;
  return s;
}

GroupSpec GroupSpec::quaternion8() {
  GroupSpec s;
  s.kind = Kind::quaternion8;
  s.parameter = 8;
  return s;
}

GroupSpec GroupSpec::direct_product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = Kind::direct_product;
  s.left = std::make_shared<GroupSpec>(std::move(a));
  s.right = std::make_shared<GroupSpec>(std::move(b));
  return s;
}

GroupSpec GroupSpec::semidirect(std::vector<int> a_factors, GroupSpec k,
                                std::vector<std::vector<int>> action) {
  GroupSpec s;
  s.kind = Kind::semidirect;
  s.ext.a_factors = std::move(a_factors);
  s.ext.k = std::make_shared<GroupSpec>(std::move(k));
  s.ext.action = std::move(action);
  return s;
}

GroupSpec GroupSpec::extension(std::vector<int> a_factors, GroupSpec k,
                               std::vector<std::vector<int>> action,
                               std::vector<std::vector<int>> b) {
  GroupSpec s;
  s.kind = Kind::extension;
  s.ext.a_factors = std::move(a_factors);
  s.ext.k = std::make_shared<GroupSpec>(std::move(k));
  s.ext.action = std::move(action);
  s.ext.b = std::move(b);
  return s;
}

namespace {

GroupPtr make_group(int n, std::vector<int> table, std::vector<std::string> labels = {}) {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(n, std::move(table), std::move(labels)));
}

GroupPtr build_cyclic(int n) {
  std::vector<int> t(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = (a + b) % n;
  return make_group(n, std::move(t));
}

// elements r^i s^j, index i + m j with m = order/2
GroupPtr build_dihedral(int order) {
  int m = order / 2;
  int n = order;
  auto idx = [m](int i, int j) { return i + m * j; };
  std::vector<int> t(std::size_t(n) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int rot = j ? (i - i2 + m) % m : (i + i2) % m;
          t[std::size_t(idx(i, j)) * n + idx(i2, j2)] = idx(rot, j ^ j2);
        }
  return make_group(n, std::move(t));
}

GroupPtr build_symmetric(int letters) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(letters);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = int(perms.size());
  std::map<std::vector<int>, int> rank;
  for (int i = 0; i < n; ++i) rank[perms[i]] = i;
  std::vector<int> t(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(letters);
      for (int x = 0; x < letters; ++x) c[x] = perms[a][perms[b][x]]; // (a o b)(x)
      t[std::size_t(a) * n + b] = rank[c];
    }
  return make_group(n, std::move(t));
}

// 0..7 = 1, -1, i, -i, j, -j, k, -k
GroupPtr build_quaternion8() {
  // unit table on {1,i,j,k} with signs: units[u][v] = (unit, sign)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  // encode: index = 2*u + (s<0)
  auto enc = [](int u, int s) { return 2 * u + (s < 0 ? 1 : 0); };
  int n = 8;
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2 ? -1 : 1;
      int ub = b / 2, sb = b % 2 ? -1 : 1;
      t[std::size_t(a) * 8 + b] = enc(unit[ua][ub], sa * sb * sign[ua][ub]);
    }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return make_group(n, std::move(t), std::move(labels));
}

struct AbelianIndexing {
  std::vector<int> factors;
  int order;
  int add(int x, int y) const {
    auto a = index_to_tuple(x, factors), b = index_to_tuple(y, factors);
    for (std::size_t i = 0; i < factors.size(); ++i) a[i] = (a[i] + b[i]) % factors[i];
    return tuple_to_index(a, factors);
  }
};

GroupPtr build_extension(const ExtensionTable& ext) {
  for (int d : ext.a_factors)
    if (d < 1) fail("extension: invariant factor must be >= 1");
  AbelianIndexing A{mixed_radix_sizes(ext.a_factors), 1};
  for (int d : A.factors) A.order *= d;
  GroupPtr K = build_group(*ext.k);
  int nk = K->order(), na = A.order;
  if (int(ext.action.size()) != nk) fail("extension: action table needs one row per K element");
  for (const auto& row : ext.action)
    if (int(row.size()) != na) fail("extension: action row has wrong length");
  // identity acts trivially; every row is an automorphism; rows compose along K
  for (int a = 0; a < na; ++a)
    if (ext.action[0][a] != a) fail("extension: identity of K must act trivially");
  for (int g = 0; g < nk; ++g) {
    const auto& act = ext.action[g];
    std::vector<bool> seen(na, false);
    for (int a = 0; a < na; ++a) {
      if (seen[act[a]]) fail("extension: action of " + std::to_string(g) + " is not a bijection");
      seen[act[a]] = true;
    }
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < na; ++b)
        if (act[A.add(a, b)] != A.add(act[a], act[b]))
          fail("extension: action of " + std::to_string(g) + " is not an automorphism at (" +
               std::to_string(a) + "," + std::to_string(b) + ")");
  }
  for (int g = 0; g < nk; ++g)
    for (int h = 0; h < nk; ++h) {
      int gh = K->mul(g, h);
      for (int a = 0; a < na; ++a)
        if (ext.action[g][ext.action[h][a]] != ext.action[gh][a])
          fail("extension: action is not a homomorphism at K pair (" + std::to_string(g) + "," +
               std::to_string(h) + ")");
    }
  std::vector<std::vector<int>> b = ext.b;
  if (b.empty()) b.assign(nk, std::vector<int>(nk, 0));
  if (int(b.size()) != nk) fail("extension: cocycle table needs |K| rows");
  for (const auto& row : b)
    if (int(row.size()) != nk) fail("extension: cocycle row has wrong length");
  for (int g = 0; g < nk; ++g)
    if (b[0][g] != 0 || b[g][0] != 0)
      fail("extension: cocycle not normalized at " + std::to_string(g));
  // twisted cocycle identity g.b(h,k) + b(g,hk) = b(g,h) + b(gh,k)
  for (int g = 0; g < nk; ++g)
    for (int h = 0; h < nk; ++h)
      for (int l = 0; l < nk; ++l) {
        int lhs = A.add(ext.action[g][b[h][l]], b[g][K->mul(h, l)]);
        int rhs = A.add(b[g][h], b[K->mul(g, h)][l]);
        if (lhs != rhs)
          fail("extension: cocycle identity fails at (" + std::to_string(g) + "," +
               std::to_string(h) + "," + std::to_string(l) + ")");
      }
  int n = na * nk;
  auto enc = [nk](int a, int g) { return a * nk + g; };
  std::vector<int> t(std::size_t(n) * n);
  for (int a = 0; a < na; ++a)
    for (int g = 0; g < nk; ++g)
      for (int a2 = 0; a2 < na; ++a2)
        for (int g2 = 0; g2 < nk; ++g2) {
          int asum = A.add(A.add(a, ext.action[g][a2]), b[g][g2]);
          t[std::size_t(enc(a, g)) * n + enc(a2, g2)] = enc(asum, K->mul(g, g2));
        }
  return make_group(n, std::move(t));
}

} // namespace

GroupPtr build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return build_cyclic(spec.parameter);
    case GroupSpec::Kind::dihedral:
      return build_dihedral(spec.parameter);
    case GroupSpec::Kind::symmetric:
      return build_symmetric(spec.parameter);
    case GroupSpec::Kind::quaternion8:
      return build_quaternion8();
    case GroupSpec::Kind::direct_product: {
      GroupPtr a = build_group(*spec.left), b = build_group(*spec.right);
      int na = a->order(), nb = b->order(), n = na * nb;
      std::vector<int> t(std::size_t(n) * n);
      auto enc = [nb](int x, int y) { return x * nb + y; };
      for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
          for (int x2 = 0; x2 < na; ++x2)
            for (int y2 = 0; y2 < nb; ++y2)
              t[std::size_t(enc(x, y)) * n + enc(x2, y2)] = enc(a->mul(x, x2), b->mul(y, y2));
      return make_group(n, std::move(t));
    }
    case GroupSpec::Kind::semidirect:
    case GroupSpec::Kind::extension:
      return build_extension(spec.ext);
  }
  fail("unreachable group spec kind");
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> c;
    for (int y = 0; y < n; ++y) {
      int z = g.conjugate(y, x);
      if (cls[z] < 0) {
        cls[z] = int(out.size());
        c.push_back(z);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

int conjugacy_class_of(const FiniteGroup& g, int x) {
  auto classes = conjugacy_classes(g);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].begin(), classes[i].end(), x)) return int(i);
  return -1;
}

Subgroup centralizer(GroupPtr g, int x) {
  std::vector<int> e;
  for (int y = 0; y < g->order(); ++y)
    if (g->mul(x, y) == g->mul(y, x)) e.push_back(y);
  return Subgroup{std::move(g), std::move(e)};
}

Subgroup center(GroupPtr g) {
  std::vector<int> e;
  for (int y = 0; y < g->order(); ++y) {
    bool central = true;
    for (int x = 0; x < g->order() && central; ++x) central = g->mul(x, y) == g->mul(y, x);
    if (central) e.push_back(y);
  }
  return Subgroup{std::move(g), std::move(e)};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty() || elements[0] != 0) return false;
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (elements[i] <= elements[i - 1]) return false;
  for (int a : elements) {
    if (!std::binary_search(elements.begin(), elements.end(), g.inv(a))) return false;
    for (int b : elements)
      if (!std::binary_search(elements.begin(), elements.end(), g.mul(a, b))) return false;
  }
  return true;
}

Subgroup normalizer(GroupPtr g, const Subgroup& h) {
  if (!is_subgroup(*g, h.elements)) fail("normalizer: not a subgroup");
  std::vector<int> e;
  for (int x = 0; x < g->order(); ++x) {
    bool norm = true;
    for (int a : h.elements) {
      if (!h.contains(g->conjugate(x, a))) {
        norm = false;
        break;
      }
    }
    if (norm) e.push_back(x);
  }
  return Subgroup{std::move(g), std::move(e)};
}

namespace {

// product closure of a set; pairs are visited once as the list grows
std::vector<int> pair_closure(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> e;
  for (int x : seed)
    if (!in[x]) {
      in[x] = true;
      e.push_back(x);
    }
  auto push = [&](int z) {
    if (!in[z]) {
      in[z] = true;
      e.push_back(z);
    }
  };
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      push(g.mul(e[i], e[j]));
      push(g.mul(e[j], e[i]));
    }
  std::sort(e.begin(), e.end());
  return e;
}

} // namespace

Subgroup generated_subgroup(GroupPtr g, std::span<const int> generators) {
  std::vector<int> seed = {0};
  seed.insert(seed.end(), generators.begin(), generators.end());
  auto e = pair_closure(*g, std::move(seed));
  return Subgroup{std::move(g), std::move(e)};
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order)
    throw std::domain_error("subgroup enumeration: group order " + std::to_string(g.order()) +
                            " exceeds bound " + std::to_string(max_order));
  int n = g.order();
  std::set<std::vector<int>> known;
  known.insert({0});
  std::vector<std::vector<int>> layer = {{0}};
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : layer) {
      for (int x = 1; x < n; ++x) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        std::vector<int> seed = s;
        seed.push_back(x);
        auto bigger = pair_closure(g, std::move(seed));
        if (known.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    layer = std::move(next);
  }
  return {known.begin(), known.end()};
}

std::vector<SubgroupClass> subgroups_up_to_conjugacy(GroupPtr g, int max_order) {
  auto subs = all_subgroups(*g, max_order);
  std::set<std::vector<int>> remaining(subs.begin(), subs.end());
  std::vector<SubgroupClass> out;
  while (!remaining.empty()) {
    std::vector<int> rep = *remaining.begin(); // lexicographically least
    std::set<std::vector<int>> orbit;
    for (int x = 0; x < g->order(); ++x) {
      std::vector<int> conj;
      conj.reserve(rep.size());
      for (int a : rep) conj.push_back(g->conjugate(x, a));
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    for (const auto& s : orbit) remaining.erase(s);
    SubgroupClass c;
    c.representative = Subgroup{g, rep};
    c.normalizer = normalizer(g, c.representative);
    c.orbit_size = int(orbit.size());
    out.push_back(std::move(c));
  }
  // smallest first, then by representative list
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative.elements < b.representative.elements;
  });
  return out;
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& map) {
  if (int(map.size()) != g.order()) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

namespace {

// order -> count fingerprints, plus class size multisets and a few subgroup
// cardinalities; cheap nonisomorphism cuts before the backtracking search
struct IsoInvariants {
  std::vector<int> order_counts;
  std::vector<int> class_sizes;
  int center_order;
  int derived_order;

  static IsoInvariants of(const FiniteGroup& g) {
    IsoInvariants v;
    v.order_counts.assign(g.order() + 1, 0);
    for (int x = 0; x < g.order(); ++x) ++v.order_counts[g.element_order(x)];
    for (auto& c : conjugacy_classes(g)) v.class_sizes.push_back(int(c.size()));
    std::sort(v.class_sizes.begin(), v.class_sizes.end());
    auto gp = std::make_shared<const FiniteGroup>(g);
    v.center_order = center(gp).order();
    std::vector<int> comms;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        comms.push_back(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    v.derived_order = generated_subgroup(gp, comms).order();
    return v;
  }

  bool operator==(const IsoInvariants&) const = default;
};

// (order, class size, centralizer order) per element; images must match
std::vector<std::array<int, 3>> element_profiles(const FiniteGroup& g) {
  std::vector<std::array<int, 3>> prof(g.order());
  auto classes = conjugacy_classes(g);
  std::vector<int> class_size(g.order());
  for (auto& c : classes)
    for (int x : c) class_size[x] = int(c.size());
  for (int x = 0; x < g.order(); ++x) {
    int cent = 0;
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++cent;
    prof[x] = {g.element_order(x), class_size[x], cent};
  }
  return prof;
}

struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<int> gen; // generator sequence in g
  std::vector<std::array<int, 3>> g_prof, h_prof;
  std::vector<int> map;     // partial map, -1 unset
  std::vector<int> closure; // elements of g currently mapped (closed set)

  bool extend(std::size_t k) {
    if (k == gen.size()) return int(closure.size()) == g.order();
    int ge = gen[k];
    for (int cand = 0; cand < h.order(); ++cand) {
      if (h_prof[cand] != g_prof[ge]) continue;
      auto saved_map = map;
      auto saved_closure = closure;
      if (assign(ge, cand) && extend(k + 1)) return true;
      map = std::move(saved_map);
      closure = std::move(saved_closure);
    }
    return false;
  }

  // add image, close under multiplication, detect conflicts
  bool assign(int x, int y) {
    if (map[x] >= 0) return map[x] == y;
    map[x] = y;
    std::vector<int> added = {x};
    for (std::size_t i = 0; i < added.size(); ++i) {
      int a = added[i];
      for (std::size_t j = 0; j < closure.size(); ++j) {
        int b = closure[j];
        for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
          int prod = g.mul(p, q);
          int img = h.mul(map[p], map[q]);
          if (map[prod] < 0) {
            map[prod] = img;
            added.push_back(prod);
          } else if (map[prod] != img) {
            return false;
          }
        }
      }
      // products among newly added ones, including squares
      for (std::size_t j = 0; j <= i; ++j) {
        int b = added[j];
        for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
          int prod = g.mul(p, q);
          int img = h.mul(map[p], map[q]);
          if (map[prod] < 0) {
            map[prod] = img;
            added.push_back(prod);
          } else if (map[prod] != img) {
            return false;
          }
        }
      }
      closure.push_back(a);
    }
    // injectivity on the mapped set
    std::vector<int> used;
    for (int e : closure)
      if (map[e] >= 0) used.push_back(map[e]);
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
  }
};

} // namespace

std::optional<std::vector<int>> isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (!(IsoInvariants::of(g) == IsoInvariants::of(h))) return std::nullopt;

  // minimal generating sequence by greedy closure
  auto gp = std::make_shared<const FiniteGroup>(g);
  std::vector<int> gens;
  Subgroup span = generated_subgroup(gp, gens);
  while (span.order() < g.order()) {
    int next = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!span.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    span = generated_subgroup(gp, gens);
  }

  IsoSearch search{g, h, gens, element_profiles(g), element_profiles(h),
                   std::vector<int>(g.order(), -1), {}};
  search.map[0] = 0;
  search.closure = {0};
  if (search.extend(0)) {
    if (!is_homomorphism(g, h, search.map))
      throw std::logic_error("isomorphism search produced a non-homomorphism");
    return search.map;
  }
  return std::nullopt;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return isomorphism(g, h).has_value();
}

std::pair<GroupPtr, std::vector<int>> quotient_group(GroupPtr g, const Subgroup& n) {
  if (!is_subgroup(*g, n.elements)) fail("quotient: not a subgroup");
  for (int x = 0; x < g->order(); ++x)
    for (int a : n.elements)
      if (!n.contains(g->conjugate(x, a))) fail("quotient: subgroup is not normal");
  int ng = g->order();
  std::vector<int> coset(ng, -1);
  std::vector<int> reps;
  // identity coset first so the quotient identity is index 0
  for (int x = 0; x < ng; ++x) {
    if (coset[x] >= 0) continue;
    int c = int(reps.size());
    reps.push_back(x);
    for (int a : n.elements) coset[g->mul(x, a)] = c;
  }
  int q = int(reps.size());
  std::vector<int> t(std::size_t(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[std::size_t(i) * q + j] = coset[g->mul(reps[i], reps[j])];
  return {make_group(q, std::move(t)), std::move(coset)};
}

} // namespace cocycle
