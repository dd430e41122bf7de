#include "cocycle/cohomology.hpp"

#include "cocycle/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cocycle {

using zn::Mat;
using zn::Ring;
using zn::RowSpan;
using zn::Value;
using zn::Vec;

Cocycle Cocycle::zero(GroupPtr g, std::uint32_t modulus) {
  Cocycle c;
  c.group = std::move(g);
  c.modulus = modulus;
  c.table.assign(std::size_t(c.group->order()) * c.group->order(), 0);
  return c;
}

bool Cocycle::is_valid() const {
  const FiniteGroup& g = *group;
  int n = g.order();
  for (int x = 0; x < n; ++x)
    if (at(0, x) != 0 || at(x, 0) != 0) return false;
  for (std::uint32_t v : table)
    if (v >= modulus && modulus > 1) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::uint64_t lhs = at(x, y) + at(g.mul(x, y), z);
        std::uint64_t rhs = at(y, z) + at(x, g.mul(y, z));
        if (lhs % modulus != rhs % modulus) return false;
      }
  return true;
}

Cocycle Cocycle::from_table(GroupPtr g, std::uint32_t modulus, std::vector<std::uint32_t> table) {
  Cocycle c;
  c.group = std::move(g);
  c.modulus = modulus;
  c.table = std::move(table);
  if (c.table.size() != std::size_t(c.group->order()) * c.group->order())
    throw std::invalid_argument("cocycle table has wrong size");
  for (auto& v : c.table) v %= modulus;
  if (!c.is_valid()) throw std::invalid_argument("table is not a normalized 2-cocycle");
  return c;
}

Cocycle Cocycle::add(const Cocycle& o) const {
  if (group->order() != o.group->order() || modulus != o.modulus)
    throw std::invalid_argument("cocycle modulus mismatch");
  Cocycle r = *this;
  for (std::size_t i = 0; i < table.size(); ++i) r.table[i] = (table[i] + o.table[i]) % modulus;
  return r;
}

Cocycle Cocycle::sub(const Cocycle& o) const {
  if (group->order() != o.group->order() || modulus != o.modulus)
    throw std::invalid_argument("cocycle modulus mismatch");
  Cocycle r = *this;
  for (std::size_t i = 0; i < table.size(); ++i)
    r.table[i] = (table[i] + modulus - o.table[i]) % modulus;
  return r;
}

Cocycle Cocycle::conjugated_by(int g) const {
  const FiniteGroup& G = *group;
  int n = G.order();
  int gi = G.inv(g);
  Cocycle r = *this;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      r.set(x, y, at(G.mul(G.mul(gi, x), g), G.mul(G.mul(gi, y), g)));
  return r;
}

Cocycle coboundary_of(GroupPtr g, std::uint32_t modulus, const std::vector<std::uint32_t>& phi) {
  int n = g->order();
  if (int(phi.size()) != n) throw std::invalid_argument("1-cochain has wrong length");
  if (phi[0] % modulus != 0) throw std::invalid_argument("1-cochain must vanish at the identity");
  Cocycle c = Cocycle::zero(g, modulus);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::uint64_t v = std::uint64_t(phi[x]) + phi[y] + 2ull * modulus - phi[g->mul(x, y)];
      c.set(x, y, std::uint32_t(v % modulus));
    }
  return c;
}

namespace {

// pair coordinates: normalized cochains live on (G \ e) x (G \ e)
struct PairIndex {
  int n;
  std::size_t dim() const { return std::size_t(n - 1) * (n - 1); }
  std::size_t at(int g, int h) const { return std::size_t(g - 1) * (n - 1) + (h - 1); }
};

std::uint32_t exponent_of_abelianization(const FiniteGroup& g) {
  auto gp = std::make_shared<const FiniteGroup>(g);
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  Subgroup derived = generated_subgroup(gp, comms);
  auto [q, proj] = quotient_group(gp, derived);
  return std::uint32_t(q->exponent());
}

// rows spanning the image of d^1 over Z/M in pair coordinates
std::vector<Vec> coboundary_generators(const FiniteGroup& g, const Ring& ring, const PairIndex& px) {
  int n = g.order();
  std::vector<Vec> rows;
  rows.reserve(n - 1);
  for (int x = 1; x < n; ++x) {
    Vec row(px.dim(), 0);
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        Value v = 0;
        if (a == x) v = ring.add(v, 1);
        if (b == x) v = ring.add(v, 1);
        if (g.mul(a, b) == x) v = ring.sub(v, 1);
        if (v) row[px.at(a, b)] = v;
      }
    rows.push_back(std::move(row));
  }
  return rows;
}

Cocycle unflatten(GroupPtr g, std::uint32_t modulus, const Vec& v, const PairIndex& px) {
  Cocycle c = Cocycle::zero(std::move(g), modulus);
  int n = c.group->order();
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) c.set(a, b, v[px.at(a, b)]);
  return c;
}

// span of (M/m)-scaled coboundaries; membership test for T-triviality
RowSpan t_coboundary_span(const FiniteGroup& g, std::uint32_t M) {
  PairIndex px{g.order()};
  Ring ring(M);
  RowSpan span(ring, px.dim());
  for (auto& row : coboundary_generators(g, ring, px)) span.insert(std::move(row));
  return span;
}

bool t_coboundary_against(const RowSpan& span, const Cocycle& c, std::uint32_t M) {
  PairIndex px{c.group->order()};
  std::uint32_t scale = M / c.modulus;
  Vec v(px.dim(), 0);
  int n = c.group->order();
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) v[px.at(a, b)] = c.at(a, b) * scale % M;
  return span.contains(v);
}

} // namespace

bool is_t_coboundary(const Cocycle& c) {
  std::uint32_t m = c.modulus;
  std::uint32_t M = m * exponent_of_abelianization(*c.group);
  auto span = t_coboundary_span(*c.group, M);
  return t_coboundary_against(span, c, M);
}

bool cohomologous(const Cocycle& c1, const Cocycle& c2) {
  if (c1.modulus != c2.modulus || c1.group->order() != c2.group->order())
    throw std::invalid_argument("cohomologous: modulus mismatch");
  return is_t_coboundary(c1.sub(c2));
}

bool CohClassSet::is_t_coboundary(const Cocycle& c) const {
  if (c.modulus != modulus) throw std::invalid_argument("modulus mismatch");
  return t_coboundary_against(t_coboundaries, c, extended_modulus);
}

bool CohClassSet::cohomologous(const Cocycle& c1, const Cocycle& c2) const {
  return is_t_coboundary(c1.sub(c2));
}

std::optional<std::size_t> CohClassSet::class_of(const Cocycle& c) const {
  for (std::size_t i = 0; i < transversal.size(); ++i)
    if (is_t_coboundary(c.sub(transversal[i]))) return i;
  return std::nullopt;
}

CohClassSet h2_classes(GroupPtr g, const H2Options& opt) {
  const FiniteGroup& G = *g;
  int n = G.order();
  if (n > opt.max_order)
    throw std::domain_error("h2_classes: group order " + std::to_string(n) +
                            " exceeds bound " + std::to_string(opt.max_order));

  CohClassSet out;
  out.group = g;
  std::uint32_t m = std::uint32_t(std::max(n, 1));
  std::uint32_t M = m * (n > 1 ? exponent_of_abelianization(G) : 1);
  out.modulus = m;
  out.extended_modulus = M;
  out.ring_m = Ring(m);
  out.t_coboundaries = t_coboundary_span(G, M);

  if (n == 1 || m == 1) {
    out.invariant_factors = {};
    out.class_count = 1;
    out.transversal = {Cocycle::zero(g, m)};
    return out;
  }

  PairIndex px{n};
  std::size_t N = px.dim();
  Ring ring_m(m);
  Ring ring_M(M);

  // Z^2 = kernel of the degree-2 coboundary map on normalized cochains.
  // (d c)(x,y,z) = c(y,z) - c(xy,z) + c(x,yz) - c(x,y); triples with an
  // identity component hold automatically.
  RowSpan constraint_span(ring_m, N);
  {
    Vec row(N, 0);
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        int xy = G.mul(x, y);
        for (int z = 1; z < n; ++z) {
          int yz = G.mul(y, z);
          std::fill(row.begin(), row.end(), 0);
          bool nz = false;
          auto bump = [&](int a, int b, bool plus) {
            if (a == 0 || b == 0) return;
            std::size_t i = px.at(a, b);
            row[i] = plus ? ring_m.add(row[i], 1) : ring_m.sub(row[i], 1);
            nz = true;
          };
          bump(y, z, true);
          bump(xy, z, false);
          bump(x, yz, true);
          bump(x, y, false);
          if (nz) constraint_span.insert(row);
        }
      }
  }
  Mat z2 = zn::annihilator(constraint_span);

  // T-trivial subgroup W = {c : (M/m) c lies in the coboundary image over Z/M},
  // computed as the (M/m)-divisible part of that image, scaled back down.
  Mat w;
  w.cols = N;
  {
    RowSpan cobound_span(ring_M, N);
    for (auto& r : coboundary_generators(G, ring_M, px)) cobound_span.insert(std::move(r));
    std::vector<Vec> s_basis = cobound_span.basis();
    std::size_t r = s_basis.size();
    if (r > 0) {
      // y with m * (y . S) = 0, i.e. y . S divisible by M/m coordinatewise
      std::vector<Vec> cols;
      cols.reserve(N);
      for (std::size_t i = 0; i < N; ++i) {
        Vec col(r, 0);
        bool nz = false;
        for (std::size_t k = 0; k < r; ++k) {
          col[k] = Value(std::uint64_t(m) * s_basis[k][i] % M);
          nz = nz || col[k];
        }
        if (nz) cols.push_back(std::move(col));
      }
      Mat y = zn::annihilator(ring_M, r, cols);
      std::uint32_t scale = M / m;
      RowSpan wspan(ring_m, N);
      for (const Vec& yrow : y.rows) {
        Vec v(N, 0);
        for (std::size_t k = 0; k < r; ++k) {
          if (!yrow[k]) continue;
          for (std::size_t i = 0; i < N; ++i)
            v[i] = ring_M.add(v[i], ring_M.mul(yrow[k], s_basis[k][i]));
        }
        Vec wv(N, 0);
        for (std::size_t i = 0; i < N; ++i) {
          if (v[i] % scale) throw std::logic_error("h2_classes: divisibility failure in W");
          wv[i] = v[i] / scale;
        }
        wspan.insert(std::move(wv));
      }
      w.rows = wspan.basis();
    }
  }

  // sanity: W is a subgroup of Z^2
  {
    RowSpan z2span(ring_m, N);
    for (const Vec& r : z2.rows) z2span.insert(r);
    for (const Vec& r : w.rows)
      if (!z2span.contains(r))
        throw std::logic_error("h2_classes: T-trivial cocycle outside Z^2");
  }

  zn::Quotient q = zn::quotient(ring_m, z2, w);
  out.invariant_factors = q.invariant_factors;
  unsigned __int128 count = 1;
  for (Value d : q.invariant_factors) {
    count *= d;
    if (count > (unsigned __int128)1 << 62) throw std::domain_error("h2_classes: class count overflow");
  }
  out.class_count = std::uint64_t(count);

  if (out.class_count <= opt.transversal_cap) {
    std::size_t kfac = q.invariant_factors.size();
    std::vector<Value> tuple(kfac, 0);
    for (std::uint64_t t = 0; t < out.class_count; ++t) {
      // coordinates over the Z^2 basis rows
      Vec coords(z2.rows.size(), 0);
      for (std::size_t k = 0; k < kfac; ++k) {
        if (!tuple[k]) continue;
        for (std::size_t c = 0; c < coords.size(); ++c)
          coords[c] = ring_m.add(coords[c], ring_m.mul(tuple[k] % m, q.generator_coords[k][c]));
      }
      Vec vec(N, 0);
      for (std::size_t c = 0; c < coords.size(); ++c) {
        if (!coords[c]) continue;
        for (std::size_t i = 0; i < N; ++i)
          vec[i] = ring_m.add(vec[i], ring_m.mul(coords[c], z2.rows[c][i]));
      }
      out.transversal.push_back(unflatten(g, m, vec, px));
      // increment mixed-radix tuple
      for (std::size_t k = kfac; k-- > 0;) {
        if (++tuple[k] < q.invariant_factors[k]) break;
        tuple[k] = 0;
      }
    }
    // representative 0 is the trivial class; reps must be pairwise distinct
    if (out.class_count <= 64) {
      for (std::size_t i = 0; i < out.transversal.size(); ++i)
        for (std::size_t j = i + 1; j < out.transversal.size(); ++j)
          if (out.cohomologous(out.transversal[i], out.transversal[j]))
            throw std::logic_error("h2_classes: transversal members " + std::to_string(i) +
                                   " and " + std::to_string(j) + " are cohomologous");
    } else {
      for (std::size_t i = 1; i < out.transversal.size(); ++i)
        if (out.is_t_coboundary(out.transversal[i]))
          throw std::logic_error("h2_classes: nonzero transversal member " + std::to_string(i) +
                                 " is a T-coboundary");
    }
  }
  return out;
}

std::map<int, std::uint32_t> antisym_character(const Cocycle& c, int g) {
  const FiniteGroup& G = *c.group;
  std::uint32_t m = c.modulus;
  Subgroup cent = centralizer(c.group, g);
  std::map<int, std::uint32_t> chi;
  for (int h : cent.elements) chi[h] = (c.at(g, h) + m - c.at(h, g)) % m;
  // verified homomorphism on C(g)
  for (int h1 : cent.elements)
    for (int h2 : cent.elements) {
      std::uint32_t lhs = (chi[h1] + chi[h2]) % m;
      if (lhs != chi[G.mul(h1, h2)])
        throw std::logic_error("antisym_character: not a homomorphism at (" +
                               std::to_string(h1) + "," + std::to_string(h2) + ")");
    }
  return chi;
}

bool is_nondegenerate(const Cocycle& c) {
  const FiniteGroup& G = *c.group;
  int n = G.order();
  for (int g = 1; g < n; ++g) {
    bool nontrivial = false;
    for (int h = 0; h < n && !nontrivial; ++h) {
      if (G.mul(g, h) != G.mul(h, g)) continue; // h not in C(g)
      nontrivial = c.at(g, h) % c.modulus != c.at(h, g) % c.modulus;
    }
    if (!nontrivial) return false;
  }
  return true;
}

int twisted_center_dim(const Cocycle& c) {
  const FiniteGroup& G = *c.group;
  int n = G.order();
  std::uint32_t m = c.modulus;
  auto phase = [&](int h, int g) {
    // u_h u_g u_h^-1 = zeta^phi u_{hgh^-1}
    int hi = G.inv(h);
    std::uint64_t v = std::uint64_t(c.at(h, g)) + c.at(G.mul(h, g), hi) + 2ull * m - c.at(h, hi);
    return std::uint32_t(v % m);
  };
  std::vector<std::vector<Cyclotomic>> rows;
  Cyclotomic one = Cyclotomic::one(m);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      int g = G.mul(G.mul(G.inv(h), k), h); // h g h^-1 = k
      std::uint32_t ph = phase(h, g);
      if (g == k && ph == 0) continue;
      std::vector<Cyclotomic> row(n, Cyclotomic::zero(m));
      row[k] = one;
      row[g] = row[g] - Cyclotomic::root_power(m, ph);
      rows.push_back(std::move(row));
    }
  std::size_t rank = cyclotomic_rank(std::move(rows));
  return n - int(rank);
}

bool is_central_type(GroupPtr g, const H2Options& opt) {
  CohClassSet classes = h2_classes(g, opt);
  if (classes.transversal.empty())
    throw std::domain_error("is_central_type: transversal capped, cannot scan classes");
  for (const Cocycle& c : classes.transversal)
    if (is_nondegenerate(c)) return true;
  return false;
}

namespace {

// subgroup as a group in its own right, with the element reindexing
struct SubgroupGroup {
  GroupPtr group;
  std::vector<int> to_parent;  // subindex -> parent element
  std::vector<int> from_parent; // parent element -> subindex or -1
};

SubgroupGroup subgroup_as_group(const FiniteGroup& parent, const Subgroup& h) {
  SubgroupGroup s;
  s.to_parent = h.elements;
  s.from_parent.assign(parent.order(), -1);
  for (std::size_t i = 0; i < h.elements.size(); ++i) s.from_parent[h.elements[i]] = int(i);
  int k = int(h.elements.size());
  std::vector<int> table(std::size_t(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      table[std::size_t(a) * k + b] = s.from_parent[parent.mul(h.elements[a], h.elements[b])];
  s.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(k, std::move(table)));
  return s;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

} // namespace

DualH2Report dual_h2_report(GroupPtr g, const H2Options& opt) {
  DualH2Report report;
  report.group = g;
  auto classes = subgroups_up_to_conjugacy(g, std::max(opt.max_order, g->order()));
  for (const auto& cls : classes) {
    DualH2Row row;
    row.subgroup = cls.representative;
    SubgroupGroup sub = subgroup_as_group(*g, cls.representative);
    CohClassSet coh = h2_classes(sub.group, opt);
    row.h2_order = coh.class_count;
    if (coh.transversal.empty())
      throw std::domain_error("dual_h2_report: transversal capped for subgroup of order " +
                              std::to_string(sub.group->order()));
    std::vector<std::size_t> nondeg;
    for (std::size_t i = 0; i < coh.transversal.size(); ++i)
      if (is_nondegenerate(coh.transversal[i])) nondeg.push_back(i);
    row.nondegenerate_classes = nondeg.size();

    // orbits of the normalizer action (n.c)(x,y) = c(n^-1 x n, n^-1 y n)
    std::vector<int> nondeg_pos(coh.transversal.size(), -1);
    for (std::size_t i = 0; i < nondeg.size(); ++i) nondeg_pos[nondeg[i]] = int(i);
    UnionFind uf(nondeg.size());
    for (std::size_t i = 0; i < nondeg.size(); ++i) {
      const Cocycle& c = coh.transversal[nondeg[i]];
      for (int nrm : cls.normalizer.elements) {
        Cocycle moved = Cocycle::zero(sub.group, coh.modulus);
        int ni = g->inv(nrm);
        for (int a = 1; a < sub.group->order(); ++a)
          for (int b = 1; b < sub.group->order(); ++b) {
            int pa = sub.to_parent[a], pb = sub.to_parent[b];
            int ca = sub.from_parent[g->mul(g->mul(ni, pa), nrm)];
            int cb = sub.from_parent[g->mul(g->mul(ni, pb), nrm)];
            moved.set(a, b, c.at(ca, cb));
          }
        auto target = coh.class_of(moved);
        if (!target || nondeg_pos[*target] < 0)
          throw std::logic_error("dual_h2_report: normalizer action left the nondegenerate set");
        uf.unite(int(i), nondeg_pos[*target]);
      }
    }
    std::vector<int> roots;
    for (std::size_t i = 0; i < nondeg.size(); ++i) roots.push_back(uf.find(int(i)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    row.nondegenerate_orbits = roots.size();
    report.total += row.nondegenerate_orbits;
    report.rows.push_back(std::move(row));
  }
  return report;
}

} // namespace cocycle
