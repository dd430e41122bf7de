#include "cocycle/abelian.hpp"

#include "cocycle/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cocycle {

using zn::Mat;
using zn::Ring;
using zn::RowSpan;
using zn::Value;
using zn::Vec;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

AbelianGroup AbelianGroup::from_factors(std::vector<int> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) fail("abelian invariant factors must be >= 2");
    if (i && factors[i] % factors[i - 1]) fail("invariant factors must form a divisibility chain");
  }
  AbelianGroup a;
  a.factors = std::move(factors);
  return a;
}

int AbelianGroup::order() const {
  int o = 1;
  for (int d : factors) o *= d;
  return o;
}

std::vector<int> AbelianGroup::tuple(int index) const {
  std::vector<int> t(factors.size(), 0);
  for (std::size_t i = factors.size(); i-- > 0;) {
    t[i] = index % factors[i];
    index /= factors[i];
  }
  return t;
}

int AbelianGroup::index(const std::vector<int>& t) const {
  int idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + (t[i] % factors[i]);
  return idx;
}

int AbelianGroup::add(int a, int b) const {
  auto x = tuple(a), y = tuple(b);
  for (std::size_t i = 0; i < factors.size(); ++i) x[i] = (x[i] + y[i]) % factors[i];
  return index(x);
}

int AbelianGroup::neg(int a) const {
  auto x = tuple(a);
  for (std::size_t i = 0; i < factors.size(); ++i) x[i] = (factors[i] - x[i]) % factors[i];
  return index(x);
}

GroupPtr AbelianGroup::as_group() const {
  int n = order();
  std::vector<int> t(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = add(a, b);
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(n, std::move(t)));
}

int dual_pairing(const AbelianGroup& a, int chi, int elem) {
  int m = a.exponent();
  auto c = a.tuple(chi), x = a.tuple(elem);
  long long v = 0;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    v += (long long)c[i] * x[i] * (m / a.factors[i]);
  return int(v % m);
}

int AlternatingForm::value(int chi, int psi) const {
  int m = group.exponent();
  auto c = group.tuple(chi), p = group.tuple(psi);
  long long v = 0;
  for (std::size_t i = 0; i < group.factors.size(); ++i)
    for (std::size_t j = i + 1; j < group.factors.size(); ++j) {
      int g = std::gcd(group.factors[i], group.factors[j]);
      v += (long long)b[i][j] * (m / g) * ((long long)c[i] * p[j] - (long long)c[j] * p[i]);
    }
  return int(((v % m) + m) % m);
}

bool AlternatingForm::is_zero() const {
  for (const auto& row : b)
    for (int e : row)
      if (e) return false;
  return true;
}

std::vector<AlternatingForm> alternating_classes(const AbelianGroup& a) {
  int r = a.rank();
  std::vector<std::pair<int, int>> slots;
  std::vector<int> radix;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      slots.push_back({i, j});
      radix.push_back(std::gcd(a.factors[i], a.factors[j]));
    }
  long long total = 1;
  for (int d : radix) total *= d;
  std::vector<AlternatingForm> out;
  out.reserve(total);
  std::vector<int> t(slots.size(), 0);
  for (long long count = 0; count < total; ++count) {
    AlternatingForm f;
    f.group = a;
    f.b.assign(r, std::vector<int>(r, 0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      f.b[i][j] = t[s];
      f.b[j][i] = (radix[s] - t[s]) % radix[s];
    }
    out.push_back(std::move(f));
    for (std::size_t s = slots.size(); s-- > 0;) {
      if (++t[s] < radix[s]) break;
      t[s] = 0;
    }
  }
  return out;
}

Cocycle form_to_cocycle(const AlternatingForm& form) {
  const AbelianGroup& a = form.group;
  GroupPtr dual = a.as_group();
  int n = a.order(), m = a.exponent(), r = a.rank();
  std::vector<std::uint32_t> table(std::size_t(n) * n, 0);
  for (int chi = 0; chi < n; ++chi) {
    auto c = a.tuple(chi);
    for (int psi = 0; psi < n; ++psi) {
      auto p = a.tuple(psi);
      long long v = 0;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          int g = std::gcd(a.factors[i], a.factors[j]);
          v += (long long)form.b[i][j] * (m / g) * c[i] * p[j];
        }
      table[std::size_t(chi) * n + psi] = std::uint32_t(((v % m) + m) % m);
    }
  }
  return Cocycle::from_table(std::move(dual), std::uint32_t(m), std::move(table));
}

AlternatingForm cocycle_to_form(const AbelianGroup& a, const Cocycle& c) {
  int r = a.rank(), m = a.exponent();
  if (int(c.modulus) != m || c.group->order() != a.order())
    fail("cocycle_to_form: cocycle does not live on the dual of this group");
  AlternatingForm f;
  f.group = a;
  f.b.assign(r, std::vector<int>(r, 0));
  std::vector<int> gen(r);
  for (int i = 0; i < r; ++i) {
    std::vector<int> t(r, 0);
    t[i] = 1;
    gen[i] = a.index(t);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      int g = std::gcd(a.factors[i], a.factors[j]);
      int anti = int((c.at(gen[i], gen[j]) + m - c.at(gen[j], gen[i])) % m);
      if (anti % (m / g)) fail("cocycle antisymmetrization is not an alternating form");
      f.b[i][j] = anti / (m / g);
    }
  return f;
}

RadicalAndB radical_and_b(const AlternatingForm& form) {
  const AbelianGroup& a = form.group;
  int n = a.order();
  RadicalAndB out;
  for (int chi = 0; chi < n; ++chi) {
    bool rad = true;
    for (int psi = 0; psi < n && rad; ++psi) rad = form.value(chi, psi) == 0;
    if (rad) out.radical.push_back(chi);
  }
  for (int x = 0; x < n; ++x) {
    bool ann = true;
    for (int chi : out.radical)
      if (dual_pairing(a, chi, x) != 0) {
        ann = false;
        break;
      }
    if (ann) out.b.push_back(x);
  }
  return out;
}

KActionPtr KAction::make(GroupPtr k, AbelianGroup a, std::vector<std::vector<int>> table) {
  int nk = k->order(), na = a.order();
  if (int(table.size()) != nk) fail("action table needs one row per K element");
  for (const auto& row : table)
    if (int(row.size()) != na) fail("action row has wrong length");
  for (int x = 0; x < na; ++x)
    if (table[0][x] != x) fail("identity of K must act trivially");
  for (int g = 0; g < nk; ++g) {
    std::vector<bool> seen(na, false);
    for (int x = 0; x < na; ++x) {
      if (seen[table[g][x]]) fail("action of " + std::to_string(g) + " is not a bijection");
      seen[table[g][x]] = true;
    }
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < na; ++y)
        if (table[g][a.add(x, y)] != a.add(table[g][x], table[g][y]))
          fail("action of " + std::to_string(g) + " is not an automorphism at (" +
               std::to_string(x) + "," + std::to_string(y) + ")");
  }
  for (int g = 0; g < nk; ++g)
    for (int h = 0; h < nk; ++h) {
      int gh = k->mul(g, h);
      for (int x = 0; x < na; ++x)
        if (table[g][table[h][x]] != table[gh][x])
          fail("action is not a homomorphism at K pair (" + std::to_string(g) + "," +
               std::to_string(h) + ")");
    }
  auto act = std::make_shared<KAction>();
  act->k = std::move(k);
  act->a = std::move(a);
  act->table = std::move(table);
  return act;
}

int KAction::act_dual(int g, int chi) const {
  // (g . chi)(x) = chi(g^-1 . x); recover the tuple from values on generators
  int gi = k->inv(g);
  int m = a.exponent(), r = a.rank();
  std::vector<int> out(r, 0);
  for (int j = 0; j < r; ++j) {
    std::vector<int> t(r, 0);
    t[j] = 1;
    int v = dual_pairing(a, chi, act(gi, a.index(t)));
    if (v % (m / a.factors[j])) throw std::logic_error("dual action value has wrong order");
    out[j] = v / (m / a.factors[j]);
  }
  return a.index(out);
}

std::vector<AlternatingForm> k_invariant_classes(const KAction& act) {
  int r = act.a.rank();
  std::vector<int> gen(r);
  for (int i = 0; i < r; ++i) {
    std::vector<int> t(r, 0);
    t[i] = 1;
    gen[i] = act.a.index(t);
  }
  std::vector<AlternatingForm> out;
  for (AlternatingForm& f : alternating_classes(act.a)) {
    bool inv = true;
    for (int g = 0; g < act.k->order() && inv; ++g) {
      int gi = act.k->inv(g);
      for (int i = 0; i < r && inv; ++i)
        for (int j = i + 1; j < r && inv; ++j)
          inv = f.value(act.act_dual(gi, gen[i]), act.act_dual(gi, gen[j])) ==
                f.value(gen[i], gen[j]);
    }
    if (inv) out.push_back(std::move(f));
  }
  return out;
}

bool ExtensionCocycle::is_zero() const {
  for (const auto& row : table)
    for (int v : row)
      if (v) return false;
  return true;
}

ExtensionCocycle ExtensionCocycle::zero(KActionPtr act) {
  ExtensionCocycle b;
  b.table.assign(act->k->order(), std::vector<int>(act->k->order(), 0));
  b.action = std::move(act);
  return b;
}

ExtensionCocycle ExtensionCocycle::from_table(KActionPtr actp, std::vector<std::vector<int>> t) {
  const KAction& act = *actp;
  int nk = act.k->order();
  if (int(t.size()) != nk) fail("extension cocycle needs |K| rows");
  for (const auto& row : t)
    if (int(row.size()) != nk) fail("extension cocycle row has wrong length");
  for (int g = 0; g < nk; ++g)
    if (t[0][g] != 0 || t[g][0] != 0) fail("extension cocycle not normalized");
  for (int g = 0; g < nk; ++g)
    for (int h = 0; h < nk; ++h)
      for (int l = 0; l < nk; ++l) {
        int lhs = act.a.add(act.act(g, t[h][l]), t[g][act.k->mul(h, l)]);
        int rhs = act.a.add(t[g][h], t[act.k->mul(g, h)][l]);
        if (lhs != rhs)
          fail("extension cocycle identity fails at (" + std::to_string(g) + "," +
               std::to_string(h) + "," + std::to_string(l) + ")");
      }
  ExtensionCocycle b;
  b.action = std::move(actp);
  b.table = std::move(t);
  return b;
}

ExtensionCocycle ExtensionCocycle::add(const ExtensionCocycle& o) const {
  ExtensionCocycle r = *this;
  for (std::size_t g = 0; g < table.size(); ++g)
    for (std::size_t h = 0; h < table.size(); ++h)
      r.table[g][h] = action->a.add(table[g][h], o.table[g][h]);
  return r;
}

ExtensionCocycle ExtensionCocycle::sub(const ExtensionCocycle& o) const {
  ExtensionCocycle r = *this;
  for (std::size_t g = 0; g < table.size(); ++g)
    for (std::size_t h = 0; h < table.size(); ++h)
      r.table[g][h] = action->a.add(table[g][h], action->a.neg(o.table[g][h]));
  return r;
}

namespace {

// deterministic pseudo-random permutation of 0..n-1 from a seed (splitmix64)
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (seed == 0) return p;
  std::uint64_t s = seed;
  auto next = [&s]() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[next() % i]);
  return p;
}

} // namespace

std::vector<std::uint32_t> solve_z(const KAction& act, const Cocycle& c, int g,
                                   std::uint64_t order_seed) {
  int na = act.a.order();
  if (c.group->order() != na) fail("solve_z: cocycle does not live on the dual of A");
  std::uint32_t m = c.modulus;
  std::uint32_t M = m * std::uint32_t(act.a.exponent());
  std::uint32_t scale = M / m;
  Ring ring(M);

  // dual action permutation of g^-1 on A-hat
  std::vector<int> perm(na);
  for (int chi = 0; chi < na; ++chi) perm[chi] = act.act_dual(act.k->inv(g), chi);

  // right-hand side (M/m)(c - c^g) on pairs of nonzero characters
  std::size_t q = na - 1;
  std::size_t eqdim = q * q;
  Vec rhs(eqdim, 0);
  const FiniteGroup& dual = *c.group;
  for (int phi = 1; phi < na; ++phi)
    for (int chi = 1; chi < na; ++chi) {
      std::uint32_t diff =
          (c.at(phi, chi) + m - c.at(perm[phi], perm[chi])) % m;
      rhs[std::size_t(phi - 1) * q + (chi - 1)] = diff * scale % M;
    }

  // columns of the coboundary map d: C^1 -> C^2 as generator rows
  std::vector<Vec> gens(q, Vec(eqdim, 0));
  for (int x = 1; x < na; ++x) {
    Vec& col = gens[x - 1];
    for (int phi = 1; phi < na; ++phi)
      for (int chi = 1; chi < na; ++chi) {
        std::size_t i = std::size_t(phi - 1) * q + (chi - 1);
        Value v = col[i];
        if (phi == x) v = ring.add(v, 1);
        if (chi == x) v = ring.add(v, 1);
        if (dual.mul(phi, chi) == x) v = ring.sub(v, 1);
        col[i] = v;
      }
  }

  auto order = seeded_permutation(q, order_seed);
  std::vector<Vec> permuted;
  permuted.reserve(q);
  for (std::size_t i : order) permuted.push_back(gens[i]);
  auto sol = zn::solve_combination(ring, eqdim, permuted, rhs);
  if (!sol)
    throw std::domain_error("solve_z: no 1-cochain exists; the class is not invariant under " +
                            std::to_string(g));
  std::vector<std::uint32_t> z(na, 0);
  for (std::size_t i = 0; i < q; ++i) z[order[i] + 1] = (*sol)[i];
  return z;
}

ExtensionCocycle tau(KActionPtr actp, const Cocycle& c, std::uint64_t order_seed) {
  const KAction& act = *actp;
  int nk = act.k->order(), na = act.a.order();
  std::uint32_t m = c.modulus;
  std::uint32_t M = m * std::uint32_t(act.a.exponent());
  std::vector<std::vector<std::uint32_t>> z(nk);
  for (int g = 0; g < nk; ++g) z[g] = solve_z(act, c, g, order_seed);

  const FiniteGroup& dual = *c.group;
  std::vector<std::vector<int>> table(nk, std::vector<int>(nk, 0));
  for (int g = 0; g < nk; ++g) {
    int gi = act.k->inv(g);
    std::vector<int> perm(na);
    for (int chi = 0; chi < na; ++chi) perm[chi] = act.act_dual(gi, chi);
    for (int h = 0; h < nk; ++h) {
      int gh = act.k->mul(g, h);
      // w = z_g + (z_h)^g - z_{gh} as a 1-cochain on A-hat over Z/M
      std::vector<std::uint32_t> w(na, 0);
      for (int chi = 1; chi < na; ++chi)
        w[chi] = (std::uint64_t(z[g][chi]) + z[h][perm[chi]] + M - z[gh][chi]) % M;
      // membership: dw = 0, i.e. w is a character of A-hat
      for (int phi = 1; phi < na; ++phi)
        for (int chi = 1; chi < na; ++chi) {
          std::uint32_t dw = std::uint32_t(
              (std::uint64_t(w[phi]) + w[chi] + M - w[dual.mul(phi, chi)]) % M);
          if (dw)
            throw std::logic_error("tau: z_g(z_h)^g z_{gh}^-1 is not A-valued at K pair (" +
                                   std::to_string(g) + "," + std::to_string(h) + ")");
        }
      // extract the element of A under the fixed perfect pairing
      int r = act.a.rank();
      std::vector<int> elem(r, 0);
      for (int j = 0; j < r; ++j) {
        std::vector<int> t(r, 0);
        t[j] = 1;
        std::uint32_t vj = w[act.a.index(t)];
        std::uint32_t unit = M / std::uint32_t(act.a.factors[j]);
        if (vj % unit)
          throw std::logic_error("tau: character value does not live in A at K pair (" +
                                 std::to_string(g) + "," + std::to_string(h) + ")");
        elem[j] = int(vj / unit) % act.a.factors[j];
      }
      int a_elem = act.a.index(elem);
      for (int chi = 0; chi < na; ++chi) {
        // pairing lands in Z/exp(A); rescale into Z/M
        std::uint32_t expect = std::uint32_t(std::uint64_t(dual_pairing(act.a, chi, a_elem)) *
                                             (M / act.a.exponent()) % M);
        if (expect != w[chi])
          throw std::logic_error("tau: extracted element disagrees with the cochain");
      }
      table[g][h] = a_elem;
    }
  }
  return ExtensionCocycle::from_table(std::move(actp), std::move(table));
}

namespace {

// scaled coordinates for A-valued 2-cochains on K: component i of b(g,h)
// is stored as b(g,h)_i * (exp(A)/d_i) in Z/exp(A)
struct ScaledCochains {
  const KAction& act;
  int nk, r;
  std::uint32_t m;
  std::vector<std::vector<std::vector<int>>> actmat; // [g][i][j], act(g, e_j) = sum_i actmat[g][i][j] e_i

  explicit ScaledCochains(const KAction& a)
      : act(a), nk(a.k->order()), r(a.a.rank()), m(std::uint32_t(a.a.exponent())) {
    actmat.assign(nk, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
    for (int g = 0; g < nk; ++g)
      for (int j = 0; j < r; ++j) {
        std::vector<int> t(r, 0);
        t[j] = 1;
        auto img = act.a.tuple(act.act(g, act.a.index(t)));
        for (int i = 0; i < r; ++i) actmat[g][i][j] = img[i];
      }
  }

  std::size_t dim() const { return std::size_t(nk - 1) * (nk - 1) * r; }
  std::size_t idx(int g, int h, int i) const {
    return (std::size_t(g - 1) * (nk - 1) + (h - 1)) * r + i;
  }

  // coefficient of the scaled variable s_{(h,k),j} representing component i
  // of g.b(h,k):  (actmat[g][i][j] * d_j / d_i) mod m
  Value action_coeff(int g, int i, int j) const {
    long long c = (long long)actmat[g][i][j] * act.a.factors[j] / act.a.factors[i];
    return Value(c % m);
  }

  Vec scaled(const ExtensionCocycle& b) const {
    Vec v(dim(), 0);
    for (int g = 1; g < nk; ++g)
      for (int h = 1; h < nk; ++h) {
        auto t = act.a.tuple(b.table[g][h]);
        for (int i = 0; i < r; ++i)
          v[idx(g, h, i)] = Value(std::uint64_t(t[i]) * (m / act.a.factors[i]) % m);
      }
    return v;
  }

  ExtensionCocycle decode(const Vec& v, KActionPtr actp) const {
    std::vector<std::vector<int>> table(nk, std::vector<int>(nk, 0));
    for (int g = 1; g < nk; ++g)
      for (int h = 1; h < nk; ++h) {
        std::vector<int> t(r, 0);
        for (int i = 0; i < r; ++i) {
          std::uint32_t unit = m / act.a.factors[i];
          std::uint32_t s = v[idx(g, h, i)];
          if (s % unit) throw std::logic_error("scaled cochain entry out of pattern");
          t[i] = int(s / unit) % act.a.factors[i];
        }
        table[g][h] = act.a.index(t);
      }
    return ExtensionCocycle::from_table(std::move(actp), std::move(table));
  }

  // rows spanning the scaled coboundary image dC^1
  std::vector<Vec> coboundary_rows() const {
    std::vector<Vec> rows;
    for (int x = 1; x < nk; ++x)
      for (int j = 0; j < r; ++j) {
        Vec row(dim(), 0);
        Ring ring(m);
        bool nz = false;
        for (int g = 1; g < nk; ++g)
          for (int h = 1; h < nk; ++h) {
            // d beta (g,h) = g.beta(h) - beta(gh) + beta(g) with beta = e_j at x
            for (int i = 0; i < r; ++i) {
              Value v = 0;
              if (h == x) v = ring.add(v, Value(std::uint64_t(actmat[g][i][j]) *
                                                (m / act.a.factors[i]) % m));
              if (act.k->mul(g, h) == x && i == j)
                v = ring.sub(v, Value(m / act.a.factors[j]));
              if (g == x && i == j) v = ring.add(v, Value(m / act.a.factors[j]));
              if (v) {
                std::size_t p = idx(g, h, i);
                row[p] = ring.add(row[p], v);
                nz = true;
              }
            }
          }
        if (nz) rows.push_back(std::move(row));
      }
    return rows;
  }

  // constraint rows cutting out scaled cocycles: twisted identity plus the
  // divisibility pattern d_i * s = 0
  std::vector<Vec> cocycle_constraints() const {
    std::vector<Vec> rows;
    Ring ring(m);
    for (int g = 1; g < nk; ++g)
      for (int h = 1; h < nk; ++h)
        for (int l = 1; l < nk; ++l) {
          int hl = act.k->mul(h, l);
          int gh = act.k->mul(g, h);
          for (int i = 0; i < r; ++i) {
            Vec row(dim(), 0);
            bool nz = false;
            auto bump = [&](std::size_t p, Value v, bool plus) {
              if (!v) return;
              row[p] = plus ? ring.add(row[p], v) : ring.sub(row[p], v);
              nz = true;
            };
            // g.b(h,l) + b(g,hl) - b(g,h) - b(gh,l) = 0 (component i)
            for (int j = 0; j < r; ++j) bump(idx(h, l, j), action_coeff(g, i, j), true);
            if (hl != 0) bump(idx(g, hl, i), 1, true);
            bump(idx(g, h, i), 1, false);
            if (gh != 0) bump(idx(gh, l, i), 1, false);
            if (nz) rows.push_back(std::move(row));
          }
        }
    for (int g = 1; g < nk; ++g)
      for (int h = 1; h < nk; ++h)
        for (int i = 0; i < r; ++i) {
          Value d = Value(act.a.factors[i]) % m;
          if (d == 0) continue;
          Vec row(dim(), 0);
          row[idx(g, h, i)] = d;
          rows.push_back(std::move(row));
        }
    return rows;
  }
};

} // namespace

bool is_extension_coboundary(const KAction& act, const ExtensionCocycle& diff) {
  ScaledCochains sc(act);
  int nk = sc.nk, r = sc.r;
  if (nk == 1) return true;
  Ring ring(sc.m);
  // unknowns w_{x,i} for x != e: beta(x)_i = w_{x,i} mod d_i
  std::size_t ucount = std::size_t(nk - 1) * r;
  std::size_t eqdim = sc.dim();
  Vec rhs = sc.scaled(diff);
  std::vector<Vec> gens(ucount, Vec(eqdim, 0));
  auto uidx = [r](int x, int j) { return std::size_t(x - 1) * r + j; };
  for (int g = 1; g < nk; ++g)
    for (int h = 1; h < nk; ++h) {
      int gh = act.k->mul(g, h);
      for (int i = 0; i < r; ++i) {
        std::size_t p = sc.idx(g, h, i);
        // g.beta(h): sum_j (m/d_i) M_ij w_{h,j}  (w is unscaled, unlike the
        // s-variables of the cocycle constraints)
        for (int j = 0; j < r; ++j) {
          Value c = Value(std::uint64_t(sc.m / act.a.factors[i]) * sc.actmat[g][i][j] % sc.m);
          if (c) {
            Vec& col = gens[uidx(h, j)];
            col[p] = ring.add(col[p], c);
          }
        }
        // + beta(g)_i - beta(gh)_i, scaled by m/d_i
        Value unit = Value(sc.m / act.a.factors[i]);
        {
          Vec& col = gens[uidx(g, i)];
          col[p] = ring.add(col[p], unit);
        }
        if (gh != 0) {
          Vec& col = gens[uidx(gh, i)];
          col[p] = ring.sub(col[p], unit);
        }
      }
    }
  return zn::solve_combination(ring, eqdim, gens, rhs).has_value();
}

std::vector<ExtensionCocycle> extension_class_transversal(KActionPtr actp, std::size_t cap) {
  const KAction& act = *actp;
  ScaledCochains sc(act);
  if (sc.nk == 1) return {ExtensionCocycle::zero(actp)};
  Ring ring(sc.m);
  Mat z2;
  z2.cols = sc.dim();
  {
    RowSpan span(ring, sc.dim());
    for (auto& row : sc.cocycle_constraints()) span.insert(std::move(row));
    z2 = zn::annihilator(span);
  }
  Mat b2;
  b2.cols = sc.dim();
  {
    RowSpan span(ring, sc.dim());
    for (auto& row : sc.coboundary_rows()) span.insert(std::move(row));
    b2.rows = span.basis();
  }
  zn::Quotient q = zn::quotient(ring, z2, b2);
  unsigned __int128 count = 1;
  for (Value d : q.invariant_factors) count *= d;
  std::vector<ExtensionCocycle> out;
  if (count > cap) count = cap; // deterministic prefix of the enumeration
  std::vector<Value> tuple(q.invariant_factors.size(), 0);
  for (std::uint64_t t = 0; t < std::uint64_t(count); ++t) {
    Vec coords(z2.rows.size(), 0);
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (!tuple[k]) continue;
      for (std::size_t c = 0; c < coords.size(); ++c)
        coords[c] = ring.add(coords[c], ring.mul(tuple[k] % sc.m, q.generator_coords[k][c]));
    }
    Vec vec(sc.dim(), 0);
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (!coords[c]) continue;
      for (std::size_t i = 0; i < vec.size(); ++i)
        vec[i] = ring.add(vec[i], ring.mul(coords[c], z2.rows[c][i]));
    }
    out.push_back(sc.decode(vec, actp));
    for (std::size_t k = tuple.size(); k-- > 0;) {
      if (++tuple[k] < q.invariant_factors[k]) break;
      tuple[k] = 0;
    }
  }
  return out;
}

GroupPtr extension_group(const KAction& act, const ExtensionCocycle& b) {
  int nk = act.k->order(), na = act.a.order();
  int n = na * nk;
  auto enc = [nk](int a, int g) { return a * nk + g; };
  std::vector<int> t(std::size_t(n) * n);
  for (int a = 0; a < na; ++a)
    for (int g = 0; g < nk; ++g)
      for (int a2 = 0; a2 < na; ++a2)
        for (int g2 = 0; g2 < nk; ++g2) {
          int asum = act.a.add(act.a.add(a, act.act(g, a2)), b.table[g][g2]);
          t[std::size_t(enc(a, g)) * n + enc(a2, g2)] = enc(asum, act.k->mul(g, g2));
        }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(n, std::move(t)));
}

MonoidalPairCertificate monoidal_pair(KActionPtr act, const Cocycle& c,
                                      const ExtensionCocycle& b1) {
  MonoidalPairCertificate cert;
  cert.action = act;
  cert.form = cocycle_to_form(act->a, c);
  cert.form_degenerate = radical_and_b(cert.form).radical.size() > 1;
  cert.b1 = b1;
  cert.tau_c = tau(act, c);
  ExtensionCocycle b2 = b1.add(cert.tau_c);
  cert.g1 = extension_group(*act, b1);
  cert.g2 = extension_group(*act, b2);
  cert.groups_isomorphic = are_isomorphic(*cert.g1, *cert.g2);
  return cert;
}

std::vector<std::vector<int>> automorphism_group(const AbelianGroup& a, std::size_t cap) {
  int r = a.rank(), n = a.order();
  std::vector<std::vector<int>> out;
  if (r == 0) return {std::vector<int>{0}};
  double combos = 1;
  for (int i = 0; i < r; ++i) combos *= n;
  if (combos > double(cap)) return {};
  std::vector<int> gen(r);
  for (int i = 0; i < r; ++i) {
    std::vector<int> t(r, 0);
    t[i] = 1;
    gen[i] = a.index(t);
  }
  // candidate images of the generators; d_i * y_i = 0 required
  std::vector<std::vector<int>> allowed(r);
  for (int i = 0; i < r; ++i)
    for (int y = 0; y < n; ++y) {
      int acc = 0;
      for (int k = 0; k < a.factors[i]; ++k) acc = a.add(acc, y);
      if (acc == 0) allowed[i].push_back(y);
    }
  std::vector<int> choice(r, 0);
  std::vector<std::size_t> pos(r, 0);
  while (true) {
    // build the endomorphism x -> sum x_i * choice_i
    std::vector<int> img(n, 0);
    for (int x = 0; x < n; ++x) {
      auto t = a.tuple(x);
      int acc = 0;
      for (int i = 0; i < r; ++i)
        for (int k = 0; k < t[i]; ++k) acc = a.add(acc, allowed[i][pos[i]]);
      img[x] = acc;
    }
    std::vector<bool> seen(n, false);
    bool bij = true;
    for (int x = 0; x < n && bij; ++x) {
      if (seen[img[x]]) bij = false;
      seen[img[x]] = true;
    }
    if (bij) out.push_back(std::move(img));
    int i = r - 1;
    while (i >= 0 && ++pos[i] == allowed[i].size()) pos[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

namespace {

std::vector<int> permutation_cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> type;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

int permutation_order(const std::vector<int>& perm) {
  std::vector<int> type = permutation_cycle_type(perm);
  long long o = 1;
  for (int t : type) o = std::lcm(o, (long long)t);
  return int(o);
}

} // namespace

std::vector<std::vector<std::vector<int>>> enumerate_actions(GroupPtr k, const AbelianGroup& a,
                                                             std::size_t cap) {
  int nk = k->order(), na = a.order();
  std::vector<std::vector<std::vector<int>>> out;
  auto auts = automorphism_group(a);
  if (auts.empty()) return out;

  // greedy minimal generating sequence of K
  std::vector<int> gens;
  Subgroup span = generated_subgroup(k, gens);
  while (span.order() < nk) {
    for (int x = 0; x < nk; ++x)
      if (!span.contains(x)) {
        gens.push_back(x);
        break;
      }
    span = generated_subgroup(k, gens);
  }
  if (gens.empty()) {
    std::vector<std::vector<int>> table(1);
    table[0].resize(na);
    std::iota(table[0].begin(), table[0].end(), 0);
    out.push_back(std::move(table));
    return out;
  }

  bool k_abelian = k->is_abelian();
  bool dedupe_first = auts.size() > 2000;

  // candidates per generator: automorphisms of compatible order
  std::vector<std::vector<std::size_t>> cands(gens.size());
  std::set<std::vector<int>> first_types;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    int o = k->element_order(gens[t]);
    for (std::size_t ai = 0; ai < auts.size(); ++ai) {
      if (o % permutation_order(auts[ai])) continue;
      if (t == 0 && dedupe_first) {
        auto type = permutation_cycle_type(auts[ai]);
        if (!first_types.insert(type).second) continue;
      }
      cands[t].push_back(ai);
    }
  }

  std::set<std::vector<std::vector<int>>> seen;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<std::size_t> pos(gens.size(), 0);
  while (true) {
    bool ok = true;
    if (k_abelian) {
      for (std::size_t i = 0; i + 1 < gens.size() && ok; ++i)
        for (std::size_t j = i + 1; j < gens.size() && ok; ++j) {
          const auto& f = auts[cands[i][pos[i]]];
          const auto& g = auts[cands[j][pos[j]]];
          ok = compose(f, g) == compose(g, f);
        }
    }
    if (ok) {
      // extend to a homomorphism on all of K by closure; conflicts reject
      std::vector<std::vector<int>> table(nk);
      std::vector<bool> have(nk, false);
      table[0].resize(na);
      std::iota(table[0].begin(), table[0].end(), 0);
      have[0] = true;
      std::vector<int> work = {0};
      bool good = true;
      for (std::size_t w = 0; w < work.size() && good; ++w) {
        int x = work[w];
        for (std::size_t t = 0; t < gens.size() && good; ++t) {
          int y = k->mul(x, gens[t]);
          auto img = compose(auts[cands[t][pos[t]]], table[x]);
          if (!have[y]) {
            table[y] = std::move(img);
            have[y] = true;
            work.push_back(y);
          } else if (table[y] != img) {
            good = false;
          }
        }
      }
      for (int x = 0; x < nk && good; ++x) good = have[x];
      // full homomorphism check (covers nonabelian K relations)
      if (good) {
        for (int g = 0; g < nk && good; ++g)
          for (int h = 0; h < nk && good; ++h)
            good = compose(table[g], table[h]) == table[k->mul(g, h)];
      }
      if (good && seen.insert(table).second) {
        out.push_back(std::move(table));
        if (out.size() >= cap) return out;
      }
    }
    std::size_t i = gens.size();
    while (i-- > 0) {
      if (++pos[i] < cands[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

namespace {

struct SearchCandidate {
  std::vector<int> a_factors;
  std::string k_name;
  int size;
};

} // namespace

std::vector<MonoidalPairCertificate> monoidal_pair_search(const PairSearchOptions& opt) {
  std::vector<MonoidalPairCertificate> found;
  std::vector<std::string> k_names = {"c2", "c3", "c4", "v4", "c5",  "c6",  "s3", "c8",
                                      "c2xc4", "c2xc2xc2", "c9", "c3xc3", "q8", "d8",
                                      "c10", "c12", "c2xc6", "a4", "d12", "c2xc8",
                                      "c4xc4", "c2xc2xc4", "c16", "c2xc2xc2xc2"};
  std::vector<SearchCandidate> items;
  std::vector<std::vector<int>> a_types = abelian_types(opt.max_a);
  for (const auto& kn : k_names) {
    GroupPtr k;
    try {
      k = catalog_group(kn);
    } catch (...) {
      continue;
    }
    if (k->order() > opt.max_k) continue;
    for (const auto& af : a_types) {
      int na = 1;
      for (int d : af) na *= d;
      int size = na * k->order();
      if (size > opt.max_group) continue;
      items.push_back({af, kn, size});
    }
  }
  std::sort(items.begin(), items.end(), [](const SearchCandidate& x, const SearchCandidate& y) {
    if (x.size != y.size) return x.size < y.size;
    if (x.a_factors != y.a_factors) return x.a_factors < y.a_factors;
    return x.k_name < y.k_name;
  });

  for (const auto& item : items) {
    GroupPtr k = catalog_group(item.k_name);
    AbelianGroup a = AbelianGroup::from_factors(item.a_factors);
    for (auto& action_table : enumerate_actions(k, a)) {
      KActionPtr act;
      try {
        act = KAction::make(k, a, std::move(action_table));
      } catch (...) {
        continue;
      }
      auto forms = k_invariant_classes(*act);
      for (const AlternatingForm& form : forms) {
        if (form.is_zero()) continue;
        Cocycle c = form_to_cocycle(form);
        ExtensionCocycle t = tau(act, c);
        if (t.is_zero() || is_extension_coboundary(*act, t)) continue;
        auto b1s = extension_class_transversal(act, opt.b1_cap);
        for (const auto& b1 : b1s) {
          MonoidalPairCertificate cert = monoidal_pair(act, c, b1);
          cert.description = "A=" + abelian_name(item.a_factors) + " K=" + item.k_name;
          if (!opt.require_nonisomorphic || !cert.groups_isomorphic) {
            found.push_back(std::move(cert));
            if (found.size() >= opt.max_certified) return found;
          }
        }
      }
    }
  }
  return found;
}

H2FgAbelian h2_fg_abelian(int free_rank, const std::vector<int>& torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) fail("torsion factors must be >= 2");
    if (i && torsion[i] % torsion[i - 1]) fail("torsion factors must form a divisibility chain");
  }
  H2FgAbelian out;
  out.torus_rank = free_rank * (free_rank - 1) / 2;
  std::vector<int> cyclic;
  for (int d : torsion)
    for (int i = 0; i < free_rank; ++i) cyclic.push_back(d);
  for (std::size_t i = 0; i < torsion.size(); ++i)
    for (std::size_t j = i + 1; j < torsion.size(); ++j)
      cyclic.push_back(std::gcd(torsion[i], torsion[j]));
  out.invariant_factors = invariant_factor_form(std::move(cyclic));
  return out;
}

std::vector<int> invariant_factor_form(std::vector<int> cyclic_orders) {
  std::map<int, std::vector<int>> primary; // prime -> exponents, descending
  for (int d : cyclic_orders) {
    for (int p = 2; p <= d; ++p) {
      if (d % p) continue;
      int e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      primary[p].push_back(e);
    }
  }
  std::size_t depth = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.rbegin(), es.rend());
    depth = std::max(depth, es.size());
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < depth; ++k) {
    long long d = 1;
    for (auto& [p, es] : primary) {
      if (k >= es.size()) continue;
      for (int i = 0; i < es[k]; ++i) d *= p;
    }
    if (d > 1) out.push_back(int(d));
  }
  std::reverse(out.begin(), out.end()); // ascending divisibility chain
  return out;
}

} // namespace cocycle
