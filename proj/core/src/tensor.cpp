#include "cocycle/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cocycle {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

GroupTensor::GroupTensor(GroupPtr g, int degree, std::uint32_t conductor)
    : group_(std::move(g)), degree_(degree), conductor_(conductor) {
  if (degree < 1 || degree > 3) fail("tensor degree must be 1, 2 or 3");
  std::size_t size = 1;
  for (int i = 0; i < degree; ++i) size *= std::size_t(group_->order());
  coeff_.assign(size, Cyclotomic::zero(conductor));
}

GroupTensor GroupTensor::identity(GroupPtr g, int degree, std::uint32_t conductor) {
  GroupTensor t(std::move(g), degree, conductor);
  std::vector<int> e(degree, 0);
  t.set(e, Cyclotomic::one(conductor));
  return t;
}

std::size_t GroupTensor::flat(std::span<const int> idx) const {
  std::size_t f = 0;
  for (int i = 0; i < degree_; ++i) f = f * group_->order() + idx[i];
  return f;
}

const Cyclotomic& GroupTensor::at2(int g, int h) const {
  return coeff_[std::size_t(g) * group_->order() + h];
}

void GroupTensor::set2(int g, int h, Cyclotomic v) {
  coeff_[std::size_t(g) * group_->order() + h] = std::move(v);
}

std::size_t GroupTensor::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& v : coeff_)
    if (!v.is_zero()) ++c;
  return c;
}

GroupTensor GroupTensor::mul(const GroupTensor& o) const {
  if (group_->order() != o.group_->order() || degree_ != o.degree_ || conductor_ != o.conductor_)
    fail("tensor product shape mismatch");
  const FiniteGroup& G = *group_;
  GroupTensor out(group_, degree_, conductor_);
  int n = G.order();
  std::vector<int> ia(degree_), ib(degree_), ic(degree_);
  std::size_t size = coeff_.size();
  for (std::size_t a = 0; a < size; ++a) {
    if (coeff_[a].is_zero()) continue;
    std::size_t ra = a;
    for (int d = degree_; d-- > 0;) {
      ia[d] = int(ra % n);
      ra /= n;
    }
    for (std::size_t b = 0; b < size; ++b) {
      if (o.coeff_[b].is_zero()) continue;
      std::size_t rb = b;
      for (int d = degree_; d-- > 0;) {
        ib[d] = int(rb % n);
        rb /= n;
      }
      for (int d = 0; d < degree_; ++d) ic[d] = G.mul(ia[d], ib[d]);
      std::size_t f = out.flat(ic);
      out.coeff_[f] = out.coeff_[f] + coeff_[a] * o.coeff_[b];
    }
  }
  return out;
}

GroupTensor GroupTensor::star() const {
  const FiniteGroup& G = *group_;
  GroupTensor out(group_, degree_, conductor_);
  int n = G.order();
  std::vector<int> idx(degree_), inv(degree_);
  for (std::size_t a = 0; a < coeff_.size(); ++a) {
    if (coeff_[a].is_zero()) continue;
    std::size_t r = a;
    for (int d = degree_; d-- > 0;) {
      idx[d] = int(r % n);
      r /= n;
    }
    for (int d = 0; d < degree_; ++d) inv[d] = G.inv(idx[d]);
    out.coeff_[out.flat(inv)] = coeff_[a].conj();
  }
  return out;
}

GroupTensor GroupTensor::flip21() const {
  if (degree_ != 2) fail("flip21 needs a degree-2 tensor");
  GroupTensor out(group_, 2, conductor_);
  int n = group_->order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) out.set2(h, g, at2(g, h));
  return out;
}

GroupTensor GroupTensor::add(const GroupTensor& o) const {
  GroupTensor out = *this;
  for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = coeff_[i] + o.coeff_[i];
  return out;
}

bool GroupTensor::operator==(const GroupTensor& o) const {
  if (group_->order() != o.group_->order() || degree_ != o.degree_ ||
      conductor_ != o.conductor_)
    return false;
  for (std::size_t i = 0; i < coeff_.size(); ++i)
    if (!(coeff_[i] == o.coeff_[i])) return false;
  return true;
}

bool GroupTensor::is_identity() const { return *this == identity(group_, degree_, conductor_); }

GroupTensor GroupTensor::coproduct_left() const {
  if (degree_ != 2) fail("coproduct needs a degree-2 tensor");
  GroupTensor out(group_, 3, conductor_);
  int n = group_->order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const Cyclotomic& v = at2(g, h);
      if (v.is_zero()) continue;
      out.set(std::vector<int>{g, g, h}, v); // Delta(g) (x) h
    }
  return out;
}

GroupTensor GroupTensor::coproduct_right() const {
  if (degree_ != 2) fail("coproduct needs a degree-2 tensor");
  GroupTensor out(group_, 3, conductor_);
  int n = group_->order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const Cyclotomic& v = at2(g, h);
      if (v.is_zero()) continue;
      out.set(std::vector<int>{g, h, h}, v); // g (x) Delta(h)
    }
  return out;
}

GroupTensor GroupTensor::tensor_with_unit_right() const {
  if (degree_ != 2) fail("needs a degree-2 tensor");
  GroupTensor out(group_, 3, conductor_);
  int n = group_->order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const Cyclotomic& v = at2(g, h);
      if (v.is_zero()) continue;
      out.set(std::vector<int>{g, h, 0}, v);
    }
  return out;
}

GroupTensor GroupTensor::tensor_with_unit_left() const {
  if (degree_ != 2) fail("needs a degree-2 tensor");
  GroupTensor out(group_, 3, conductor_);
  int n = group_->order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const Cyclotomic& v = at2(g, h);
      if (v.is_zero()) continue;
      out.set(std::vector<int>{0, g, h}, v);
    }
  return out;
}

GroupTensor GroupTensor::multiplied_legs() const {
  if (degree_ != 2) fail("needs a degree-2 tensor");
  GroupTensor out(group_, 1, conductor_);
  int n = group_->order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const Cyclotomic& v = at2(g, h);
      if (v.is_zero()) continue;
      int gh = group_->mul(g, h);
      std::vector<int> idx = {gh};
      out.set(idx, out.at(idx) + v);
    }
  return out;
}

AbelianStructure abelian_structure(GroupPtr g, const Subgroup& s) {
  if (!is_subgroup(*g, s.elements)) fail("abelian_structure: not a subgroup");
  for (int a : s.elements)
    for (int b : s.elements)
      if (g->mul(a, b) != g->mul(b, a)) fail("abelian_structure: subgroup is not abelian");

  // peel off cyclic factors: a generator of maximal order, then a complement
  std::vector<int> generators; // parent indices, collected largest order first
  std::vector<int> orders;
  std::vector<int> current = s.elements;
  while (current.size() > 1) {
    int best = -1, best_ord = 0;
    for (int a : current)
      if (a != 0 && g->element_order(a) > best_ord) {
        best = a;
        best_ord = g->element_order(a);
      }
    std::vector<int> cyc;
    {
      int x = 0;
      do {
        cyc.push_back(x);
        x = g->mul(x, best);
      } while (x != 0);
      std::sort(cyc.begin(), cyc.end());
    }
    generators.push_back(best);
    orders.push_back(best_ord);
    if (cyc.size() == current.size()) break;
    // find a complement inside `current` (always exists for maximal order)
    int k = int(current.size());
    std::vector<int> from(g->order(), -1);
    for (int i = 0; i < k; ++i) from[current[i]] = i;
    std::vector<int> table(std::size_t(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        table[std::size_t(i) * k + j] = from[g->mul(current[i], current[j])];
    auto sub_group =
        std::make_shared<const FiniteGroup>(FiniteGroup::from_table(k, std::move(table)));
    std::vector<int> cyc_local;
    for (int x : cyc) cyc_local.push_back(from[x]);
    std::sort(cyc_local.begin(), cyc_local.end());
    std::vector<int> complement_local;
    for (const auto& cand : all_subgroups(*sub_group, k)) {
      if (cand.size() * cyc.size() != current.size()) continue;
      bool trivial_meet = true;
      for (int x : cand)
        if (x != 0 && std::binary_search(cyc_local.begin(), cyc_local.end(), x)) {
          trivial_meet = false;
          break;
        }
      if (trivial_meet) {
        complement_local = cand;
        break;
      }
    }
    if (complement_local.empty())
      throw std::logic_error("abelian_structure: no complement found");
    std::vector<int> next;
    for (int x : complement_local) next.push_back(current[x]);
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  std::reverse(generators.begin(), generators.end());
  std::reverse(orders.begin(), orders.end());

  AbelianStructure out;
  out.subgroup = s;
  out.group = orders.empty() ? AbelianGroup{} : AbelianGroup::from_factors(orders);
  int na = out.group.order();
  if (na != int(s.elements.size()))
    throw std::logic_error("abelian_structure: factor product mismatch");
  out.to_parent.assign(na, 0);
  out.from_parent.assign(g->order(), -1);
  for (int t = 0; t < na; ++t) {
    auto tup = out.group.tuple(t);
    int x = 0;
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (int rep = 0; rep < tup[i]; ++rep) x = g->mul(x, generators[i]);
    out.to_parent[t] = x;
    out.from_parent[x] = t;
  }
  for (int e : s.elements)
    if (out.from_parent[e] < 0) throw std::logic_error("abelian_structure: not a bijection");
  return out;
}

GroupTensor embed_dual_cocycle(GroupPtr g, const AbelianStructure& a, const Cocycle& c) {
  int na = a.group.order();
  std::uint32_t mbar = std::uint32_t(std::max(a.group.exponent(), 1));
  if (c.group->order() != na) fail("embed_dual_cocycle: cocycle lives on the wrong dual");
  if (na > 1 && c.modulus != mbar) fail("embed_dual_cocycle: conductor mismatch with exp(A)");
  std::uint32_t conductor =
      std::uint32_t(std::lcm<long long>(std::max<std::uint32_t>(mbar, 1), g->exponent()));

  // minimal idempotents e_chi = |A|^-1 sum_a <chi, a^-1> a
  std::vector<std::vector<Cyclotomic>> idem(na);
  mpq_class inv_na(1, na);
  for (int chi = 0; chi < na; ++chi) {
    idem[chi].assign(na, Cyclotomic::zero(conductor));
    for (int x = 0; x < na; ++x) {
      int pair = dual_pairing(a.group, chi, a.group.neg(x));
      idem[chi][x] =
          Cyclotomic::root_power(conductor, std::uint64_t(pair) * (conductor / mbar))
              .scaled(inv_na);
    }
  }

  GroupTensor f(g, 2, conductor);
  for (int chi = 0; chi < na; ++chi)
    for (int psi = 0; psi < na; ++psi) {
      Cyclotomic phase = Cyclotomic::root_power(
          conductor, std::uint64_t(c.at(chi, psi)) * (conductor / std::max(c.modulus, 1u)));
      for (int x = 0; x < na; ++x) {
        if (idem[chi][x].is_zero()) continue;
        for (int y = 0; y < na; ++y) {
          int px = a.to_parent[x], py = a.to_parent[y];
          f.set2(px, py, f.at2(px, py) + phase * idem[chi][x] * idem[psi][y]);
        }
      }
    }

  if (!f.mul(f.star()).is_identity())
    throw std::logic_error("embed_dual_cocycle: result is not unitary");
  return f;
}

bool check_dual_cocycle(const GroupTensor& f) {
  if (f.degree() != 2) fail("check_dual_cocycle needs a degree-2 tensor");
  const FiniteGroup& G = *f.group();
  int n = G.order();
  if (n <= 16) {
    GroupTensor lhs = f.tensor_with_unit_right().mul(f.coproduct_left());
    GroupTensor rhs = f.tensor_with_unit_left().mul(f.coproduct_right());
    return lhs == rhs;
  }
  // streaming over index triples for larger groups
  std::vector<std::pair<int, int>> support;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!f.at2(a, b).is_zero()) support.push_back({a, b});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        Cyclotomic lhs = Cyclotomic::zero(f.conductor());
        Cyclotomic rhs = Cyclotomic::zero(f.conductor());
        for (auto [a, b] : support) {
          // (F x 1)(Delta x i)(F): sum F(a,b) [a^-1 u = b^-1 v] F(a^-1 u, w)
          int p = G.mul(G.inv(a), u);
          if (p == G.mul(G.inv(b), v)) lhs = lhs + f.at2(a, b) * f.at2(p, w);
          // (1 x F)(i x Delta)(F): sum F(a,b) [a^-1 v = b^-1 w] F(u, a^-1 v)
          int q = G.mul(G.inv(a), v);
          if (q == G.mul(G.inv(b), w)) rhs = rhs + f.at2(a, b) * f.at2(u, q);
        }
        if (!(lhs == rhs)) return false;
      }
  return true;
}

GroupTensor r_matrix(const GroupTensor& f) {
  if (!f.mul(f.star()).is_identity()) fail("r_matrix: input cocycle is not unitary");
  GroupTensor r = f.flip21().mul(f.star());
  if (!(r.flip21() == r.star()))
    throw std::logic_error("r_matrix: triangularity R_21 = R^* fails");
  if (!r.flip21().mul(r).is_identity()) throw std::logic_error("r_matrix: R_21 R = 1 fails");
  return r;
}

SliceSpan slice_span(const GroupTensor& r) {
  if (r.degree() != 2) fail("slice_span needs a degree-2 tensor");
  const FiniteGroup& G = *r.group();
  int n = G.order();
  std::vector<std::vector<Cyclotomic>> rows(n), cols(n);
  for (int g = 0; g < n; ++g) {
    rows[g].reserve(n);
    cols[g].reserve(n);
    for (int h = 0; h < n; ++h) {
      rows[g].push_back(r.at2(g, h));
      cols[g].push_back(r.at2(h, g));
    }
  }
  SliceSpan out;
  out.basis = cyclotomic_row_basis(rows);
  out.rank = out.basis.size();
  // U_l = U_r: row space and column space coincide as subspaces of CG
  auto col_basis = cyclotomic_row_basis(cols);
  std::vector<std::vector<Cyclotomic>> stacked = out.basis;
  stacked.insert(stacked.end(), col_basis.begin(), col_basis.end());
  if (col_basis.size() != out.rank || cyclotomic_rank(stacked) != out.rank)
    throw std::logic_error("slice_span: left and right slice spaces differ");
  std::vector<int> gens;
  for (const auto& row : out.basis)
    for (int h = 0; h < n; ++h)
      if (!row[h].is_zero()) gens.push_back(h);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  out.support = generated_subgroup(r.group(), gens);
  return out;
}

bool is_cocommutative_twist(const GroupTensor& f) {
  if (f.degree() != 2) fail("is_cocommutative_twist needs a degree-2 tensor");
  GroupTensor t = f.star().mul(f.flip21());
  const FiniteGroup& G = *f.group();
  int n = G.order();
  for (int g = 0; g < n; ++g) {
    GroupTensor d(f.group(), 2, f.conductor());
    d.set2(g, g, Cyclotomic::one(f.conductor()));
    if (!(t.mul(d) == d.mul(t))) return false;
  }
  return true;
}

} // namespace cocycle
