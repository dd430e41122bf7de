#include "cocycle/zn.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace cocycle::zn {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void xgcd_i64(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b) {
    std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b;
    b = r;
    std::int64_t ns = s0 - q * s1;
    s0 = s1;
    s1 = ns;
    std::int64_t nt = t0 - q * t1;
    t0 = t1;
    t1 = nt;
  }
  g = a;
  s = s0;
  t = t0;
}

Ring::Ring(Value n) : n_(n) {
  if (n == 0) throw std::invalid_argument("zn::Ring: modulus must be positive");
  if (n <= 256) {
    mul_table_.resize(std::size_t(n) * n);
    for (Value a = 0; a < n; ++a)
      for (Value b = 0; b < n; ++b) mul_table_[std::size_t(a) * n + b] = Value(std::uint64_t(a) * b % n);
  }
}

Value Ring::stabilizing_unit(Value a) const {
  // u with u*a == gcd(a,n): invert a/g modulo n/g, then shift by multiples
  // of n/g until coprime to n.
  Value g = Value(gcd_u64(a, n_));
  if (g == 0) return 1; // a == 0 only when n == 1 or a itself is 0; unit irrelevant
  Value ap = a / g, ng = n_ / g;
  if (ng == 1) return 1;
  std::int64_t G, s, t;
  xgcd_i64(std::int64_t(ap % ng), std::int64_t(ng), G, s, t);
  Value u = Value(((s % std::int64_t(ng)) + ng) % ng);
  if (u == 0) u = ng; // gcd(0, n) trap; ap invertible mod ng so s != 0 mod ng unless ng == 1
  while (gcd_u64(u, n_) != 1) u += ng;
  return u % n_ == 0 ? 1 : u % n_;
}

void Ring::axpy_sub(Vec& row, Value q, const Vec& piv, std::size_t from) const {
  if (q == 0) return;
  std::size_t len = row.size();
  if (!mul_table_.empty()) {
    const Value* tab = &mul_table_[std::size_t(q) * n_];
    for (std::size_t k = from; k < len; ++k) {
      Value p = piv[k];
      if (!p) continue;
      Value t = tab[p];
      Value a = row[k];
      row[k] = a >= t ? a - t : a + n_ - t;
    }
  } else {
    for (std::size_t k = from; k < len; ++k) {
      Value p = piv[k];
      if (!p) continue;
      Value t = Value(std::uint64_t(q) * p % n_);
      Value a = row[k];
      row[k] = a >= t ? a - t : a + n_ - t;
    }
  }
}

RowSpan::RowSpan(Ring ring, std::size_t cols) : ring_(std::move(ring)), cols_(cols) {}

namespace {

void scale_from(const Ring& ring, Vec& row, Value u, std::size_t from) {
  if (u == 1) return;
  for (std::size_t k = from; k < row.size(); ++k)
    if (row[k]) row[k] = ring.mul(row[k], u);
}

bool all_zero(const Vec& v, std::size_t from = 0) {
  for (std::size_t k = from; k < v.size(); ++k)
    if (v[k]) return false;
  return true;
}

} // namespace

void RowSpan::insert(Vec row0) {
  Value n = ring_.modulus();
  if (n == 1) return;
  std::vector<Vec> work;
  work.push_back(std::move(row0));
  while (!work.empty()) {
    Vec row = std::move(work.back());
    work.pop_back();
    std::size_t j = 0;
    while (j < cols_) {
      if (row[j] == 0) {
        ++j;
        continue;
      }
      auto it = rows_.find(j);
      if (it == rows_.end()) {
        Value a = row[j];
        Value g = Value(gcd_u64(a, n));
        if (a != g) scale_from(ring_, row, ring_.stabilizing_unit(a), j);
        assert(row[j] == g);
        if (g > 1) { // zero-divisor pivot: record its annihilator multiple
          Value cof = n / g;
          Vec ann(cols_, 0);
          for (std::size_t k = j + 1; k < cols_; ++k)
            if (row[k]) ann[k] = ring_.mul(row[k], cof);
          if (!all_zero(ann, j + 1)) work.push_back(std::move(ann));
        }
        rows_.emplace(j, std::move(row));
        break;
      }
      Vec& piv = it->second;
      Value g = piv[j], a = row[j];
      if (a % g == 0) {
        ring_.axpy_sub(row, a / g, piv, j);
        ++j;
        continue;
      }
      std::int64_t G64, s, t;
      xgcd_i64(std::int64_t(g), std::int64_t(a), G64, s, t);
      Value G = Value(G64);
      Value su = ring_.reduce(s), tu = ring_.reduce(t);
      Vec newpiv(cols_, 0);
      for (std::size_t k = j; k < cols_; ++k) {
        Value x = ring_.mul(su, piv[k]);
        Value y = ring_.mul(tu, row[k]);
        newpiv[k] = ring_.add(x, y);
      }
      assert(newpiv[j] == G);
      Vec oldp = std::move(it->second);
      ring_.axpy_sub(oldp, g / G, newpiv, j);
      it->second = std::move(newpiv);
      const Vec& stored = it->second;
      if (G > 1) {
        Value cof = n / G;
        Vec ann(cols_, 0);
        for (std::size_t k = j + 1; k < cols_; ++k)
          if (stored[k]) ann[k] = ring_.mul(stored[k], cof);
        if (!all_zero(ann, j + 1)) work.push_back(std::move(ann));
      }
      if (!all_zero(oldp, j)) work.push_back(std::move(oldp));
      ring_.axpy_sub(row, a / G, stored, j);
      ++j;
    }
  }
}

Vec RowSpan::reduce(Vec v) const {
  for (auto& [j, piv] : rows_) {
    if (v[j] == 0) continue;
    Value q = v[j] / piv[j];
    if (q) ring_.axpy_sub(v, q, piv, j);
  }
  return v;
}

bool RowSpan::contains(const Vec& v) const { return all_zero(reduce(v)); }

std::vector<Vec> RowSpan::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  std::vector<std::size_t> pivots;
  for (auto& [j, r] : rows_) {
    out.push_back(r);
    pivots.push_back(j);
  }
  // reduce entries above every pivot modulo that pivot
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = i + 1; k < out.size(); ++k) {
      std::size_t jk = pivots[k];
      Value e = out[i][jk];
      if (!e) continue;
      Value q = e / out[k][jk];
      if (q) ring_.axpy_sub(out[i], q, out[k], jk);
    }
  return out;
}

Mat annihilator(const Ring& ring, std::size_t cols, const std::vector<Vec>& span_rows) {
  RowSpan span(ring, cols);
  for (const Vec& r : span_rows) span.insert(r);
  return annihilator(span);
}

Mat annihilator(const RowSpan& span) {
  const Ring& ring = span.ring();
  std::size_t cols = span.cols();
  std::vector<Vec> h = span.basis();
  std::size_t r = h.size();
  Mat out;
  out.cols = cols;
  if (ring.modulus() == 1) return out;
  if (r == 0) {
    out.rows.reserve(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      Vec e(cols, 0);
      e[i] = 1;
      out.rows.push_back(std::move(e));
    }
    return out;
  }
  RowSpan aug(ring, r + cols);
  for (std::size_t i = 0; i < cols; ++i) {
    Vec row(r + cols, 0);
    for (std::size_t k = 0; k < r; ++k) row[k] = h[k][i];
    row[r + i] = 1;
    aug.insert(std::move(row));
  }
  for (const Vec& row : aug.basis()) {
    bool head_zero = true;
    for (std::size_t k = 0; k < r && head_zero; ++k) head_zero = row[k] == 0;
    if (head_zero && !all_zero(row, r)) out.rows.emplace_back(row.begin() + r, row.end());
  }
  return out;
}

std::optional<Vec> solve_combination(const Ring& ring, std::size_t cols,
                                     const std::vector<Vec>& gens, const Vec& target) {
  std::size_t k = gens.size();
  if (ring.modulus() == 1) return Vec(k, 0);
  RowSpan aug(ring, cols + k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec row(cols + k, 0);
    std::copy(gens[i].begin(), gens[i].end(), row.begin());
    row[cols + i] = 1;
    aug.insert(std::move(row));
  }
  Vec t(cols + k, 0);
  std::copy(target.begin(), target.end(), t.begin());
  Vec red = aug.reduce(std::move(t));
  for (std::size_t i = 0; i < cols; ++i)
    if (red[i]) return std::nullopt;
  Vec x(k, 0);
  for (std::size_t i = 0; i < k; ++i) x[i] = ring.neg(red[cols + i]);
  return x;
}

std::uint64_t Quotient::order() const {
  std::uint64_t o = 1;
  for (Value d : invariant_factors) o *= d;
  return o;
}

namespace {

struct LocalFactor {
  Value order; // p^v > 1
  Vec coord;   // length r, entries mod p^a
};

// Smith elimination over the local ring Z/p^a.  Returns cyclic factor
// orders of (Z/q)^r / rowspan(relations) with coordinate vectors.
std::vector<LocalFactor> smith_local(Value p, Value q, std::vector<Vec> a, std::size_t r) {
  Ring R(q);
  std::vector<Vec> vinv(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) vinv[i][i] = 1;

  auto valuation = [&](Value x) {
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };

  std::size_t rows = a.size();
  std::size_t t = 0;
  std::vector<Value> diag;
  while (t < r && t < rows) {
    // pivot = entry of minimal p-valuation in the remaining corner
    int best_v = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < r; ++j) {
        Value x = a[i][j];
        if (!x) continue;
        int v = valuation(x);
        if (best_v < 0 || v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
        }
      }
    if (best_v < 0) break;
    std::swap(a[bi], a[t]);
    if (bj != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][bj], a[i][t]);
      std::swap(vinv[bj], vinv[t]);
    }
    Value pv = 1;
    for (int i = 0; i < best_v; ++i) pv *= p;
    Value u = a[t][t] / pv; // unit mod q
    if (u != 1) {
      std::int64_t G, s, ti;
      xgcd_i64(std::int64_t(u % q), std::int64_t(q), G, s, ti);
      Value uinv = Value(((s % std::int64_t(q)) + q) % q);
      for (std::size_t i = 0; i < rows; ++i) a[i][t] = R.mul(a[i][t], uinv);
      for (std::size_t k = 0; k < r; ++k) vinv[t][k] = R.mul(vinv[t][k], u);
    }
    assert(a[t][t] == pv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == t || a[i][t] == 0) continue;
      Value f = a[i][t] / pv;
      for (std::size_t k = t; k < r; ++k) a[i][k] = R.sub(a[i][k], R.mul(f, a[t][k]));
    }
    for (std::size_t j = t + 1; j < r; ++j) {
      Value c = a[t][j];
      if (!c) continue;
      Value f = c / pv;
      a[t][j] = 0;
      for (std::size_t k = 0; k < r; ++k) vinv[t][k] = R.add(vinv[t][k], R.mul(f, vinv[j][k]));
    }
    diag.push_back(pv);
    ++t;
  }

  std::vector<LocalFactor> out;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] > 1) out.push_back({diag[i], vinv[i]});
  for (std::size_t i = diag.size(); i < r; ++i) out.push_back({q, vinv[i]});
  return out;
}

} // namespace

Quotient quotient(const Ring& ring, const Mat& big, const Mat& sub) {
  Quotient out;
  Value n = ring.modulus();
  std::size_t r = big.rows.size(), w = sub.rows.size();
  if (n == 1 || r == 0) return out;

  // relation coordinates: x with x . big in span(sub)
  std::vector<Vec> constraints;
  constraints.reserve(big.cols);
  for (std::size_t c = 0; c < big.cols; ++c) {
    Vec row(r + w, 0);
    bool nz = false;
    for (std::size_t i = 0; i < r; ++i) {
      row[i] = big.rows[i][c];
      nz = nz || row[i];
    }
    for (std::size_t j = 0; j < w; ++j) {
      row[r + j] = ring.neg(sub.rows[j][c]);
      nz = nz || row[r + j];
    }
    if (nz) constraints.push_back(std::move(row));
  }
  Mat ker = annihilator(ring, r + w, constraints);
  RowSpan rel(ring, r);
  for (const Vec& k : ker.rows) rel.insert(Vec(k.begin(), k.begin() + r));
  std::vector<Vec> relations = rel.basis();

  // CRT-local Smith forms, one prime power of n at a time
  struct PrimePart {
    Value p, q;
    std::vector<LocalFactor> factors;
  };
  std::vector<PrimePart> parts;
  Value rest = n;
  for (Value p = 2; std::uint64_t(p) * p <= rest; ++p) {
    if (rest % p) continue;
    Value q = 1;
    while (rest % p == 0) {
      q *= p;
      rest /= p;
    }
    parts.push_back({p, q, {}});
  }
  if (rest > 1) parts.push_back({rest, rest, {}});

  for (auto& part : parts) {
    std::vector<Vec> local(relations.size(), Vec(r, 0));
    for (std::size_t i = 0; i < relations.size(); ++i)
      for (std::size_t k = 0; k < r; ++k) local[i][k] = relations[i][k] % part.q;
    part.factors = smith_local(part.p, part.q, std::move(local), r);
    std::sort(part.factors.begin(), part.factors.end(),
              [](const LocalFactor& a, const LocalFactor& b) { return a.order > b.order; });
  }

  std::size_t depth = 0;
  for (auto& part : parts) depth = std::max(depth, part.factors.size());

  for (std::size_t k = 0; k < depth; ++k) {
    std::uint64_t d = 1;
    Vec gen(r, 0);
    for (auto& part : parts) {
      if (k >= part.factors.size()) continue;
      d *= part.factors[k].order;
      // CRT idempotent for this prime power
      Value other = n / part.q;
      std::int64_t G, s, t;
      xgcd_i64(std::int64_t(part.q), std::int64_t(other), G, s, t);
      // eps = other * t == 1 (mod q), 0 (mod other)
      Value eps = ring.reduce(std::int64_t(other) * t);
      for (std::size_t c = 0; c < r; ++c)
        gen[c] = ring.add(gen[c], ring.mul(eps, part.factors[k].coord[c] % n));
    }
    out.invariant_factors.push_back(Value(d));
    out.generator_coords.push_back(std::move(gen));
  }
  // descending so far; report ascending divisibility chain
  std::reverse(out.invariant_factors.begin(), out.invariant_factors.end());
  std::reverse(out.generator_coords.begin(), out.generator_coords.end());
  return out;
}

Value PrimeField::pow(Value a, std::uint64_t e) const {
  Value r = 1 % p_;
  Value b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Value PrimeField::inv(Value a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField::inv of zero");
  return pow(a, p_ - 2);
}

std::size_t PrimeField::rref(std::vector<Vec>& m, std::size_t cols) const {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Value f = inv(m[rank][col]);
    for (std::size_t k = col; k < cols; ++k) m[rank][k] = mul(m[rank][k], f);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Value c = m[i][col];
      for (std::size_t k = col; k < cols; ++k) m[i][k] = sub(m[i][k], mul(c, m[rank][k]));
    }
    ++rank;
  }
  m.resize(rank, Vec(cols, 0));
  return rank;
}

std::vector<Vec> PrimeField::kernel(const std::vector<Vec>& m0, std::size_t cols) const {
  std::vector<Vec> m = m0;
  std::size_t rank = rref(m, cols);
  std::vector<std::size_t> pivot_col(rank);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (m[i][j] == 0) ++j;
    pivot_col[i] = j;
    is_pivot[j] = true;
  }
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = sub(0, m[i][f]);
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace cocycle::zn
