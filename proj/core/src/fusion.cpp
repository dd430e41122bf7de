#include "cocycle/fusion.hpp"

#include "cocycle/zn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cocycle {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t dixon_prime(int order, int exponent) {
  double bound = 2.0 * std::sqrt(double(order));
  for (std::uint32_t p = std::uint32_t(exponent) + 1;; p += std::uint32_t(exponent)) {
    if (double(p) > bound && is_prime(p)) return p;
    if (p > 1u << 20)
      throw std::domain_error("character_table: no Dixon prime below 2^20 for exponent " +
                              std::to_string(exponent));
  }
}

std::uint32_t primitive_root(const zn::PrimeField& f) {
  std::uint32_t p = f.p();
  std::vector<std::uint32_t> prime_factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t q : prime_factors)
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

} // namespace

CharacterTable character_table(GroupPtr g) {
  const FiniteGroup& G = *g;
  int n = G.order();
  if (n > 128) throw std::domain_error("character_table: group order exceeds 128");

  CharacterTable out;
  out.group = g;
  out.classes = conjugacy_classes(G);
  int k = int(out.classes.size());
  out.class_of.assign(n, -1);
  for (int c = 0; c < k; ++c)
    for (int x : out.classes[c]) out.class_of[x] = c;

  int e = G.exponent();
  zn::PrimeField f(dixon_prime(n, e));
  std::uint32_t p = f.p();

  // class algebra: a[i][l][j] = #{(x,y) in C_i x C_l : x y = rep_j}
  std::vector<int> reps(k);
  for (int c = 0; c < k; ++c) reps[c] = out.classes[c][0];
  std::vector<std::vector<std::vector<std::uint32_t>>> a(
      k, std::vector<std::vector<std::uint32_t>>(k, std::vector<std::uint32_t>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int x : out.classes[i])
      for (int j = 0; j < k; ++j) {
        int y = G.mul(G.inv(x), reps[j]);
        a[i][out.class_of[y]][j] += 1;
      }

  // split F_p^k into common eigenvectors of the class matrices
  using Vec = zn::Vec;
  std::vector<std::vector<Vec>> subspaces; // each a list of basis column vectors
  {
    std::vector<Vec> full;
    for (int i = 0; i < k; ++i) {
      Vec v(k, 0);
      v[i] = 1;
      full.push_back(v);
    }
    subspaces.push_back(std::move(full));
  }
  for (int i = 0; i < k && int(subspaces.size()) < k; ++i) {
    // matrix M_i with (M_i)_{l j} = a[i][l][j], acting on column vectors
    std::vector<std::vector<Vec>> next;
    for (auto& basis : subspaces) {
      std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // restriction R: M_i b_j = sum_t R[t][j] b_t, solved from rref([B | M_i B])
      std::vector<Vec> aug(k, Vec(2 * d, 0));
      for (std::size_t col = 0; col < d; ++col)
        for (int row = 0; row < k; ++row) aug[row][col] = basis[col][row];
      for (std::size_t col = 0; col < d; ++col)
        for (int row = 0; row < k; ++row) {
          std::uint64_t acc = 0;
          for (int j = 0; j < k; ++j)
            acc = (acc + std::uint64_t(a[i][row][j]) * basis[col][j]) % p;
          aug[row][d + col] = zn::Value(acc);
        }
      f.rref(aug, 2 * d);
      std::vector<Vec> r(d, Vec(d, 0)); // R[t][j]
      for (std::size_t row = 0; row < aug.size() && row < d; ++row) {
        std::size_t piv = 0;
        while (piv < 2 * d && aug[row][piv] == 0) ++piv;
        if (piv >= d) throw std::logic_error("character_table: subspace not invariant");
        for (std::size_t col = 0; col < d; ++col) r[piv][col] = aug[row][d + col];
      }
      // eigenvalues by determinant scan over F_p
      std::vector<zn::Value> eigs;
      for (zn::Value lam = 0; lam < p; ++lam) {
        std::vector<Vec> m = r;
        for (std::size_t t = 0; t < d; ++t) m[t][t] = f.sub(m[t][t], lam);
        if (f.rref(m, d) < d) eigs.push_back(lam);
      }
      for (zn::Value lam : eigs) {
        std::vector<Vec> m = r;
        for (std::size_t t = 0; t < d; ++t) m[t][t] = f.sub(m[t][t], lam);
        std::vector<Vec> ker = f.kernel(m, d);
        std::vector<Vec> sub;
        for (const Vec& x : ker) {
          Vec v(k, 0);
          for (std::size_t t = 0; t < d; ++t) {
            if (!x[t]) continue;
            for (int row = 0; row < k; ++row)
              v[row] = f.add(v[row], f.mul(x[t], basis[t][row]));
          }
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    subspaces = std::move(next);
  }
  if (int(subspaces.size()) != k)
    throw std::logic_error("character_table: class matrices failed to split completely");

  // each line carries omega_l = |C_l| chi(g_l)/chi(1); normalize at the identity
  int e_class = out.class_of[0];
  std::vector<Vec> omegas;
  for (auto& basis : subspaces) {
    Vec v = basis[0];
    if (v[e_class] == 0) throw std::logic_error("character_table: eigenvector vanishes at e");
    zn::Value s = f.inv(v[e_class]);
    for (auto& x : v) x = f.mul(x, s);
    omegas.push_back(std::move(v));
  }

  // degrees: chi(1)^2 = |G| / sum_l omega_l omega_{l'} / |C_l|
  std::vector<int> inv_class(k);
  for (int c = 0; c < k; ++c) inv_class[c] = out.class_of[G.inv(reps[c])];
  double sqrt_n = std::sqrt(double(n));
  std::vector<std::vector<zn::Value>> chi_p(k, std::vector<zn::Value>(k, 0));
  for (int row = 0; row < k; ++row) {
    zn::Value s = 0;
    for (int l = 0; l < k; ++l)
      s = f.add(s, f.mul(f.mul(omegas[row][l], omegas[row][inv_class[l]]),
                         f.inv(zn::Value(out.classes[l].size() % p))));
    zn::Value d2 = f.mul(zn::Value(n % p), f.inv(s));
    int deg = -1;
    for (zn::Value r = 1; r < p; ++r)
      if (f.mul(r, r) == d2 && double(r) <= sqrt_n + 0.5) {
        deg = int(r);
        break;
      }
    if (deg < 0) throw std::logic_error("character_table: degree recovery failed");
    out.degrees.push_back(deg);
    for (int l = 0; l < k; ++l)
      chi_p[row][l] = f.mul(omegas[row][l],
                            f.mul(zn::Value(deg), f.inv(zn::Value(out.classes[l].size() % p))));
  }

  // lift to Q(zeta_e) through multiplicities of the theta-eigenvalues
  std::uint32_t theta = f.pow(primitive_root(f), (p - 1) / std::uint32_t(e));
  out.values.assign(k, std::vector<Cyclotomic>(k, Cyclotomic::zero(std::uint32_t(e))));
  for (int row = 0; row < k; ++row)
    for (int l = 0; l < k; ++l) {
      int rep = reps[l];
      int o = G.element_order(rep);
      zn::Value theta_o = f.pow(theta, std::uint32_t(e / o));
      Cyclotomic val = Cyclotomic::zero(std::uint32_t(e));
      zn::Value inv_o = f.inv(zn::Value(o % p));
      for (int t = 0; t < o; ++t) {
        // mu_t = (1/o) sum_s chi_p(rep^s) theta_o^{-st}
        zn::Value mu = 0;
        int gs = 0; // rep^s
        for (int s = 0; s < o; ++s) {
          zn::Value w = f.pow(theta_o, std::uint32_t(std::uint64_t(o - 1) * t % o * s % o));
          mu = f.add(mu, f.mul(chi_p[row][out.class_of[gs]], w));
          gs = G.mul(gs, rep);
        }
        mu = f.mul(mu, inv_o);
        if (int(mu) > out.degrees[row])
          throw std::logic_error("character_table: eigenvalue multiplicity out of range");
        if (mu)
          val = val + Cyclotomic::root_power(std::uint32_t(e), std::uint64_t(t) * (e / o))
                          .scaled(mpq_class(long(mu)));
      }
      out.values[row][l] = std::move(val);
    }

  // deterministic order: trivial first, then by degree and value columns
  auto is_trivial = [&](int row) {
    for (int l = 0; l < k; ++l)
      if (!(out.values[row][l] == Cyclotomic::one(std::uint32_t(e)))) return false;
    return true;
  };
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    if (out.degrees[x] != out.degrees[y]) return out.degrees[x] < out.degrees[y];
    for (int l = 0; l < k; ++l) {
      int c = Cyclotomic::compare(out.values[x][l], out.values[y][l]);
      if (c) return c < 0;
    }
    return false;
  });
  std::vector<int> new_degrees(k);
  std::vector<std::vector<Cyclotomic>> new_values(k);
  for (int i = 0; i < k; ++i) {
    new_degrees[i] = out.degrees[order[i]];
    new_values[i] = std::move(out.values[order[i]]);
  }
  out.degrees = std::move(new_degrees);
  out.values = std::move(new_values);

  // exact verification: degree squares, row orthogonality, trivial first
  long long degsum = 0;
  for (int d : out.degrees) degsum += (long long)d * d;
  if (degsum != n) throw std::logic_error("character_table: sum of squared degrees is wrong");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Cyclotomic s = Cyclotomic::zero(std::uint32_t(e));
      for (int l = 0; l < k; ++l)
        s = s + (out.values[i][l] * out.values[j][l].conj())
                    .scaled(mpq_class(long(out.classes[l].size())));
      Cyclotomic expect = i == j ? Cyclotomic::rational(std::uint32_t(e), n)
                                 : Cyclotomic::zero(std::uint32_t(e));
      if (!(s == expect)) throw std::logic_error("character_table: orthogonality fails");
    }
  if (!is_trivial(0)) throw std::logic_error("character_table: trivial character not first");
  return out;
}

FusionRing FusionRing::finite(std::vector<std::uint32_t> mult, std::size_t size,
                              std::vector<std::size_t> bar) {
  FusionRing r;
  r.kind_ = Kind::finite;
  r.size_ = size;
  r.mult_ = std::move(mult);
  r.bar_ = std::move(bar);
  if (r.mult_.size() != size * size * size || r.bar_.size() != size)
    fail("fusion ring table sizes are inconsistent");
  return r;
}

FusionRing FusionRing::su2(std::size_t bound) {
  FusionRing r;
  r.kind_ = Kind::su2_truncated;
  r.size_ = bound + 1;
  return r;
}

std::uint32_t FusionRing::m(std::size_t i, std::size_t j, std::size_t k) const {
  if (kind_ == Kind::finite) return mult_[(i * size_ + j) * size_ + k];
  if (i >= size_ || j >= size_ || k >= size_) return 0;
  // Clebsch-Gordan on doubled spins: |i-j| <= k <= i+j with k = i+j mod 2
  if (k > i + j || k + std::min(i, j) < std::max(i, j)) return 0;
  return (i + j - k) % 2 == 0 ? 1 : 0;
}

std::size_t FusionRing::bar(std::size_t i) const {
  return kind_ == Kind::finite ? bar_[i] : i; // SU(2) objects are self-dual
}

bool FusionRing::product_within_bounds(std::size_t i, std::size_t j) const {
  if (kind_ == Kind::finite) return true;
  return i + j < size_; // i + j <= bound
}

Measure Measure::delta(std::size_t i) {
  Measure m;
  m.w[i] = 1;
  return m;
}

Measure Measure::make(std::map<std::size_t, mpq_class> w) {
  Measure m;
  mpq_class total = 0;
  for (auto& [i, q] : w) {
    if (q < 0) fail("measure weights must be nonnegative");
    if (q > 0) {
      m.w[i] = q;
      total += q;
    }
  }
  if (total != 1) fail("measure must have total mass 1");
  return m;
}

Measure Measure::check(const FusionRing& ring) const {
  Measure m;
  for (auto& [i, q] : w) m.w[ring.bar(i)] += q;
  return m;
}

mpq_class Measure::at(std::size_t i) const {
  auto it = w.find(i);
  return it == w.end() ? mpq_class(0) : it->second;
}

bool Measure::is_symmetric(const FusionRing& ring) const { return check(ring).w == w; }

std::pair<FusionRing, DimensionFunction> fusion_ring_of_group(const CharacterTable& table) {
  int k = int(table.degrees.size());
  int n = table.group->order();
  std::uint32_t e = std::uint32_t(table.group->exponent());
  std::vector<std::uint32_t> mult(std::size_t(k) * k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        Cyclotomic s = Cyclotomic::zero(e);
        for (int c = 0; c < k; ++c)
          s = s + (table.values[i][c] * table.values[j][c] * table.values[l][c].conj())
                      .scaled(mpq_class(long(table.classes[c].size())));
        s = s.scaled(mpq_class(1, n));
        if (!s.is_rational()) throw std::logic_error("fusion constant is irrational");
        mpq_class q = s.rational_part();
        if (q < 0 || q.get_den() != 1)
          throw std::logic_error("fusion constant is not a nonnegative integer");
        mult[(std::size_t(i) * k + j) * k + l] = std::uint32_t(q.get_num().get_ui());
      }
  std::vector<std::size_t> bar(k);
  for (int i = 0; i < k; ++i) {
    int found = -1;
    for (int j = 0; j < k && found < 0; ++j) {
      bool equal = true;
      for (int c = 0; c < k && equal; ++c) equal = table.values[j][c] == table.values[i][c].conj();
      if (equal) found = j;
    }
    if (found < 0) throw std::logic_error("conjugate character missing from the table");
    bar[i] = std::size_t(found);
  }
  DimensionFunction d;
  for (int i = 0; i < k; ++i) d.d.push_back(mpq_class(long(table.degrees[i])));
  return {FusionRing::finite(std::move(mult), std::size_t(k), std::move(bar)), std::move(d)};
}

std::pair<FusionRing, DimensionFunction> su2_ring(std::size_t truncation) {
  FusionRing r = FusionRing::su2(truncation);
  DimensionFunction d;
  for (std::size_t j = 0; j <= truncation; ++j) d.d.push_back(mpq_class(long(j + 1)));
  return {std::move(r), std::move(d)};
}

bool frobenius_reciprocity_holds(const FusionRing& ring) {
  std::size_t s = ring.size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (!ring.product_within_bounds(j, i) || !ring.product_within_bounds(ring.bar(j), i))
        continue;
      for (std::size_t k = 0; k < s; ++k)
        if (ring.m(j, i, k) != ring.m(ring.bar(j), k, i)) return false;
    }
  return true;
}

bool dimension_identity_holds(const FusionRing& ring, const DimensionFunction& d) {
  std::size_t s = ring.size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (!ring.product_within_bounds(i, j)) continue;
      mpq_class sum = 0;
      for (std::size_t k = 0; k < s; ++k) sum += mpq_class(long(ring.m(i, j, k))) * d.d[k];
      if (sum != d.d[i] * d.d[j]) return false;
    }
  return true;
}

std::optional<std::vector<std::size_t>> fusion_ring_isomorphism(const FusionRing& f1,
                                                                const DimensionFunction& d1,
                                                                const FusionRing& f2,
                                                                const DimensionFunction& d2) {
  std::size_t s = f1.size();
  if (f2.size() != s) return std::nullopt;
  std::vector<std::size_t> map(s, SIZE_MAX);
  std::vector<bool> used(s, false);
  map[0] = 0;
  used[0] = true;

  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i) {
      if (map[i] == SIZE_MAX) continue;
      if (f1.bar(i) <= upto && map[f1.bar(i)] != SIZE_MAX && map[f1.bar(i)] != f2.bar(map[i]))
        return false;
      for (std::size_t j = 0; j <= upto; ++j) {
        if (map[j] == SIZE_MAX) continue;
        for (std::size_t k = 0; k <= upto; ++k) {
          if (map[k] == SIZE_MAX) continue;
          if (f1.m(i, j, k) != f2.m(map[i], map[j], map[k])) return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == s) return true;
    for (std::size_t cand = 0; cand < s; ++cand) {
      if (used[cand] || d1.d[i] != d2.d[cand]) continue;
      map[i] = cand;
      used[cand] = true;
      if (consistent(i) && extend(i + 1)) return true;
      used[cand] = false;
      map[i] = SIZE_MAX;
    }
    return false;
  };
  if (!extend(1)) return std::nullopt;
  for (std::size_t i = 0; i < s; ++i) {
    if (f2.bar(map[i]) != map[f1.bar(i)]) return std::nullopt;
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < s; ++k)
        if (f1.m(i, j, k) != f2.m(map[i], map[j], map[k])) return std::nullopt;
  }
  return map;
}

Measure convolve(const FusionRing& ring, const DimensionFunction& d, const Measure& mu,
                 const Measure& nu) {
  for (auto& [i, qi] : mu.w)
    for (auto& [j, qj] : nu.w)
      if (!ring.product_within_bounds(i, j))
        throw std::domain_error("convolve: support touches the truncation boundary at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
  Measure out;
  for (auto& [i, qi] : mu.w)
    for (auto& [j, qj] : nu.w)
      for (std::size_t k = 0; k < ring.size(); ++k) {
        std::uint32_t c = ring.m(i, j, k);
        if (!c) continue;
        out.w[k] += mpq_class(long(c)) * d.d[k] / (d.d[i] * d.d[j]) * qi * qj;
      }
  mpq_class total = 0;
  for (auto& [k, q] : out.w) total += q;
  if (total != 1) throw std::logic_error("convolve: output mass differs from 1");
  for (auto it = out.w.begin(); it != out.w.end();)
    it = it->second == 0 ? out.w.erase(it) : std::next(it);
  return out;
}

std::vector<std::vector<double>> lambda_matrix(const FusionRing& ring,
                                               const DimensionFunction& d, const Measure& mu,
                                               std::size_t n) {
  if (n == 0 || n > ring.size()) fail("lambda_matrix: size outside the ring truncation");
  for (auto& [j, q] : mu.w)
    if (ring.kind() == FusionRing::Kind::su2_truncated && j + (n - 1) >= ring.size())
      fail("lambda_matrix: support plus matrix size exceeds the ring truncation");
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (auto& [j, q] : mu.w) {
    mpq_class scale = q / d.d[j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint32_t c = ring.m(j, k, i);
        if (c) a[i][k] += scale.get_d() * c;
      }
  }
  return a;
}

namespace {

// cyclic Jacobi sweeps; deterministic order, tolerance far below 1e-10
double jacobi_spectral_radius(std::vector<std::vector<double>> a) {
  std::size_t n = a.size();
  if (n == 1) return std::abs(a[0][0]);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-15) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
  }
  double r = 0;
  for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(a[i][i]));
  return r;
}

} // namespace

double operator_norm(const std::vector<std::vector<double>>& matrix) {
  std::size_t n = matrix.size();
  bool symmetric = true;
  for (std::size_t i = 0; i < n && symmetric; ++i)
    for (std::size_t j = i + 1; j < n && symmetric; ++j)
      symmetric = matrix[i][j] == matrix[j][i];
  if (symmetric) return jacobi_spectral_radius(matrix);
  std::vector<std::vector<double>> ata(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < n; ++k) s += matrix[k][i] * matrix[k][j];
      ata[i][j] = s;
    }
  return std::sqrt(jacobi_spectral_radius(ata));
}

ReturnSequence return_sequence(const FusionRing& ring, const DimensionFunction& d,
                               const Measure& mu, int n_max) {
  ReturnSequence out;
  Measure sigma;
  try {
    sigma = convolve(ring, d, mu.check(ring), mu);
  } catch (const std::domain_error&) {
    out.truncated_at = 1;
    return out;
  }
  Measure cur = sigma;
  for (int n = 1; n <= n_max; ++n) {
    mpq_class value = cur.at(ring.unit());
    out.rows.push_back({n, value, std::pow(value.get_d(), 1.0 / n)});
    if (n == n_max) break;
    try {
      cur = convolve(ring, d, cur, sigma);
    } catch (const std::domain_error&) {
      out.truncated_at = n + 1;
      break;
    }
  }
  return out;
}

AmenabilityReport amenability_report(const FusionRing& ring, const DimensionFunction& d,
                                     const Measure& mu, const AmenabilityParams& params) {
  AmenabilityReport report;
  report.dimension_identity_ok = dimension_identity_holds(ring, d);

  std::vector<std::size_t> truncs = params.truncations;
  if (truncs.empty()) {
    if (ring.kind() == FusionRing::Kind::finite) {
      truncs = {ring.size()};
    } else {
      std::size_t miss = 0;
      for (auto& [j, q] : mu.w) miss = std::max(miss, j);
      for (std::size_t n = 4; n + miss < ring.size(); n *= 2) truncs.push_back(n);
      if (truncs.empty()) truncs.push_back(ring.size() - miss);
    }
  }
  for (std::size_t n : truncs) {
    double nrm = operator_norm(lambda_matrix(ring, d, mu, n));
    report.norms.push_back({n, nrm});
    if (nrm > 1.0 + 1e-9) report.contraction_ok = false;
  }
  if (!report.dimension_identity_ok || !report.contraction_ok) {
    // convolution is not mass-preserving on a corrupted ring; skip the walk
    report.verdict = AmenabilityVerdict::violates_contraction_bug;
    return report;
  }
  report.returns = return_sequence(ring, d, mu, params.n_max);
  double last = report.norms.empty() ? 0.0 : report.norms.back().norm;
  double first = report.norms.empty() ? 0.0 : report.norms.front().norm;
  bool nondecreasing = true;
  for (std::size_t i = 1; i < report.norms.size(); ++i)
    nondecreasing = nondecreasing && report.norms[i].norm >= report.norms[i - 1].norm - 1e-12;
  double gap_first = 1.0 - first, gap_last = 1.0 - last;
  if (gap_last <= 1e-9 || (nondecreasing && report.norms.size() > 1 && gap_last < 0.5 * gap_first))
    report.verdict = AmenabilityVerdict::consistent_with_amenable;
  else
    report.verdict = AmenabilityVerdict::inconclusive;
  return report;
}

const char* verdict_name(AmenabilityVerdict v) {
  switch (v) {
    case AmenabilityVerdict::consistent_with_amenable:
      return "consistent-with-amenable";
    case AmenabilityVerdict::inconclusive:
      return "inconclusive";
    case AmenabilityVerdict::violates_contraction_bug:
      return "violates-contraction(bug)";
  }
  return "?";
}

} // namespace cocycle
