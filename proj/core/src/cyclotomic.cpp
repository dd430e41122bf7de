#include "cocycle/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cocycle {

namespace {

// polynomial helpers over Z (mpz), low degree first, normalized (no trailing zeros)
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of polynomials with integer quotient (used only where the
// division is known exact: x^n - 1 divided by products of cyclotomics)
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size() && !num.empty()) {
    mpz_class c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  if (!num.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

std::map<std::uint32_t, ZPoly> phi_cache;
std::mutex phi_mutex;

} // namespace

const std::vector<mpz_class>& Cyclotomic::cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("conductor must be positive");
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_cache.find(m);
  if (it != phi_cache.end()) return it->second;
  // fill divisors of m bottom-up; Phi_d = (x^d - 1) / prod_{d' | d, d' < d} Phi_d'
  for (std::uint32_t d = 1; d <= m; ++d) {
    if (m % d || phi_cache.count(d)) continue;
    ZPoly num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (std::uint32_t e = 1; e < d; ++e)
      if (d % e == 0) num = divide_exact(std::move(num), phi_cache.at(e));
    phi_cache.emplace(d, std::move(num));
  }
  return phi_cache.at(m);
}

Cyclotomic Cyclotomic::zero(std::uint32_t m) {
  std::size_t deg = cyclotomic_polynomial(m).size() - 1;
  return Cyclotomic(m, std::vector<mpq_class>(deg, 0));
}

Cyclotomic Cyclotomic::one(std::uint32_t m) {
  Cyclotomic c = zero(m);
  c.coeff_[0] = 1;
  return c;
}

Cyclotomic Cyclotomic::rational(std::uint32_t m, mpq_class v) {
  Cyclotomic c = zero(m);
  c.coeff_[0] = std::move(v);
  return c;
}

Cyclotomic Cyclotomic::root_power(std::uint32_t m, std::uint64_t k) {
  k %= m;
  std::vector<mpq_class> poly(k + 1, 0);
  poly[k] = 1;
  Cyclotomic c = zero(m);
  c.reduce(poly);
  poly.resize(c.coeff_.size(), 0);
  c.coeff_ = std::move(poly);
  return c;
}

void Cyclotomic::reduce(std::vector<mpq_class>& poly) const {
  const ZPoly& phi = cyclotomic_polynomial(conductor_);
  std::size_t deg = phi.size() - 1;
  while (poly.size() > deg) {
    mpq_class c = poly.back(); // phi is monic
    std::size_t shift = poly.size() - phi.size();
    for (std::size_t i = 0; i < phi.size(); ++i) poly[shift + i] -= c * mpq_class(phi[i]);
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
  }
  poly.resize(deg, 0);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_part() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return coeff_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) throw std::invalid_argument("conductor mismatch in +");
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) throw std::invalid_argument("conductor mismatch in -");
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] -= o.coeff_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) throw std::invalid_argument("conductor mismatch in *");
  std::vector<mpq_class> prod(coeff_.size() + o.coeff_.size() - 1, 0);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeff_.size(); ++j) {
      if (o.coeff_[j] == 0) continue;
      prod[i + j] += coeff_[i] * o.coeff_[j];
    }
  }
  reduce(prod);
  return Cyclotomic(conductor_, std::move(prod));
}

Cyclotomic Cyclotomic::scaled(const mpq_class& q) const {
  Cyclotomic r = *this;
  for (auto& c : r.coeff_) c *= q;
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  // zeta^k -> zeta^(m-k)
  Cyclotomic out = zero(conductor_);
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k] == 0) continue;
    Cyclotomic term = root_power(conductor_, (conductor_ - k % conductor_) % conductor_);
    out = out + term.scaled(coeff_[k]);
  }
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic");
  // extended euclid in Q[x] against Phi_m: a*this + b*Phi = 1
  const ZPoly& phi_z = cyclotomic_polynomial(conductor_);
  using QPoly = std::vector<mpq_class>;
  auto trimq = [](QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  QPoly r0(phi_z.size());
  for (std::size_t i = 0; i < phi_z.size(); ++i) r0[i] = mpq_class(phi_z[i]);
  QPoly r1 = coeff_;
  trimq(r1);
  QPoly s0 = {0}, s1 = {1}; // coefficients of `this` in the Bezout identity
  while (true) {
    // divide r0 by r1
    QPoly q;
    QPoly rem = r0;
    trimq(rem);
    if (rem.size() < r1.size()) q = {0};
    else {
      q.assign(rem.size() - r1.size() + 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        mpq_class c = rem.back() / r1.back();
        std::size_t shift = rem.size() - r1.size();
        q[shift] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
        trimq(rem);
      }
    }
    // s2 = s0 - q * s1
    QPoly s2 = s0;
    s2.resize(std::max(s0.size(), q.size() + s1.size()), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trimq(s2);
    if (rem.empty()) {
      // r1 is the gcd: a nonzero rational constant (this is invertible mod Phi)
      if (r1.size() != 1)
        throw std::logic_error("cyclotomic inverse: gcd with Phi_m not constant");
      QPoly inv = s1;
      for (auto& c : inv) c /= r1[0];
      Cyclotomic out = zero(conductor_);
      std::vector<mpq_class> poly = inv;
      out.reduce(poly);
      out.coeff_ = std::move(poly);
      return out;
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) return false;
  for (std::size_t i = 0; i < coeff_.size(); ++i)
    if (coeff_[i] != o.coeff_[i]) return false;
  return true;
}

Cyclotomic Cyclotomic::promoted(std::uint32_t m) const {
  if (m == conductor_) return *this;
  if (m % conductor_) throw std::invalid_argument("promotion requires divisible conductor");
  std::uint32_t step = m / conductor_;
  Cyclotomic out = zero(m);
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k] == 0) continue;
    out = out + root_power(m, std::uint64_t(k) * step).scaled(coeff_[k]);
  }
  return out;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
    int c = mpq_cmp(a.coeff_[i].get_mpq_t(), b.coeff_[i].get_mpq_t());
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeff_[k].get_str();
    if (k > 0) s += "*z^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::size_t cyclotomic_rank(std::vector<std::vector<Cyclotomic>> rows) {
  return cyclotomic_row_basis(std::move(rows)).size();
}

std::vector<std::vector<Cyclotomic>> cyclotomic_row_basis(
    std::vector<std::vector<Cyclotomic>> rows) {
  std::vector<std::vector<Cyclotomic>> basis; // echelon rows, pivot normalized to 1
  std::vector<std::size_t> pivots;
  for (auto& row : rows) {
    std::size_t cols = row.size();
    // eliminate against existing pivots
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Cyclotomic& lead = row[pivots[b]];
      if (lead.is_zero()) continue;
      Cyclotomic f = lead; // pivot is 1
      for (std::size_t c = pivots[b]; c < cols; ++c) row[c] = row[c] - f * basis[b][c];
    }
    std::size_t p = 0;
    while (p < cols && row[p].is_zero()) ++p;
    if (p == cols) continue;
    Cyclotomic inv = row[p].inverse();
    for (std::size_t c = p; c < cols; ++c) row[c] = row[c] * inv;
    // back-eliminate column p from the basis
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Cyclotomic& e = basis[b][p];
      if (e.is_zero()) continue;
      Cyclotomic f = e;
      for (std::size_t c = p; c < cols; ++c) basis[b][c] = basis[b][c] - f * row[c];
    }
    basis.push_back(std::move(row));
    pivots.push_back(p);
  }
  // sort by pivot column for a canonical presentation
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  std::vector<std::vector<Cyclotomic>> out;
  out.reserve(basis.size());
  for (std::size_t i : order) out.push_back(std::move(basis[i]));
  return out;
}

} // namespace cocycle
