#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m): rational-coefficient
// polynomials reduced modulo the m-th cyclotomic polynomial.  All rank and
// equality decisions downstream ride on this being exact.

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace cocycle {

class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeff_(1, 0) {} // zero in Q(zeta_1) = Q

  static Cyclotomic zero(std::uint32_t conductor);
  static Cyclotomic one(std::uint32_t conductor);
  static Cyclotomic rational(std::uint32_t conductor, mpq_class v);
  /// zeta_m^k
  static Cyclotomic root_power(std::uint32_t conductor, std::uint64_t k);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<mpq_class>& coefficients() const { return coeff_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_part() const; // requires is_rational()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic conj() const; // zeta -> zeta^-1
  Cyclotomic inverse() const;
  Cyclotomic scaled(const mpq_class& q) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Promote into Q(zeta_m') for conductor_ | m'.
  Cyclotomic promoted(std::uint32_t conductor) const;

  /// Total order on canonical coefficient vectors (for deterministic sorting).
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const; // "p/q*z^k + ..." exact rendering

  /// Integer-coefficient cyclotomic polynomial Phi_m, low degree first.
  static const std::vector<mpz_class>& cyclotomic_polynomial(std::uint32_t m);

private:
  Cyclotomic(std::uint32_t conductor, std::vector<mpq_class> coeff)
      : conductor_(conductor), coeff_(std::move(coeff)) {}
  void reduce(std::vector<mpq_class>& poly) const;

  std::uint32_t conductor_;
  std::vector<mpq_class> coeff_; // degree < deg Phi_m
};

/// Rank of a dense matrix over Q(zeta), exact Gaussian elimination with a
/// deterministic first-nonzero pivot rule.
std::size_t cyclotomic_rank(std::vector<std::vector<Cyclotomic>> rows);

/// Reduced row basis of the span of the given rows (echelon, leading entries
/// normalized to 1, deterministic).
std::vector<std::vector<Cyclotomic>> cyclotomic_row_basis(std::vector<std::vector<Cyclotomic>> rows);

} // namespace cocycle
