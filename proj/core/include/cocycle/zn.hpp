#pragma once

// Linear algebra over the residue rings Z/n.  Gaussian elimination is not
// enough over a ring with zero divisors: the canonical echelon form here is
// the Howell form, which spans every vector of a submodule by forward
// reduction alone.  Kernels, solutions and quotients of finite Z/n-modules
// are all derived from it.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace cocycle::zn {

using Value = std::uint32_t;
using Vec = std::vector<Value>;

/// Arithmetic in Z/n.  For small n a multiplication table is precomputed,
/// which is what the inner reduction loops hit.
class Ring {
public:
  explicit Ring(Value n);

  Value modulus() const { return n_; }

  Value add(Value a, Value b) const {
    Value s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + n_ - b; }
  Value neg(Value a) const { return a == 0 ? 0 : n_ - a; }
  Value mul(Value a, Value b) const {
    if (!mul_table_.empty()) return mul_table_[a * n_ + b];
    return Value(std::uint64_t(a) * b % n_);
  }
  Value reduce(std::int64_t a) const {
    std::int64_t r = a % std::int64_t(n_);
    return Value(r < 0 ? r + n_ : r);
  }

  /// Unit u with u*a == gcd(a,n) mod n.  Pivot normalization.
  Value stabilizing_unit(Value a) const;

  void axpy_sub(Vec& row, Value q, const Vec& piv, std::size_t from) const;

private:
  Value n_;
  std::vector<Value> mul_table_; // only for n <= 256
};

/// Row span of vectors in (Z/n)^cols, kept in Howell echelon form.
/// Insertion order does not affect the final canonical basis.
class RowSpan {
public:
  RowSpan(Ring ring, std::size_t cols);

  void insert(Vec row);
  bool contains(const Vec& v) const;
  /// Canonical residue of v modulo the span (forward reduction).
  Vec reduce(Vec v) const;

  std::size_t pivot_count() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  /// Canonical Howell basis: rows sorted by pivot column, entries above
  /// every pivot reduced modulo that pivot.
  std::vector<Vec> basis() const;

private:
  Ring ring_;
  std::size_t cols_;
  std::map<std::size_t, Vec> rows_; // pivot column -> row
};

struct Mat {
  std::size_t cols = 0;
  std::vector<Vec> rows;
};

/// Generators of {x in (Z/n)^cols : r . x = 0 for every generator row r}.
Mat annihilator(const Ring& ring, std::size_t cols, const std::vector<Vec>& span_rows);
Mat annihilator(const RowSpan& span);

/// Coefficients x with sum_i x_i * gens[i] = target, if any.
std::optional<Vec> solve_combination(const Ring& ring, std::size_t cols,
                                     const std::vector<Vec>& gens, const Vec& target);

/// Structure of the finite abelian group  span(big) / span(sub)  (sub must be
/// contained in big).  Generators are coefficient vectors over the rows of
/// `big`; invariant factors are listed in divisibility order d1 | d2 | ...
struct Quotient {
  std::vector<Value> invariant_factors; // all > 1
  std::vector<Vec> generator_coords;    // one per invariant factor, length big.rows.size()
  std::uint64_t order() const;
};
Quotient quotient(const Ring& ring, const Mat& big, const Mat& sub);

/// Dense elimination over the prime field F_p (used by the character-table
/// code, where the modulus is a Dixon prime, never composite).
class PrimeField {
public:
  explicit PrimeField(Value p) : p_(p) {}
  Value p() const { return p_; }
  Value add(Value a, Value b) const { Value s = a + b; return s >= p_ ? s - p_ : s; }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + p_ - b; }
  Value mul(Value a, Value b) const { return Value(std::uint64_t(a) * b % p_); }
  Value pow(Value a, std::uint64_t e) const;
  Value inv(Value a) const;

  /// Reduced row echelon form in place; returns rank.
  std::size_t rref(std::vector<Vec>& m, std::size_t cols) const;
  /// Basis of {x : M x = 0} for the rows-by-cols matrix M.
  std::vector<Vec> kernel(const std::vector<Vec>& m, std::size_t cols) const;

private:
  Value p_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Extended gcd: g = gcd(a,b) with s*a + t*b = g.
void xgcd_i64(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t);

} // namespace cocycle::zn
