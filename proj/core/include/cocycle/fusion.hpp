#pragma once

// Character tables by Dixon's method (class matrices over F_p, lifted to
// cyclotomics through discrete logarithms of eigenvalues), representation
// fusion rings, the truncated SU(2) ring, and the random-walk amenability
// diagnostics: lambda operators, convolution powers, return sequences.

#include "cocycle/cyclotomic.hpp"
#include "cocycle/group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cocycle {

struct CharacterTable {
  GroupPtr group;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // element -> class index
  std::vector<int> degrees;   // chi(e) per row
  std::vector<std::vector<Cyclotomic>> values; // rows = irreducibles, cols = classes
};

/// Dixon's method; |G| <= 128.  Row order: trivial character first, then by
/// degree and lexicographic value comparison.  Exact orthogonality verified.
CharacterTable character_table(GroupPtr g);

class FusionRing {
public:
  enum class Kind { finite, su2_truncated };

  static FusionRing finite(std::vector<std::uint32_t> mult, std::size_t size,
                           std::vector<std::size_t> bar);
  /// Truncated fusion rules of SU(2): basis {0..bound}, constants touching
  /// i + j > bound are cut and flagged out of bounds.
  static FusionRing su2(std::size_t bound);

  Kind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  std::size_t unit() const { return 0; }
  std::uint32_t m(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t bar(std::size_t i) const;
  /// False when the truncation cuts constants of i (x) j.
  bool product_within_bounds(std::size_t i, std::size_t j) const;

private:
  Kind kind_ = Kind::finite;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> mult_; // dense i*size^2 + j*size + k for finite rings
  std::vector<std::size_t> bar_;
};

struct DimensionFunction {
  std::vector<mpq_class> d;
};

struct Measure {
  std::map<std::size_t, mpq_class> w; // finite support, nonnegative, mass 1

  static Measure delta(std::size_t i);
  static Measure make(std::map<std::size_t, mpq_class> w); // validates
  Measure check(const FusionRing& ring) const;             // mu-check: i -> bar(i)
  mpq_class at(std::size_t i) const;
  bool is_symmetric(const FusionRing& ring) const;
};

std::pair<FusionRing, DimensionFunction> fusion_ring_of_group(const CharacterTable& table);
std::pair<FusionRing, DimensionFunction> su2_ring(std::size_t truncation);

/// Structure constants of the Frobenius dual: m^i_{jk} = m^k_{bar j, i} holds
/// for based rings; kept as a checkable property, not assumed.
bool frobenius_reciprocity_holds(const FusionRing& ring);
bool dimension_identity_holds(const FusionRing& ring, const DimensionFunction& d);

/// Unit-, involution- and dimension-preserving bijection matching all
/// structure constants, if one exists.
std::optional<std::vector<std::size_t>> fusion_ring_isomorphism(const FusionRing& f1,
                                                                const DimensionFunction& d1,
                                                                const FusionRing& f2,
                                                                const DimensionFunction& d2);

/// (mu * nu)(k) = sum m_ij^k d(k)/(d(i)d(j)) mu(i) nu(j), exact; throws when
/// the support touches the truncation boundary.
Measure convolve(const FusionRing& ring, const DimensionFunction& d, const Measure& mu,
                 const Measure& nu);

/// N x N compression of lambda_mu = sum_j mu(j)/d(j) Lambda_j, with
/// (Lambda_j)_{ik} = m^i_{jk}.
std::vector<std::vector<double>> lambda_matrix(const FusionRing& ring,
                                               const DimensionFunction& d, const Measure& mu,
                                               std::size_t n);

/// Spectral norm: symmetric eigensolver when the matrix is symmetric, else
/// through the adjoint product.  Tolerance 1e-10.
double operator_norm(const std::vector<std::vector<double>>& matrix);

struct ReturnSequence {
  struct Row {
    int n;
    mpq_class value; // (mu-check * mu)^n (e)
    double root;     // value^(1/n)
  };
  std::vector<Row> rows;
  std::optional<int> truncated_at; // first n the truncation refused
};

ReturnSequence return_sequence(const FusionRing& ring, const DimensionFunction& d,
                               const Measure& mu, int n_max);

enum class AmenabilityVerdict { consistent_with_amenable, inconclusive, violates_contraction_bug };

struct AmenabilityReport {
  struct NormRow {
    std::size_t truncation;
    double norm;
  };
  std::vector<NormRow> norms;
  ReturnSequence returns;
  bool dimension_identity_ok = true;
  bool contraction_ok = true;
  AmenabilityVerdict verdict = AmenabilityVerdict::inconclusive;
};

struct AmenabilityParams {
  std::vector<std::size_t> truncations; // matrix sizes to sweep (defaulted if empty)
  int n_max = 24;
};

/// Monotone trends and bounds only; never claims the limit itself.
AmenabilityReport amenability_report(const FusionRing& ring, const DimensionFunction& d,
                                     const Measure& mu, const AmenabilityParams& params = {});

const char* verdict_name(AmenabilityVerdict v);

} // namespace cocycle
