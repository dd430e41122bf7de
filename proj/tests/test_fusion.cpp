#include "doctest.h"

#include "cocycle/catalog.hpp"
#include "cocycle/fusion.hpp"

#include <cmath>

using namespace cocycle;

namespace {

// the k-th Catalan number over 4^k, the closed-form return probability of
// the spin-1/2 walk (Dyck path count)
mpq_class dyck_oracle(int k) {
  mpz_class num = 1;
  for (int i = 0; i < 2 * k; ++i) num *= (i < k ? mpz_class(2 * k - i) : 1);
  // binomial(2k, k) = (2k)! / (k!)^2 computed simply
  mpz_class binom = 1;
  for (int i = 1; i <= k; ++i) {
    binom *= (k + i);
    binom /= i;
  }
  mpz_class four_k = 1;
  for (int i = 0; i < k; ++i) four_k *= 4;
  mpq_class out(binom, (k + 1) * four_k);
  out.canonicalize();
  return out;
}

} // namespace

TEST_CASE("character table of c2") {
  auto t = character_table(catalog_group("c2"));
  REQUIRE(t.degrees.size() == 2);
  CHECK(t.degrees == std::vector<int>{1, 1});
  Cyclotomic one = Cyclotomic::one(2), minus = -Cyclotomic::one(2);
  CHECK(t.values[0][0] == one);
  CHECK(t.values[0][1] == one);
  CHECK(t.values[1][0] == one);
  CHECK(t.values[1][1] == minus);
}

TEST_CASE("character degrees of s3, q8, d8, a4") {
  CHECK(character_table(catalog_group("s3")).degrees == std::vector<int>{1, 1, 2});
  CHECK(character_table(catalog_group("q8")).degrees == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(character_table(catalog_group("d8")).degrees == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(character_table(catalog_group("a4")).degrees == std::vector<int>{1, 1, 1, 3});
  CHECK(character_table(catalog_group("s4")).degrees == std::vector<int>{1, 1, 2, 3, 3});
}

TEST_CASE("fusion ring of groups") {
  auto [r2, d2] = fusion_ring_of_group(character_table(catalog_group("c2")));
  CHECK(r2.m(1, 1, 0) == 1);
  CHECK(r2.m(1, 1, 1) == 0);

  // S3: V (x) V = triv + sgn + V for the 2-dimensional V
  auto [r3, d3] = fusion_ring_of_group(character_table(catalog_group("s3")));
  CHECK(d3.d[2] == 2);
  CHECK(r3.m(2, 2, 0) == 1);
  CHECK(r3.m(2, 2, 1) == 1);
  CHECK(r3.m(2, 2, 2) == 1);

  // abelian groups: the ring is the group ring of the dual group
  for (const char* name : {"c2", "c3", "c4", "v4", "c6", "c8", "c2xc4", "c2xc2xc2"}) {
    auto [r, d] = fusion_ring_of_group(character_table(catalog_group(name)));
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(d.d[i] == 1);
      for (std::size_t j = 0; j < r.size(); ++j) {
        int ones = 0;
        for (std::size_t k = 0; k < r.size(); ++k) {
          CHECK(r.m(i, j, k) <= 1);
          ones += r.m(i, j, k);
        }
        CHECK(ones == 1); // basis is closed: a group
      }
    }
  }
}

TEST_CASE("frobenius reciprocity and dimension identity") {
  for (const char* name : {"s3", "d8", "q8", "a4", "s4"}) {
    auto [r, d] = fusion_ring_of_group(character_table(catalog_group(name)));
    CHECK(frobenius_reciprocity_holds(r));
    CHECK(dimension_identity_holds(r, d));
  }
  auto [su2, dsu2] = su2_ring(12);
  CHECK(frobenius_reciprocity_holds(su2));
  CHECK(dimension_identity_holds(su2, dsu2));
}

TEST_CASE("fusion ring isomorphism: d8 and q8 yes, c4 and v4 no") {
  auto [rd8, dd8] = fusion_ring_of_group(character_table(catalog_group("d8")));
  auto [rq8, dq8] = fusion_ring_of_group(character_table(catalog_group("q8")));
  auto witness = fusion_ring_isomorphism(rd8, dd8, rq8, dq8);
  CHECK(witness.has_value());

  auto [rc4, dc4] = fusion_ring_of_group(character_table(catalog_group("c4")));
  auto [rv4, dv4] = fusion_ring_of_group(character_table(catalog_group("v4")));
  CHECK(!fusion_ring_isomorphism(rc4, dc4, rv4, dv4).has_value());

  auto self = fusion_ring_isomorphism(rd8, dd8, rd8, dd8);
  REQUIRE(self.has_value());
}

TEST_CASE("su2 fusion rules") {
  auto [r, d] = su2_ring(8);
  CHECK(r.m(1, 1, 0) == 1);
  CHECK(r.m(1, 1, 2) == 1);
  CHECK(r.m(1, 1, 1) == 0);
  CHECK(d.d[1] * d.d[1] == d.d[0] + d.d[2]);
  for (std::size_t i = 0; i <= 8; ++i) CHECK(r.bar(i) == i);
  CHECK(r.product_within_bounds(4, 4));
  CHECK(!r.product_within_bounds(5, 4));
}

TEST_CASE("convolution") {
  auto [su2, d] = su2_ring(8);
  Measure d1 = Measure::delta(1);
  Measure de = Measure::delta(0);
  CHECK(convolve(su2, d, de, d1).w == d1.w);
  Measure sq = convolve(su2, d, d1, d1);
  CHECK(sq.at(0) == mpq_class(1, 4));
  CHECK(sq.at(2) == mpq_class(3, 4));

  auto [rc2, dc2] = fusion_ring_of_group(character_table(catalog_group("c2")));
  Measure g1 = Measure::delta(1);
  CHECK(convolve(rc2, dc2, g1, g1).w == Measure::delta(0).w);

  auto [small, dsmall] = su2_ring(3);
  CHECK_THROWS_AS(convolve(small, dsmall, Measure::delta(3), Measure::delta(3)),
                  std::domain_error);
}

TEST_CASE("lambda matrices and path-graph norms") {
  auto [su2, d] = su2_ring(200);
  for (std::size_t n : {3u, 10u, 100u}) {
    auto m = lambda_matrix(su2, d, Measure::delta(1), n);
    double lam_norm = 2.0 * operator_norm(m); // Lambda_1 = d(1) * lambda_{delta_1}
    CHECK(std::abs(lam_norm - 2.0 * std::cos(M_PI / double(n + 1))) < 1e-9);
  }
}

TEST_CASE("group ring lambda norms are exactly 1") {
  for (const char* name : {"s3", "d8", "a4"}) {
    auto [r, d] = fusion_ring_of_group(character_table(catalog_group(name)));
    Measure mu = Measure::make({{0, mpq_class(1, 4)}, {r.size() - 1, mpq_class(3, 4)}});
    double nrm = operator_norm(lambda_matrix(r, d, mu, r.size()));
    CHECK(std::abs(nrm - 1.0) < 1e-12);
  }
}

TEST_CASE("return sequence matches the Dyck oracle") {
  auto [su2, d] = su2_ring(60);
  ReturnSequence seq = return_sequence(su2, d, Measure::delta(1), 25);
  REQUIRE(seq.rows.size() == 25);
  CHECK(seq.rows[0].value == mpq_class(1, 4));
  CHECK(seq.rows[1].value == mpq_class(1, 8));
  for (const auto& row : seq.rows) CHECK(row.value == dyck_oracle(row.n));
}

TEST_CASE("return sequence reports the truncation limit") {
  auto [su2, d] = su2_ring(10);
  ReturnSequence seq = return_sequence(su2, d, Measure::delta(1), 50);
  REQUIRE(seq.truncated_at.has_value());
  CHECK(*seq.truncated_at > 1);
  CHECK(int(seq.rows.size()) == *seq.truncated_at - 1);
}

TEST_CASE("matrix powers and convolution agree on return values") {
  auto [su2, d] = su2_ring(40);
  int n_max = 10;
  ReturnSequence seq = return_sequence(su2, d, Measure::delta(1), n_max);
  auto lam = lambda_matrix(su2, d, Measure::delta(1), 2 * n_max + 2);
  std::size_t dim = lam.size();
  // iterate v <- (lam^T lam) v starting from delta_e; entry at e gives the values
  std::vector<double> v(dim, 0.0);
  v[0] = 1.0;
  for (const auto& row : seq.rows) {
    std::vector<double> w(dim, 0.0), u(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) w[i] += lam[i][j] * v[j];
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) u[i] += lam[j][i] * w[j];
    v = u;
    CHECK(std::abs(v[0] - row.value.get_d()) < 1e-12);
  }
}

TEST_CASE("amenability reports") {
  // finite group ring: exact norm 1, consistent with amenability
  auto [r, d] = fusion_ring_of_group(character_table(catalog_group("s3")));
  Measure mu = Measure::make({{1, mpq_class(1, 2)}, {2, mpq_class(1, 2)}});
  auto rep = amenability_report(r, d, mu);
  CHECK(rep.verdict == AmenabilityVerdict::consistent_with_amenable);
  CHECK(std::abs(rep.norms[0].norm - 1.0) < 1e-12);

  // su2 with growing truncations approaches norm 1 from below
  auto [su2, dsu2] = su2_ring(200);
  AmenabilityParams params;
  params.truncations = {4, 8, 16, 32, 64, 128};
  params.n_max = 12;
  auto rep2 = amenability_report(su2, dsu2, Measure::delta(1), params);
  CHECK(rep2.verdict == AmenabilityVerdict::consistent_with_amenable);
  for (std::size_t i = 1; i < rep2.norms.size(); ++i)
    CHECK(rep2.norms[i].norm >= rep2.norms[i - 1].norm);

  // corrupted constants break the dimension identity and the contraction
  auto [good, dgood] = su2_ring(2);
  std::vector<std::uint32_t> mult(27, 0);
  std::vector<std::size_t> bar = {0, 1, 2};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) mult[(i * 3 + j) * 3 + k] = good.m(i, j, k);
  mult[(1 * 3 + 1) * 3 + 0] = 2; // m(1,1,0) = 2 with d unchanged
  FusionRing bad = FusionRing::finite(std::move(mult), 3, std::move(bar));
  auto rep3 = amenability_report(bad, dgood, Measure::delta(1));
  CHECK(rep3.verdict == AmenabilityVerdict::violates_contraction_bug);
}
