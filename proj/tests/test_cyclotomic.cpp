#include "doctest.h"

#include "cocycle/cyclotomic.hpp"

using namespace cocycle;

namespace {

std::uint64_t rng_state = 777;
std::uint32_t rnd(std::uint32_t bound) {
  rng_state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = rng_state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return std::uint32_t((z ^ (z >> 31)) % bound);
}

Cyclotomic random_value(std::uint32_t m) {
  Cyclotomic v = Cyclotomic::zero(m);
  for (int t = 0; t < 3; ++t) {
    mpq_class q(int(rnd(7)) - 3, int(rnd(3)) + 1);
    q.canonicalize();
    v = v + Cyclotomic::root_power(m, rnd(m)).scaled(q);
  }
  return v;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
  using P = std::vector<mpz_class>;
  CHECK(Cyclotomic::cyclotomic_polynomial(1) == P{-1, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(2) == P{1, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(4) == P{1, 0, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(3) == P{1, 1, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(6) == P{1, -1, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(12) == P{1, 0, -1, 0, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(8) == P{1, 0, 0, 0, 1});
}

TEST_CASE("root of unity relations") {
  for (std::uint32_t m : {2u, 3u, 4u, 6u, 8u, 12u, 16u}) {
    Cyclotomic z = Cyclotomic::root_power(m, 1);
    Cyclotomic p = Cyclotomic::one(m);
    for (std::uint32_t k = 0; k < m; ++k) p = p * z;
    CHECK(p == Cyclotomic::one(m)); // z^m = 1
    // sum over all m-th roots vanishes for m > 1
    Cyclotomic s = Cyclotomic::zero(m);
    for (std::uint32_t k = 0; k < m; ++k) s = s + Cyclotomic::root_power(m, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("field axioms on random values") {
  for (std::uint32_t m : {4u, 6u, 8u, 12u}) {
    for (int trial = 0; trial < 12; ++trial) {
      Cyclotomic a = random_value(m), b = random_value(m), c = random_value(m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::one(m));
    }
  }
}

TEST_CASE("conjugation inverts roots of unity") {
  for (std::uint32_t m : {3u, 4u, 8u, 12u}) {
    for (std::uint32_t k = 0; k < m; ++k) {
      CHECK(Cyclotomic::root_power(m, k).conj() == Cyclotomic::root_power(m, (m - k) % m));
      // |z^k|^2 = 1
      CHECK(Cyclotomic::root_power(m, k) * Cyclotomic::root_power(m, k).conj() ==
            Cyclotomic::one(m));
    }
  }
}

TEST_CASE("promotion between conductors") {
  Cyclotomic i4 = Cyclotomic::root_power(4, 1);
  Cyclotomic i12 = i4.promoted(12);
  CHECK(i12 == Cyclotomic::root_power(12, 3));
  Cyclotomic r = random_value(6);
  CHECK(r.promoted(12).promoted(12) == r.promoted(12));
  CHECK((r + r).promoted(12) == r.promoted(12) + r.promoted(12));
}

TEST_CASE("rank over the cyclotomic field") {
  std::uint32_t m = 4;
  auto one = Cyclotomic::one(m);
  auto z = Cyclotomic::root_power(m, 1);
  auto zero = Cyclotomic::zero(m);
  // rows (1, i) and (i, -1) are dependent: (i)(1, i) = (i, -1)
  std::vector<std::vector<Cyclotomic>> rows = {{one, z}, {z, zero - one}};
  CHECK(cyclotomic_rank(rows) == 1);
  rows.push_back({zero, one});
  CHECK(cyclotomic_rank(rows) == 2);
}
