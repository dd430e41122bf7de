#include "doctest.h"

#include "cocycle/catalog.hpp"
#include "cocycle/tensor.hpp"

#include <algorithm>

using namespace cocycle;

namespace {

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return Subgroup{g, all};
}

// the V4 inside D8: {e, r^2, s, r^2 s}
Subgroup v4_in_d8(GroupPtr d8) { return Subgroup{d8, {0, 2, 4, 6}}; }

AlternatingForm nondeg_form_v4(const AbelianGroup& a) {
  AlternatingForm f;
  f.group = a;
  f.b.assign(2, std::vector<int>(2, 0));
  f.b[0][1] = f.b[1][0] = 1;
  return f;
}

} // namespace

TEST_CASE("abelian structure decomposition") {
  auto d8 = catalog_group("d8");
  auto abs = abelian_structure(d8, v4_in_d8(d8));
  CHECK(abs.group.factors == std::vector<int>{2, 2});
  for (int t = 0; t < 4; ++t) CHECK(abs.from_parent[abs.to_parent[t]] == t);
  // the map is additive
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(abs.to_parent[abs.group.add(x, y)] ==
            d8->mul(abs.to_parent[x], abs.to_parent[y]));

  auto c12 = catalog_group("c12");
  auto whole = abelian_structure(c12, full_subgroup(c12));
  CHECK(whole.group.order() == 12);
  CHECK(whole.group.exponent() == 12);

  CHECK_THROWS(abelian_structure(d8, full_subgroup(d8))); // not abelian
}

TEST_CASE("trivial embedding is the unit tensor") {
  auto d8 = catalog_group("d8");
  Subgroup trivial{d8, {0}};
  auto abs = abelian_structure(d8, trivial);
  Cocycle c = Cocycle::zero(abs.group.as_group(), 1);
  GroupTensor f = embed_dual_cocycle(d8, abs, c);
  CHECK(f.is_identity());
}

TEST_CASE("nondegenerate v4 cocycle embeds to a unitary with full support") {
  auto v4 = catalog_group("v4");
  auto abs = abelian_structure(v4, full_subgroup(v4));
  Cocycle c = form_to_cocycle(nondeg_form_v4(abs.group));
  GroupTensor f = embed_dual_cocycle(v4, abs, c);
  // with the upper-triangular representative F itself has 4 nonzero
  // coefficients; its R-matrix carries the full 16-entry bicharacter
  CHECK(f.nonzero_count() == 4);
  CHECK(check_dual_cocycle(f));
  CHECK(r_matrix(f).nonzero_count() == 16);

  // same cocycle on the V4 subgroup of D8: supported inside V4 x V4
  auto d8 = catalog_group("d8");
  auto abs8 = abelian_structure(d8, v4_in_d8(d8));
  Cocycle c8 = form_to_cocycle(nondeg_form_v4(abs8.group));
  GroupTensor f8 = embed_dual_cocycle(d8, abs8, c8);
  CHECK(check_dual_cocycle(f8));
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h)
      if (!f8.at2(g, h).is_zero()) {
        CHECK(v4_in_d8(d8).contains(g));
        CHECK(v4_in_d8(d8).contains(h));
      }
}

TEST_CASE("cocycle identity detects corruption") {
  auto v4 = catalog_group("v4");
  CHECK(check_dual_cocycle(GroupTensor::identity(v4, 2, 4)));
  auto abs = abelian_structure(v4, full_subgroup(v4));
  Cocycle c = form_to_cocycle(nondeg_form_v4(abs.group));
  GroupTensor f = embed_dual_cocycle(v4, abs, c);
  GroupTensor bad = f;
  bad.set2(1, 2, bad.at2(1, 2) + Cyclotomic::one(bad.conductor()));
  CHECK(!check_dual_cocycle(bad));
}

TEST_CASE("r-matrix of trivial and symmetric cocycles is the unit") {
  auto v4 = catalog_group("v4");
  GroupTensor one = GroupTensor::identity(v4, 2, 4);
  CHECK(r_matrix(one).is_identity());

  // a symmetric dual cocycle: embed a coboundary d(phi) (symmetric on an
  // abelian dual), whose R-matrix must be trivial
  auto abs = abelian_structure(v4, full_subgroup(v4));
  std::vector<std::uint32_t> phi = {0, 1, 0, 1};
  Cocycle db = coboundary_of(abs.group.as_group(), 2, phi);
  GroupTensor f = embed_dual_cocycle(v4, abs, db);
  CHECK(f.flip21() == f);
  CHECK(r_matrix(f).is_identity());
}

TEST_CASE("slice spans: rank and minimal support") {
  auto v4 = catalog_group("v4");
  CHECK(slice_span(GroupTensor::identity(v4, 2, 4)).rank == 1);
  CHECK(slice_span(GroupTensor::identity(v4, 2, 4)).support.order() == 1);

  auto abs = abelian_structure(v4, full_subgroup(v4));
  Cocycle c = form_to_cocycle(nondeg_form_v4(abs.group));
  GroupTensor f = embed_dual_cocycle(v4, abs, c);
  SliceSpan span = slice_span(r_matrix(f));
  CHECK(span.rank == 4);
  CHECK(span.support.order() == 4);

  auto d8 = catalog_group("d8");
  auto abs8 = abelian_structure(d8, v4_in_d8(d8));
  Cocycle c8 = form_to_cocycle(nondeg_form_v4(abs8.group));
  GroupTensor f8 = embed_dual_cocycle(d8, abs8, c8);
  SliceSpan span8 = slice_span(r_matrix(f8));
  CHECK(span8.rank == 4);
  CHECK(span8.support.elements == v4_in_d8(d8).elements);
}

TEST_CASE("slice rank equals |A| exactly for nondegenerate classes") {
  for (auto factors : {std::vector<int>{2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 4}}) {
    AbelianGroup a = AbelianGroup::from_factors(factors);
    GroupPtr g = a.as_group();
    auto abs = abelian_structure(g, full_subgroup(g));
    for (const AlternatingForm& form0 : alternating_classes(a)) {
      // transport the form through the rediscovered coordinates
      Cocycle c = form_to_cocycle(AlternatingForm{abs.group, form0.b});
      GroupTensor f = embed_dual_cocycle(g, abs, c);
      SliceSpan span = slice_span(r_matrix(f));
      bool nd = is_nondegenerate(c);
      CHECK((span.rank == std::size_t(a.order())) == nd);
      // minimal-subgroup law: the support matches the annihilator subgroup B
      auto rb = radical_and_b(AlternatingForm{abs.group, form0.b});
      std::vector<int> b_parent;
      for (int t : rb.b) b_parent.push_back(abs.to_parent[t]);
      std::sort(b_parent.begin(), b_parent.end());
      CHECK(span.support.elements == b_parent);
    }
  }
}

TEST_CASE("drinfeld element of every computed R-matrix is 1") {
  for (auto factors : {std::vector<int>{2, 2}, {2, 4}, {3, 3}}) {
    AbelianGroup a = AbelianGroup::from_factors(factors);
    GroupPtr g = a.as_group();
    auto abs = abelian_structure(g, full_subgroup(g));
    for (const AlternatingForm& form0 : alternating_classes(a)) {
      Cocycle c = form_to_cocycle(AlternatingForm{abs.group, form0.b});
      GroupTensor r = r_matrix(embed_dual_cocycle(g, abs, c));
      GroupTensor m = r.multiplied_legs();
      CHECK(m == GroupTensor::identity(g, 1, m.conductor()));
    }
  }
}

TEST_CASE("cocommutativity of twisted coproducts") {
  auto v4 = catalog_group("v4");
  CHECK(is_cocommutative_twist(GroupTensor::identity(v4, 2, 4)));

  // normal V4 inside D8, unique nontrivial class: invariant, so cocommutative
  auto d8 = catalog_group("d8");
  auto abs8 = abelian_structure(d8, v4_in_d8(d8));
  Cocycle c8 = form_to_cocycle(nondeg_form_v4(abs8.group));
  CHECK(is_cocommutative_twist(embed_dual_cocycle(d8, abs8, c8)));

  // a non-normal V4 inside S4 cannot give an invariant class
  auto s4 = catalog_group("s4");
  Subgroup nn;
  for (const auto& cls : subgroups_up_to_conjugacy(s4, 24)) {
    if (cls.representative.order() != 4) continue;
    bool elementary = true;
    for (int x : cls.representative.elements) elementary = elementary && s4->element_order(x) <= 2;
    if (elementary && cls.normalizer.order() < 24) {
      nn = cls.representative;
      break;
    }
  }
  REQUIRE(nn.order() == 4);
  auto abs_nn = abelian_structure(s4, nn);
  Cocycle c_nn = form_to_cocycle(nondeg_form_v4(abs_nn.group));
  GroupTensor f_nn = embed_dual_cocycle(s4, abs_nn, c_nn);
  CHECK(!is_cocommutative_twist(f_nn));
  // |S4| = 24 takes the streaming route of the cocycle identity check
  CHECK(check_dual_cocycle(f_nn));
  GroupTensor bad = f_nn;
  bad.set2(0, 1, bad.at2(0, 1) + Cyclotomic::one(bad.conductor()));
  CHECK(!check_dual_cocycle(bad));
}
