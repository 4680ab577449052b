#include <doctest.h>

#include "fracat/category.hpp"
#include "fracat/errors.hpp"
#include "fracat/fuzz.hpp"

using namespace fracat;

namespace {

GroupPtr s3() { return Catalog::instance().by_name("S3"); }

}  // namespace

TEST_CASE("biproduct of one-point fractions") {
  auto c2 = cyclic_group(2);
  auto c3 = cyclic_group(3);
  Biproduct bp = direct_sum(one_point_object(c2), one_point_object(c3));
  CHECK(bp.object.group->order == 6);
  CHECK(bp.object.xset.size == 5);  // {.} x C3 and C2 x {.}

  Decomposition d = decompose(bp.object);
  REQUIRE(d.size() == 2);
  CHECK(((d[0]->order == 2 && d[1]->order == 3) || (d[0]->order == 3 && d[1]->order == 2)));

  CHECK(compose(bp.proj_a, bp.inj_a) == identity_morphism(one_point_object(c2)));
  CHECK(compose(bp.proj_b, bp.inj_b) == identity_morphism(one_point_object(c3)));
  CHECK(compose(bp.proj_a, bp.inj_b).is_zero());
  CHECK(compose(bp.proj_b, bp.inj_a).is_zero());
  CHECK(add(compose(bp.inj_a, bp.proj_a), compose(bp.inj_b, bp.proj_b)) ==
        identity_morphism(bp.object));
}

TEST_CASE("sum with the empty fraction over the trivial group") {
  GroupPtr g = s3();
  CatObject a{g, coset_gset(g, subgroup_closure(g, {1}))};
  CHECK(objects_isomorphic(direct_sum_object(a, empty_object(trivial_group())), a));
}

TEST_CASE("sum of fractions over one group is the disjoint union") {
  GroupPtr g = s3();
  GSet x = coset_gset(g, subgroup_closure(g, {1}));
  GSet y = coset_gset(g, subgroup_closure(g, {2}));
  CatObject sum = direct_sum_object(CatObject{g, x}, CatObject{g, y});
  CatObject unioned{g, gset_disjoint_union(x, y)};
  CHECK(objects_isomorphic(sum, unioned));
}

TEST_CASE("sum with the zero object is an isomorphism") {
  GroupPtr g = s3();
  auto c2 = cyclic_group(2);
  CatObject a{g, coset_gset(g, subgroup_closure(g, {1}))};
  CatObject zero = empty_object(c2);
  Biproduct bp = direct_sum(a, zero);
  // the sum object is (X x H)/(G x H); the empty summand contributes nothing
  CHECK(bp.object.xset.size == a.xset.size * c2->order);
  CHECK(objects_isomorphic(bp.object, a));
  CHECK(bp.inj_b.is_zero());
  CHECK(compose(bp.proj_a, bp.inj_a) == identity_morphism(a));
  CHECK(compose(bp.inj_a, bp.proj_a) == identity_morphism(bp.object));
}

TEST_CASE("copairing") {
  Rng rng(23);
  for (int it = 0; it < 10; ++it) {
    CatObject a = random_object(rng, 2), b = random_object(rng, 2), c = random_object(rng, 2);
    Biproduct bp = direct_sum(a, b);
    Morphism f = random_morphism(rng, a, c);
    Morphism t = random_morphism(rng, b, c);
    Morphism phi = copair(f, t);
    CHECK(compose(phi, bp.inj_a) == f);
    CHECK(compose(phi, bp.inj_b) == t);
    CHECK(copair(bp.inj_a, bp.inj_b) == identity_morphism(bp.object));
    CHECK(compose(copair(f, zero_morphism(b, c)), bp.inj_a) == f);
  }
  CatObject a = random_object(rng, 2), b = random_object(rng, 2);
  CHECK_THROWS_AS(copair(random_morphism(rng, a, b), random_morphism(rng, b, a)),
                  PreconditionError);
}

TEST_CASE("tensor") {
  auto c2 = cyclic_group(2);
  SUBCASE("tensor of one-point fractions") {
    CatObject t = tensor(one_point_object(c2), one_point_object(c2));
    CHECK(t.group->order == 4);
    CHECK(t.xset.size == 1);
  }
  SUBCASE("unit object") {
    GroupPtr g = s3();
    CatObject a{g, coset_gset(g, subgroup_closure(g, {1}))};
    CatObject au = tensor(a, one_point_object(trivial_group()));
    CHECK(objects_isomorphic(au, a));
  }
  SUBCASE("identity tensor identity") {
    Rng rng(29);
    for (int it = 0; it < 8; ++it) {
      CatObject a = random_object(rng, 2), b = random_object(rng, 2);
      CHECK(tensor(identity_morphism(a), identity_morphism(b)) ==
            identity_morphism(tensor(a, b)));
    }
  }
  SUBCASE("interchange law") {
    Rng rng(31);
    for (int it = 0; it < 8; ++it) {
      CatObject a = random_object(rng, 2), b = random_object(rng, 2), c = random_object(rng, 2);
      CatObject a2 = random_object(rng, 2), b2 = random_object(rng, 2),
                c2o = random_object(rng, 2);
      Morphism f = random_morphism(rng, b, c), fp = random_morphism(rng, a, b);
      Morphism g = random_morphism(rng, b2, c2o), gp = random_morphism(rng, a2, b2);
      CHECK(compose(tensor(f, g), tensor(fp, gp)) == tensor(compose(f, fp), compose(g, gp)));
    }
  }
}

TEST_CASE("decomposition") {
  GroupPtr g = s3();
  SUBCASE("one-point object") {
    Decomposition d = decompose(one_point_object(g));
    REQUIRE(d.size() == 1);
    CHECK(are_isomorphic(d[0], g).has_value());
  }
  SUBCASE("natural S3-set") {
    Decomposition d = decompose(CatObject{g, coset_gset(g, subgroup_closure(g, {1}))});
    REQUIRE(d.size() == 1);
    CHECK(d[0]->order == 2);
  }
  SUBCASE("regular set collapses to the trivial fraction") {
    CatObject reg{g, regular_gset(g)};
    Decomposition d = decompose(reg);
    REQUIRE(d.size() == 1);
    CHECK(d[0]->order == 1);
    CHECK(objects_isomorphic(reg, one_point_object(trivial_group())));
  }
}

TEST_CASE("object isomorphism") {
  GroupPtr g = s3();
  auto c2 = cyclic_group(2);
  for (const auto& grp : Catalog::instance().groups)
    CHECK(objects_isomorphic(one_point_object(grp), one_point_object(grp)));
  CHECK(objects_isomorphic(CatObject{g, coset_gset(g, subgroup_closure(g, {1}))},
                           one_point_object(c2)));
  CHECK_FALSE(objects_isomorphic(one_point_object(cyclic_group(4)),
                                 one_point_object(direct_product(c2, c2))));

  SUBCASE("witness pairing") {
    CatObject x{g, coset_gset(g, subgroup_closure(g, {1}))};
    auto w = objects_isomorphic_witness(x, one_point_object(c2));
    REQUIRE(w.has_value());
    REQUIRE(w->size() == 1);
    validate_group_map((*w)[0].stab_iso);

    CatObject a = one_point_object(c2), b = one_point_object(cyclic_group(3));
    auto w2 = objects_isomorphic_witness(direct_sum_object(a, b), direct_sum_object(b, a));
    REQUIRE(w2.has_value());
    CHECK(w2->size() == 2);
    for (const auto& p : *w2) validate_group_map(p.stab_iso);
    CHECK_FALSE(objects_isomorphic_witness(a, b).has_value());
  }
}

TEST_CASE("isomorphisms from equivariant bijections") {
  auto c2 = cyclic_group(2);
  SUBCASE("identity data gives the identity morphisms") {
    CatObject reg{c2, regular_gset(c2)};
    GroupMap f{c2, c2, {0, 1}};
    auto [fwd, bwd] = iso_from_equivariant_bijection(f, {0, 1}, reg, reg);
    CHECK(fwd == identity_morphism(reg));
    CHECK(bwd == identity_morphism(reg));
  }
  SUBCASE("relabeled regular set") {
    GSet x = regular_gset(c2);
    // swapping the two points of the regular C2-set is an automorphism, so
    // the relabeled set has the same table; t is still a nontrivial bijection
    GSet y{c2, 2, {0, 1, 1, 0}};
    validate_gset(y);
    CatObject a{c2, x}, b{c2, y};
    GroupMap f{c2, c2, {0, 1}};
    std::vector<int> t{1, 0};
    auto [fwd, bwd] = iso_from_equivariant_bijection(f, t, a, b);
    CHECK(compose(bwd, fwd) == identity_morphism(a));
    CHECK(compose(fwd, bwd) == identity_morphism(b));
  }
  SUBCASE("incompatible data is rejected") {
    CatObject reg{c2, regular_gset(c2)};
    CatObject triv{c2, trivial_gset(c2, 2)};
    GroupMap f{c2, c2, {0, 1}};
    CHECK_THROWS_AS(iso_from_equivariant_bijection(f, {0, 1}, reg, triv), PreconditionError);
  }
}

TEST_CASE("product-inflation isomorphism") {
  // X/G is isomorphic to (X x H)/(G x H), here via the biproduct with the
  // empty fraction over H whose sum object is exactly that product set
  GroupPtr g = s3();
  auto c2 = cyclic_group(2);
  CatObject a{g, coset_gset(g, subgroup_closure(g, {1}))};
  Biproduct bp = direct_sum(a, empty_object(c2));
  GSet expected = gset_product(inflate_along_projection(a.xset, c2, Side::right),
                               inflate_along_projection(regular_gset(c2), g, Side::left));
  CHECK(same_gset(bp.object.xset, expected));
  CHECK(objects_isomorphic(bp.object, a));
}

TEST_CASE("coset collapse isomorphism") {
  SUBCASE("full subgroup collapses the one-point fraction") {
    GroupPtr g = cyclic_group(3);
    auto [fwd, bwd] = iso_coset_collapse(g, full_subgroup(g));
    CatObject cos = coset_object(g, full_subgroup(g));
    CHECK(compose(bwd, fwd) == identity_morphism(cos));
  }
  SUBCASE("S3 with an order-2 subgroup, both composites") {
    GroupPtr g = s3();
    Subgroup h = subgroup_closure(g, {1});
    auto [fwd, bwd] = iso_coset_collapse(g, h);
    CHECK(compose(fwd, bwd) == identity_morphism(one_point_object(subgroup_as_group(h))));
    CHECK(compose(bwd, fwd) == identity_morphism(coset_object(g, h)));
  }
  SUBCASE("C4 with C2, plus the hom rank consequence") {
    GroupPtr g = cyclic_group(4);
    Subgroup h = subgroup_closure(g, {2});
    REQUIRE(h.size() == 2);
    auto [fwd, bwd] = iso_coset_collapse(g, h);
    CHECK(compose(fwd, bwd) == identity_morphism(one_point_object(subgroup_as_group(h))));
    CHECK(compose(bwd, fwd) == identity_morphism(coset_object(g, h)));
    HomBasis basis = hom_basis(one_point_object(trivial_group()), coset_object(g, h));
    CHECK(basis.rank() == 2);
  }
}
