#include <doctest.h>

#include <algorithm>

#include "fracat/errors.hpp"
#include "fracat/fuzz.hpp"
#include "fracat/gsets.hpp"

using namespace fracat;

namespace {

GroupPtr s3() { return Catalog::instance().by_name("S3"); }

// the natural 3-point S3-set, rebuilt from the generator permutations
GSet natural_s3() {
  auto g = s3();
  // element permutations in id order: e,(01),(012),(12),(021),(02)
  std::vector<std::vector<int>> perm = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0},
                                        {0, 2, 1}, {2, 0, 1}, {2, 1, 0}};
  std::vector<int> act(6 * 3);
  for (int e = 0; e < 6; ++e)
    for (int p = 0; p < 3; ++p) act[e * 3 + p] = perm[e][p];
  GSet x{g, 3, std::move(act)};
  validate_gset(x);
  return x;
}

}  // namespace

TEST_CASE("coset actions") {
  auto g = s3();
  SUBCASE("full subgroup gives one point") {
    GSet x = coset_gset(g, full_subgroup(g));
    CHECK(x.size == 1);
  }
  SUBCASE("transposition subgroup gives a transitive 3-point set") {
    Subgroup h = subgroup_closure(g, {1});
    GSet x = coset_gset(g, h);
    validate_gset(x);
    CHECK(x.size == 3);
    CHECK(orbit_of(x, 0).size() == 3);
    CHECK(stabilizer(x, 0).members == h.members);
  }
  SUBCASE("trivial subgroup gives the regular set") {
    GSet x = coset_gset(g, trivial_subgroup(g));
    CHECK(x.size == g->order);
    CHECK(same_gset(x, regular_gset(g)));
  }
}

TEST_CASE("orbit decomposition") {
  auto g = s3();
  SUBCASE("trivial action") {
    auto d = orbit_decomposition(trivial_gset(g, 4));
    CHECK(d.orbits.size() == 4);
    for (const auto& o : d.orbits) CHECK(o.stab.size() == g->order);
  }
  SUBCASE("natural action") {
    auto d = orbit_decomposition(natural_s3());
    REQUIRE(d.orbits.size() == 1);
    CHECK(d.orbits[0].stab.size() == 2);
    CHECK(d.orbits[0].base_point == 0);
  }
  SUBCASE("empty set") {
    CHECK(orbit_decomposition(empty_gset(g)).orbits.empty());
  }
  SUBCASE("orbit-stabilizer counting and rebuild") {
    for (const auto& x : {natural_s3(), regular_gset(g), conjugation_gset(g)}) {
      auto d = orbit_decomposition(x);
      int total = 0;
      for (const auto& o : d.orbits) {
        CHECK(static_cast<int>(o.points.size()) * o.stab.size() == g->order);
        total += static_cast<int>(o.points.size());
      }
      CHECK(total == x.size);
      GSet rebuilt = empty_gset(g);
      for (const auto& o : d.orbits)
        rebuilt = gset_disjoint_union(rebuilt, coset_gset(g, o.stab));
      CHECK(gsets_isomorphic(rebuilt, x).has_value());
    }
  }
}

namespace {

// brute equivariant-bijection search, independent of the stabilizer-matching
// route
bool brute_gsets_isomorphic(const GSet& x, const GSet& y) {
  if (x.size != y.size) return false;
  std::vector<int> perm(x.size);
  for (int i = 0; i < x.size; ++i) perm[i] = i;
  do {
    if (is_equivariant(x, y, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return x.size == 0;
}

}  // namespace

TEST_CASE("gset isomorphism agrees with the brute bijection search") {
  for (const auto& name : {"C2", "C3", "C2xC2", "S3"}) {
    GroupPtr g = Catalog::instance().by_name(name);
    std::vector<GSet> sets = {trivial_gset(g, 1), trivial_gset(g, 2), empty_gset(g)};
    for (const auto& h : conjugacy_classes_of_subgroups(g))
      if (g->order / h.size() <= 4) sets.push_back(coset_gset(g, h));
    if (g->order <= 4) sets.push_back(regular_gset(g));
    for (const auto& x : sets)
      for (const auto& y : sets)
        CHECK(gsets_isomorphic(x, y).has_value() == brute_gsets_isomorphic(x, y));
  }
}

TEST_CASE("gset isomorphism") {
  auto g = s3();
  GSet nat = natural_s3();
  SUBCASE("identity on itself") {
    auto m = gsets_isomorphic(nat, nat);
    REQUIRE(m.has_value());
    validate_gmap(*m);
  }
  SUBCASE("coset presentation of the natural set") {
    Subgroup h = stabilizer(nat, 0);
    auto m = gsets_isomorphic(coset_gset(g, h), nat);
    REQUIRE(m.has_value());
    validate_gmap(*m);
  }
  SUBCASE("regular C2-set vs two fixed points") {
    auto c2 = cyclic_group(2);
    CHECK_FALSE(gsets_isomorphic(regular_gset(c2), trivial_gset(c2, 2)).has_value());
  }
}

TEST_CASE("products and disjoint unions") {
  auto c2 = cyclic_group(2);
  SUBCASE("product with a point") {
    GSet r = regular_gset(c2);
    GSet p = gset_product(r, trivial_gset(c2, 1));
    CHECK(p.size == r.size);
    CHECK(p.act == r.act);
  }
  SUBCASE("regular times regular over C2") {
    GSet p = gset_product(regular_gset(c2), regular_gset(c2));
    CHECK(p.size == 4);
    auto d = orbit_decomposition(p);
    CHECK(d.orbits.size() == 2);
    for (const auto& o : d.orbits) CHECK(o.stab.size() == 1);
  }
  SUBCASE("union with empty") {
    GSet r = regular_gset(c2);
    CHECK(same_gset(gset_disjoint_union(empty_gset(c2), r), r));
    CHECK(same_gset(gset_disjoint_union(r, empty_gset(c2)), r));
  }
}

TEST_CASE("inflation along projections") {
  auto g = s3();
  auto c2 = cyclic_group(2);
  GSet nat = natural_s3();

  SUBCASE("trivial factor leaves tables unchanged") {
    GSet left = inflate_along_projection(nat, trivial_group(), Side::left);
    CHECK(left.act == nat.act);
    GSet right = inflate_along_projection(nat, trivial_group(), Side::right);
    CHECK(right.act == nat.act);
  }
  SUBCASE("one-point set stays one point") {
    GSet x = inflate_along_projection(trivial_gset(g, 1), c2, Side::left);
    CHECK(x.size == 1);
    CHECK(x.group->order == 12);
  }
  SUBCASE("stabilizers pick up the full new factor") {
    GSet x = inflate_along_projection(nat, c2, Side::left);
    validate_gset(x);
    auto d = orbit_decomposition(x);
    REQUIRE(d.orbits.size() == 1);
    CHECK(d.orbits[0].stab.size() == 4);  // C2 x (old order-2 stabilizer)
  }
}
