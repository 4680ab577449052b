#include <doctest.h>

#include <set>

#include "fracat/burnside.hpp"
#include "fracat/errors.hpp"
#include "fracat/fuzz.hpp"
#include "fracat/mackey.hpp"

using namespace fracat;

namespace {

GroupPtr s3() { return Catalog::instance().by_name("S3"); }

}  // namespace

TEST_CASE("star products") {
  auto c2 = cyclic_group(2);
  auto c3 = cyclic_group(3);

  SUBCASE("full times full is full") {
    GroupPtr kh = direct_product(c2, c3);
    GroupPtr hg = direct_product(c3, c2);
    GroupPtr kg = direct_product(c2, c2);
    Subgroup t = star_product(c2, c3, c2, full_subgroup(kh), full_subgroup(hg), 0, kg);
    CHECK(t.size() == kg->order);
  }
  SUBCASE("diagonal times diagonal is the diagonal") {
    GroupPtr p = direct_product(c2, c2);
    Subgroup diag{p, {0, 3}};
    Subgroup t = star_product(c2, c2, c2, diag, diag, 0, p);
    CHECK(t.members == std::vector<int>{0, 3});
  }
  SUBCASE("left-total with trivial right projection") {
    // E = K x {1}: the composite keeps K in full and only those g with
    // (1, g) in the twisted D
    GroupPtr kh = direct_product(c2, c2);
    GroupPtr hg = direct_product(c2, c2);
    GroupPtr kg = direct_product(c2, c2);
    Subgroup e{kh, {0, 2}};  // {(0,0),(1,0)} = C2 x {1}
    Subgroup diag{hg, {0, 3}};
    Subgroup t = star_product(c2, c2, c2, e, diag, 0, kg);
    // (1,g) in diag forces g = 1
    CHECK(t.members == std::vector<int>{0, 2});
    Subgroup full_d = full_subgroup(hg);
    Subgroup t2 = star_product(c2, c2, c2, e, full_d, 0, kg);
    CHECK(t2.size() == 4);
  }
}

TEST_CASE("double-coset composition equals plain composition") {
  SUBCASE("identity times identity over C2") {
    auto c2 = cyclic_group(2);
    CatObject pt = one_point_object(c2);
    Morphism id = identity_morphism(pt);
    TransitiveSpanData d = transitive_span_data(pt, pt, id.terms.begin()->first);
    validate_transitive_span_data(d);
    Morphism m = mackey_compose(d, d);
    CHECK(m == id);
    long long total = 0;
    for (const auto& [k, c] : m.terms) total += c;
    CHECK(total == 1);  // the leg stabilizer is all of C2, one double coset
  }
  SUBCASE("transitive pairs through non-point middle objects") {
    GroupPtr g = s3();
    auto c2 = cyclic_group(2);
    CatObject pt = one_point_object(c2);
    // the regular middle object has free marks, so the leg stabilizer is
    // trivial and the formula has a single double coset
    for (const auto& x : {CatObject{g, coset_gset(g, subgroup_closure(g, {1}))},
                          CatObject{c2, regular_gset(c2)}}) {
      HomBasis up = hom_basis(x, pt);    // second factor: X -> pt/C2
      HomBasis down = hom_basis(pt, x);  // first factor: pt/C2 -> X
      int attempted = 0;
      for (int i = 0; i < up.rank(); ++i)
        for (int j = 0; j < down.rank(); ++j) {
          TransitiveSpanData second = transitive_span_data(x, pt, up.classes[i]);
          TransitiveSpanData first = transitive_span_data(pt, x, down.classes[j]);
          // the middle object is x: the second factor's source mark must equal
          // the first factor's target mark as points of x
          if (second.mark_x == first.mark_y) {
            ++attempted;
            CHECK(mackey_compose(second, first) ==
                  compose(basis_morphism(up, i), basis_morphism(down, j)));
          } else {
            CHECK_THROWS_AS(mackey_compose(second, first), PreconditionError);
          }
        }
      CHECK(attempted > 0);
    }
  }
  SUBCASE("middle-object mismatch is rejected") {
    auto c2 = cyclic_group(2);
    auto c3 = cyclic_group(3);
    CatObject pt2 = one_point_object(c2), pt3 = one_point_object(c3);
    Morphism id2 = identity_morphism(pt2);
    Morphism id3 = identity_morphism(pt3);
    TransitiveSpanData d2 = transitive_span_data(pt2, pt2, id2.terms.begin()->first);
    TransitiveSpanData d3 = transitive_span_data(pt3, pt3, id3.terms.begin()->first);
    CHECK_THROWS_AS(mackey_compose(d2, d3), PreconditionError);
  }
}

TEST_CASE("term count equals the double coset count") {
  auto c2 = cyclic_group(2);
  GroupPtr g = s3();
  CatObject pt_c2 = one_point_object(c2), pt_s3 = one_point_object(g);
  HomBasis b1 = hom_basis(pt_s3, pt_c2);
  HomBasis b2 = hom_basis(pt_c2, pt_s3);
  for (int i = 0; i < b2.rank(); ++i)
    for (int j = 0; j < b1.rank(); ++j) {
      TransitiveSpanData e = transitive_span_data(pt_c2, pt_s3, b2.classes[i]);
      TransitiveSpanData d = transitive_span_data(pt_s3, pt_c2, b1.classes[j]);
      Morphism m = mackey_compose(e, d);
      Subgroup hprime = stabilizer(d.target.xset, d.mark_y);
      std::vector<int> amem, bmem;
      {
        std::set<int> s;
        for (int mm : e.stab.members) s.insert(mm % c2->order);
        amem.assign(s.begin(), s.end());
        s.clear();
        for (int mm : d.stab.members) s.insert(mm / g->order);
        bmem.assign(s.begin(), s.end());
      }
      long long total = 0;
      for (const auto& [k, c] : m.terms) total += c;
      CHECK(total == static_cast<long long>(
                         double_cosets({c2, amem}, hprime, {c2, bmem}).size()));
    }
}
