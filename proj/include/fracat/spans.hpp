#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fracat/gsets.hpp"

namespace fracat {

// An object of the category: a fraction X/G.
struct CatObject {
  GroupPtr group;
  GSet xset;
};

CatObject make_object(GSet xset);
CatObject one_point_object(GroupPtr g);
CatObject empty_object(GroupPtr g);
bool same_object(const CatObject& a, const CatObject& b);
std::string object_to_string(const CatObject& a);

// A span Y <- U -> X between fractions X/G and Y/H. U carries the product
// action of H x G (H the target group); beta lands in Y, alpha in X, and
// beta((h,g)u) = h beta(u), alpha((h,g)u) = g alpha(u).
struct Span {
  CatObject source, target;
  GSet uset;               // over direct_product(target.group, source.group)
  std::vector<int> beta;   // point map U -> Y
  std::vector<int> alpha;  // point map U -> X
};

void validate_span(const Span& s);  // throws InvariantViolation

// Canonical form of a transitive span: the stabilizer of a base point together
// with the images of that point under both legs, minimized lexicographically
// over simultaneous conjugation by H x G.
struct SpanClassKey {
  std::vector<int> stab;  // sorted member ids of H x G
  int mark_y = 0;
  int mark_x = 0;

  auto operator<=>(const SpanClassKey&) const = default;
};

std::string key_to_string(const SpanClassKey& k);

// An integer-linear combination of span classes with fixed source and target.
// Zero coefficients are never stored.
struct Morphism {
  CatObject source, target;
  std::map<SpanClassKey, long long> terms;

  bool is_zero() const { return terms.empty(); }
};

bool operator==(const Morphism& a, const Morphism& b);
std::string morphism_to_string(const Morphism& f);

// Shared context for one hom-set: the product group H x G and how its element
// ids decode into the two factors.
struct HomContext {
  CatObject source, target;
  GroupPtr product;  // direct_product(target.group, source.group)
  int src_order;     // decode: h = id / src_order, g = id % src_order
};

HomContext make_hom_context(const CatObject& src, const CatObject& tgt);

// The key of the class of the transitive span determined by a stabilizer and a
// fixed mark pair, minimized over conjugation.
SpanClassKey canonical_class(const HomContext& ctx, const std::vector<int>& stab_members,
                             int mark_y, int mark_x);

// A representative span for a canonical class: cosets of the stabilizer with
// legs induced by the marks.
Span span_from_class(const HomContext& ctx, const SpanClassKey& key);

Morphism zero_morphism(CatObject src, CatObject tgt);

// Decomposes U into orbits and sums the canonical class of each with
// coefficient +1. Constant on span equivalence classes.
Morphism canonicalize(const Span& s, long long modulus = 0);

// Same, against a caller-built context (avoids rebuilding the product table).
Morphism canonicalize(const HomContext& ctx, const Span& s, long long modulus = 0);

// The class of G x X with action (a,b)(g,x) = (a g b^-1, a x) and legs
// (g,x) -> x into the target copy and (g,x) -> g^-1 x into the source copy.
Morphism identity_morphism(const CatObject& obj, long long modulus = 0);

// f2 after f1. Bilinear extension of span composition: pullback along the
// middle legs, quotient by the middle group, induced legs, canonicalize.
Morphism compose(const Morphism& f2, const Morphism& f1, long long modulus = 0);

Morphism add(const Morphism& f, const Morphism& g, long long modulus = 0);
Morphism scale(long long c, const Morphism& f, long long modulus = 0);
Morphism negate(const Morphism& f, long long modulus = 0);

// Classwise opposite span: the same set with the two acting factors swapped
// and the legs exchanged. An involutive anti-homomorphism.
Morphism dual(const Morphism& f, long long modulus = 0);

}  // namespace fracat
