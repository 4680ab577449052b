#pragma once

#include <utility>

#include "fracat/spans.hpp"

namespace fracat {

// A span of G-sets Y <- T -> X over a single group, with equivariant legs.
struct GSpan {
  GroupPtr group;
  GSet left;   // Y
  GSet right;  // X
  GSet tset;   // T
  std::vector<int> beta;   // T -> Y
  std::vector<int> alpha;  // T -> X
};

void validate_gspan(const GSpan& s);
GSpan gspan_identity(const GSet& x);

// Pullback composition: pairs with matching middle legs under the diagonal
// action.
GSpan gspan_compose(const GSpan& s2, const GSpan& s1);

// Equivalence in the span category of G-sets: an equivariant bijection of the
// apexes commuting with both legs. Exhaustive search; tiny sizes only.
bool gspans_equivalent(const GSpan& s1, const GSpan& s2);

// The morphism X/G -> Y/G of the span: the class of G x T with action
// (g1,g2)(g,t) = (g1 g g2^-1, g1 t), leg to Y given by (g,t) -> beta(t) and
// leg to X by (g,t) -> g^-1 alpha(t). Preserves identities and composition;
// injective on objects but neither full nor faithful.
Morphism morphism_from_gspan(const GSpan& s, long long modulus = 0);

// Whether two parallel G-set spans have the same image morphism.
bool fused_equal(const GSpan& s1, const GSpan& s2, long long modulus = 0);

// Exhaustive test of the image-collision criterion: a G-set isomorphism
// f : T1 -> T2 and a map t : T1 -> G equivariant for conjugation with
// beta2 o f = beta1 and alpha2 o f = (t . alpha1), where (t . a)(u) = t(u) a(u).
bool fused_characterization_holds(const GSpan& s1, const GSpan& s2);

// For a nontrivial group: a pair of inequivalent spans on the regular G-set
// (identity legs vs. a conjugation-twisted leg) with equal image morphisms.
std::pair<GSpan, GSpan> fused_witness(const GroupPtr& g);

// An (H,G)-biset presented as a set over H x G.
struct Biset {
  GroupPtr left_group;   // H
  GroupPtr right_group;  // G
  GSet uset;             // over direct_product(left_group, right_group)
};

void validate_biset(const Biset& b);
Biset biset_from_subgroup(const GroupPtr& h, const GroupPtr& g, const Subgroup& stab);
Biset regular_biset(const GroupPtr& g);  // the identity (G,G)-biset

// The biset product V x_H U: H-orbits of the cartesian product, as a
// (K,G)-biset. Direct enumeration, independent of span composition.
Biset biset_product(const Biset& v, const Biset& u);

// The morphism {.}/G -> {.}/H of a biset: the class of {.} <- U -> {.}.
// Additive, multiplicative and faithful.
Morphism morphism_from_biset(const Biset& b, long long modulus = 0);

}  // namespace fracat
