#pragma once

#include <utility>

#include "fracat/spans.hpp"

namespace fracat {

// The biproduct object ((X x H) u (G x Y)) / (G x H) with its injections and
// projections; projections are the duals of the injections.
struct Biproduct {
  CatObject object;
  Morphism inj_a, inj_b;    // a -> object, b -> object
  Morphism proj_a, proj_b;  // object -> a, object -> b
};

// The sum object alone; direct_sum builds this plus the four structure maps.
CatObject direct_sum_object(const CatObject& a, const CatObject& b);

Biproduct direct_sum(const CatObject& a, const CatObject& b, long long modulus = 0);

// The copairing (a + b) -> c of f : a -> c and t : b -> c. Satisfies
// copair(f,t) o inj_a = f and copair(f,t) o inj_b = t.
Morphism copair(const Morphism& f, const Morphism& t, long long modulus = 0);

// (X x Y) / (G x H).
CatObject tensor(const CatObject& a, const CatObject& b);

// Componentwise product span, extended bilinearly. Satisfies the interchange
// law with composition and id (x) id = id.
Morphism tensor(const Morphism& f, const Morphism& g, long long modulus = 0);

// Stabilizer groups of the orbit base points, as standalone groups, in orbit
// order. The object is isomorphic to the sum of one-point fractions over them.
using Decomposition = std::vector<GroupPtr>;
Decomposition decompose(const CatObject& a);

// Exact criterion: decompositions match as multisets up to group isomorphism.
bool objects_isomorphic(const CatObject& a, const CatObject& b);

// The matching behind a positive answer: orbit indices into the two
// decompositions with an isomorphism of the abstract stabilizers. Only the
// boolean is part of the stable contract.
struct OrbitPairing {
  int orbit_a = 0, orbit_b = 0;
  GroupMap stab_iso;
};
std::optional<std::vector<OrbitPairing>> objects_isomorphic_witness(const CatObject& a,
                                                                    const CatObject& b);

// The mutually inverse pair of morphisms induced by a group isomorphism
// f : G -> H and a compatible point bijection t : X -> Y (t(gx) = f(g)t(x)).
// Returns (forward : X/G -> Y/H, backward : Y/H -> X/G).
std::pair<Morphism, Morphism> iso_from_equivariant_bijection(const GroupMap& f,
                                                             const std::vector<int>& t,
                                                             const CatObject& a,
                                                             const CatObject& b,
                                                             long long modulus = 0);

// The mutually inverse pair between (G/H)/G and {.}/H given by the group G
// itself with coset and collapse legs.
// Returns (forward : (G/H)/G -> {.}/H, backward : {.}/H -> (G/H)/G).
std::pair<Morphism, Morphism> iso_coset_collapse(const GroupPtr& g, const Subgroup& h,
                                                 long long modulus = 0);

// The object (G/H)/G, as produced by iso_coset_collapse.
CatObject coset_object(const GroupPtr& g, const Subgroup& h);

}  // namespace fracat
