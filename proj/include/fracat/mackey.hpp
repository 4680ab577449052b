#pragma once

#include "fracat/spans.hpp"

namespace fracat {

// A transitive span with an explicit marked subgroup and mark images, so that
// the double-coset formula's hypothesis (equal marks in the middle object) is
// a well-defined value comparison.
struct TransitiveSpanData {
  CatObject source, target;
  Subgroup stab;   // D <= H x G (subgroup of the product group)
  int mark_y = 0;  // image of the base point in the target set
  int mark_x = 0;  // image of the base point in the source set
};

// Conversion from a canonical class; the canonical base point is used.
TransitiveSpanData transitive_span_data(const CatObject& src, const CatObject& tgt,
                                        const SpanClassKey& key);

void validate_transitive_span_data(const TransitiveSpanData& d);

Morphism morphism_from_transitive(const TransitiveSpanData& d, long long modulus = 0);

// The relational composite {(k,g) : exists h' with (k,h') in E and
// (h',g) in (h,1)-conjugate of D}, a subgroup of K x G.
// E <= K x H and D <= H x G live over the product groups of the given factors;
// kg_product must be direct_product(K, G).
Subgroup star_product(const GroupPtr& k, const GroupPtr& h, const GroupPtr& g,
                      const Subgroup& e, const Subgroup& d, int twist,
                      const GroupPtr& kg_product);

// Double-coset formula for composing transitive spans: one term per double
// coset of the leg-stabilizer in the middle group, each a star product class.
// Requires equal marks in the middle object; throws PreconditionError else.
// Agrees exactly with compose().
Morphism mackey_compose(const TransitiveSpanData& e, const TransitiveSpanData& d,
                        long long modulus = 0);

}  // namespace fracat
