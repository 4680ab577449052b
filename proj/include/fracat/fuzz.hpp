#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracat/burnside.hpp"
#include "fracat/category.hpp"
#include "fracat/functors.hpp"
#include "fracat/mackey.hpp"

namespace fracat {

// Deterministic splitmix64 stream; identical on every platform, so check
// output is byte-identical for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}
  uint64_t next();
  int uniform(int n);          // [0, n)
  long long coeff(int bound);  // nonzero in [-bound, bound]

 private:
  uint64_t state_;
};

// Small-group catalog backing the property suites. Orders <= 8.
struct Catalog {
  std::vector<GroupPtr> groups;
  std::vector<std::vector<Subgroup>> subgroup_lists;

  static const Catalog& instance();
  GroupPtr by_name(const std::string& name) const;  // nullptr if unknown
};

CatObject random_object(Rng& rng, int max_size = 4);
Morphism random_morphism(Rng& rng, const CatObject& a, const CatObject& b);

struct CheckReport {
  std::string name;
  int checked = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
  void fail(const std::string& what);
  void merge(const CheckReport& other);
};

// Category laws: associativity, bilinearity, both identity laws on fuzzed
// composable morphisms.
CheckReport check_laws(uint64_t seed, int budget);

// Duality: involution and anti-homomorphism on fuzzed morphisms.
CheckReport check_dual(uint64_t seed, int budget);

// Double-coset formula against plain composition, exhaustively over all
// transitive pairs on one-point objects for the fixed group catalog.
CheckReport check_mackey_oracle();

// Coset-collapse isomorphisms compose to identities both ways, for every
// subgroup of S3, C4, C2xC2 and D4.
CheckReport check_coset_collapse();

// Biproduct identities and copairing equations on fuzzed object pairs.
CheckReport check_biproduct(uint64_t seed, int budget);

// Decomposition: rebuild isomorphism, multiset uniqueness, cancellation, and
// the fixed negative pair C4 vs C2xC2.
CheckReport check_decompose(uint64_t seed, int budget);

// Double Burnside tables: ranks, two-sided identity, associativity over all
// basis triples, and the free-class product entry for C3.
CheckReport check_double_burnside_tables();

// Burnside functor: rank law on transitive objects, identity matrices,
// mutually inverse collapse matrices, functoriality on fuzzed composites.
CheckReport check_burnside_functor(uint64_t seed, int budget);

// Span functor: identity/composition preservation, the witness pairs, and the
// image-collision characterization, exhaustively at tiny sizes.
CheckReport check_fused(int budget = 0);  // 0 = unlimited pairs

// Biset embedding: product preservation against the direct biset-product
// enumeration and injectivity/rank match, for all group orders <= 6.
CheckReport check_biset_embedding();

// Essential-hom vanishing: subquotient criterion against frozen hand cases
// and the definitional lattice computation at tiny scale.
CheckReport check_essential_hom();

// Named CLI suites: laws | mackey | biproduct | decompose | fused | burnside.
std::vector<std::string> suite_names();
CheckReport run_suite(const std::string& name, uint64_t seed, int budget);

}  // namespace fracat
