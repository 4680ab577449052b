#pragma once

#include "fracat/spans.hpp"

namespace fracat {

// Ordered free-module basis of a hom-set: one canonical class per pair
// (conjugacy class of a subgroup of H x G, normalizer orbit of its fixed
// marks), in key order.
struct HomBasis {
  CatObject source, target;
  std::vector<SpanClassKey> classes;

  int rank() const { return static_cast<int>(classes.size()); }
  // index of a key, or -1
  int index_of(const SpanClassKey& k) const;
};

HomBasis hom_basis(const CatObject& a, const CatObject& b);

// The basis element as a morphism with coefficient 1.
Morphism basis_morphism(const HomBasis& basis, int index);

// Coordinates of a morphism in a basis; throws if a term's key is missing.
std::vector<long long> coordinates(const HomBasis& basis, const Morphism& f);

// Multiplication table of the endomorphisms of the one-point fraction:
// basis_i o basis_j = sum_k coeff(i,j,k) basis_k.
struct StructureTable {
  HomBasis basis;
  std::vector<long long> coeffs;  // n*n*n row-major
  int identity_index = -1;        // position of the regular-biset class

  int rank() const { return basis.rank(); }
  long long at(int i, int j, int k) const {
    const size_t n = basis.classes.size();
    return coeffs[(static_cast<size_t>(i) * n + j) * n + k];
  }
};

StructureTable double_burnside_table(const GroupPtr& g);

// Whether morphisms from the one-point fraction over k into a survive modulo
// the span of those factoring through one-point fractions over groups of
// order < |k|. Exact criterion: k is a subquotient of some orbit stabilizer.
bool essential_hom_nonzero(const CatObject& a, const GroupPtr& k);

// Definitional route at tiny scale: builds the factoring span explicitly,
// with the middle groups running over subquotient representatives of the
// orbit stabilizers, and tests the integer quotient for nonvanishing.
bool essential_hom_nonzero_by_definition(const CatObject& a, const GroupPtr& k);

// Dense exact integer matrix with explicit dimensions, so rank-zero hom
// modules still carry their shape.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> data;  // row-major

  long long& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows, int cols);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);

// The matrix of "compose with f" from Hom({.}/{1}, source) to
// Hom({.}/{1}, target) in hom_basis coordinates (rows index the target basis).
IntMatrix burnside_functor_apply(const Morphism& f);

// Diagonal (up to sign) after unimodular row and column operations. The
// entries need not satisfy the divisibility chain, which is enough for
// lattice-fullness tests.
std::vector<long long> smith_diagonal(IntMatrix m);

// Whether the given vectors generate all of Z^dim.
bool rows_span_full_lattice(const std::vector<std::vector<long long>>& rows, int dim);

}  // namespace fracat
