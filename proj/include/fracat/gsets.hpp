#pragma once

#include <optional>
#include <vector>

#include "fracat/groups.hpp"

namespace fracat {

// A finite left action of a group on points 0..size-1, one permutation per
// group element, stored as a flat table.
struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<int> act;  // act[g * size + x]

  int apply(int g, int x) const { return act[static_cast<size_t>(g) * size + x]; }
};

GSet make_gset(GroupPtr group, int size, std::vector<int> act);
bool same_gset(const GSet& a, const GSet& b);  // structural: group, size, table
void validate_gset(const GSet& x);             // exhaustive action axioms

GSet empty_gset(GroupPtr g);
GSet trivial_gset(GroupPtr g, int npoints);
GSet regular_gset(GroupPtr g);       // left multiplication on itself
GSet conjugation_gset(GroupPtr g);   // g . x = g x g^-1

// Left cosets gH ordered by least member; action by left multiplication.
GSet coset_gset(const GroupPtr& g, const Subgroup& h);

// coset_gset together with the element -> point index and the least
// representative of each coset.
struct CosetAction {
  GSet gset;
  std::vector<int> point_of;  // element id -> coset point
  std::vector<int> rep;       // coset point -> least member
};
CosetAction coset_action(const GroupPtr& g, const Subgroup& h);

// Diagonal action; points encoded as xid * |Y| + yid.
GSet gset_product(const GSet& x, const GSet& y);
// Concatenated point ranges, x first.
GSet gset_disjoint_union(const GSet& x, const GSet& y);

enum class Side { left, right };

// The product group acts through the projection onto x's group; the new
// factor p acts trivially. Side::left yields an action of p x G,
// Side::right of G x p.
GSet inflate_along_projection(const GSet& x, const GroupPtr& p, Side which);

Subgroup stabilizer(const GSet& x, int point);
std::vector<int> orbit_of(const GSet& x, int point);  // sorted

struct Orbit {
  std::vector<int> points;  // sorted
  int base_point;           // least point
  Subgroup stab;
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;  // in order of least point id
};

OrbitDecomposition orbit_decomposition(const GSet& x);

// An equivariant point map between G-sets over the same group.
struct GMap {
  GSet source, target;
  std::vector<int> image;
};

bool is_equivariant(const GSet& src, const GSet& dst, const std::vector<int>& image);
void validate_gmap(const GMap& m);

// Equivariant bijection if one exists: orbits are matched by conjugacy of
// stabilizers and the map is assembled orbit by orbit.
std::optional<GMap> gsets_isomorphic(const GSet& x, const GSet& y);

}  // namespace fracat
