#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fracat {

// Default cap on the order of explicitly constructed groups. Everything in the
// library works by exhaustive loops over Cayley tables, so this bound keeps
// closures and subgroup sweeps at desk scale. Internal product groups built by
// the categorical operations are exempt (callers pass max_order = 0).
inline constexpr int kDefaultMaxOrder = 64;

// A finite group as an explicit Cayley table on element ids 0..order-1.
// Element 0 is always the identity. Immutable after construction.
struct Group {
  int order = 1;
  std::vector<int> mul;  // row-major: mul[a * order + b]
  std::vector<int> inv;
  std::string label;

  int op(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
  int inverse(int a) const { return inv[a]; }
  // g a g^-1
  int conj(int g, int a) const { return op(op(g, a), inv[g]); }
};

using GroupPtr = std::shared_ptr<const Group>;

// Builds a group from a multiplication table; derives inverses and checks that
// element 0 is a two-sided identity and that inverses exist.
GroupPtr make_group(int order, std::vector<int> mul, std::string label = "");

// Structural equality: same order and same table. Labels are ignored.
bool same_group(const Group& a, const Group& b);

// Exhaustive associativity / identity / inverse check. Throws InvariantViolation.
void validate_group(const Group& g);

int element_order(const Group& g, int a);
std::vector<int> element_order_histogram(const Group& g);
bool is_abelian(const Group& g);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);

// Closure of permutation generators on 0..degree-1 into a Cayley table.
// Element ordering is breadth-first from the identity, generators applied in
// input order, new elements of each level sorted by permutation lex order.
// Throws CapExceeded when the closure grows past max_order (0 = unlimited).
GroupPtr group_from_generators(int degree,
                               const std::vector<std::vector<int>>& generators,
                               int max_order = kDefaultMaxOrder,
                               std::string label = "");

// Componentwise product; element id encoding is fixed as idG * |H| + idH.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, int max_order = 0);

// A subgroup is a sorted member-id set of a parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, always contains 0

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int e) const;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& seed);
Subgroup conjugate_subgroup(const Subgroup& s, int t);
bool is_normal(const Subgroup& s);
void validate_subgroup(const Subgroup& s);

// All subgroups, ordered by (size, lexicographic member set).
std::vector<Subgroup> subgroups(const GroupPtr& g);

// One representative per conjugacy class: the lexicographically least member
// set in the class. Ordered like subgroups().
std::vector<Subgroup> conjugacy_classes_of_subgroups(const GroupPtr& g);

// Representatives of the double cosets A\W/B, least element id in each,
// in increasing order. A and B must be contained in W.
std::vector<int> double_cosets(const Subgroup& a, const Subgroup& w, const Subgroup& b);

// A homomorphism given by its full image table.
struct GroupMap {
  GroupPtr source, target;
  std::vector<int> image;

  int operator()(int e) const { return image[e]; }
};

void validate_group_map(const GroupMap& m);
GroupMap inverse_map(const GroupMap& m);                       // m must be bijective
GroupMap compose_maps(const GroupMap& m2, const GroupMap& m1); // m2 after m1

// Isomorphism search: invariant prefilter (order, element-order histogram),
// then backtracking over images of a greedy minimal generating set.
std::optional<GroupMap> are_isomorphic(const GroupPtr& g, const GroupPtr& h);

// The subgroup as a standalone group; local ids follow the sorted member list,
// so local 0 is the identity.
GroupPtr subgroup_as_group(const Subgroup& s);

// Quotient by a normal subgroup; coset ids are ordered by least coset member.
GroupPtr quotient_group(const GroupPtr& g, const Subgroup& n);

std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

// True iff some subgroup S of g has a normal subgroup N with S/N isomorphic to k.
bool is_subquotient(const GroupPtr& k, const GroupPtr& g);

// All subquotients of g up to isomorphism, as standalone groups.
std::vector<GroupPtr> subquotient_representatives(const GroupPtr& g);

// Greedy minimal generating set: repeatedly adjoin the least element outside
// the closure so far.
std::vector<int> minimal_generating_set(const Group& g);

// Display name for small groups (order <= 8 fully classified), e.g. "C4", "S3".
std::string identify_small_group(const Group& g);

}  // namespace fracat
