#include "fracat/gsets.hpp"

#include <algorithm>

#include "fracat/errors.hpp"

namespace fracat {

GSet make_gset(GroupPtr group, int size, std::vector<int> act) {
  if (size < 0 || act.size() != static_cast<size_t>(group->order) * size)
    throw InvariantViolation("gset action table has wrong size");
  return {std::move(group), size, std::move(act)};
}

bool same_gset(const GSet& a, const GSet& b) {
  return a.size == b.size && same_group(*a.group, *b.group) && a.act == b.act;
}

void validate_gset(const GSet& x) {
  const Group& g = *x.group;
  if (x.act.size() != static_cast<size_t>(g.order) * x.size)
    throw InvariantViolation("gset action table has wrong size");
  for (int p = 0; p < x.size; ++p)
    if (x.apply(0, p) != p) throw InvariantViolation("identity does not act trivially");
  for (int a = 0; a < g.order; ++a) {
    std::vector<char> hit(x.size, 0);
    for (int p = 0; p < x.size; ++p) {
      int q = x.apply(a, p);
      if (q < 0 || q >= x.size || hit[q]) throw InvariantViolation("action is not a bijection");
      hit[q] = 1;
    }
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int p = 0; p < x.size; ++p)
        if (x.apply(a, x.apply(b, p)) != x.apply(g.op(a, b), p))
          throw InvariantViolation("action axiom fails");
}

GSet empty_gset(GroupPtr g) { return {std::move(g), 0, {}}; }

GSet trivial_gset(GroupPtr g, int npoints) {
  std::vector<int> act(static_cast<size_t>(g->order) * npoints);
  for (int a = 0; a < g->order; ++a)
    for (int p = 0; p < npoints; ++p) act[static_cast<size_t>(a) * npoints + p] = p;
  return {std::move(g), npoints, std::move(act)};
}

GSet regular_gset(GroupPtr g) {
  const int n = g->order;
  std::vector<int> act(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) act[static_cast<size_t>(a) * n + x] = g->op(a, x);
  return {std::move(g), n, std::move(act)};
}

GSet conjugation_gset(GroupPtr g) {
  const int n = g->order;
  std::vector<int> act(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) act[static_cast<size_t>(a) * n + x] = g->conj(a, x);
  return {std::move(g), n, std::move(act)};
}

CosetAction coset_action(const GroupPtr& g, const Subgroup& h) {
  if (!same_group(*h.parent, *g)) throw PreconditionError("coset_action: wrong parent group");
  CosetAction c;
  c.point_of.assign(g->order, -1);
  for (int e = 0; e < g->order; ++e) {
    if (c.point_of[e] >= 0) continue;
    int idx = static_cast<int>(c.rep.size());
    c.rep.push_back(e);  // least member: first unvisited in ascending sweep
    for (int m : h.members) c.point_of[g->op(e, m)] = idx;
  }
  const int npts = static_cast<int>(c.rep.size());
  std::vector<int> act(static_cast<size_t>(g->order) * npts);
  for (int a = 0; a < g->order; ++a)
    for (int p = 0; p < npts; ++p)
      act[static_cast<size_t>(a) * npts + p] = c.point_of[g->op(a, c.rep[p])];
  c.gset = {g, npts, std::move(act)};
  return c;
}

GSet coset_gset(const GroupPtr& g, const Subgroup& h) { return coset_action(g, h).gset; }

GSet gset_product(const GSet& x, const GSet& y) {
  if (!same_group(*x.group, *y.group)) throw PreconditionError("gset_product: different groups");
  const int n = x.size * y.size;
  std::vector<int> act(static_cast<size_t>(x.group->order) * n);
  for (int a = 0; a < x.group->order; ++a)
    for (int p = 0; p < x.size; ++p)
      for (int q = 0; q < y.size; ++q)
        act[static_cast<size_t>(a) * n + p * y.size + q] =
            x.apply(a, p) * y.size + y.apply(a, q);
  return {x.group, n, std::move(act)};
}

GSet gset_disjoint_union(const GSet& x, const GSet& y) {
  if (!same_group(*x.group, *y.group))
    throw PreconditionError("gset_disjoint_union: different groups");
  const int n = x.size + y.size;
  std::vector<int> act(static_cast<size_t>(x.group->order) * n);
  for (int a = 0; a < x.group->order; ++a) {
    for (int p = 0; p < x.size; ++p) act[static_cast<size_t>(a) * n + p] = x.apply(a, p);
    for (int q = 0; q < y.size; ++q)
      act[static_cast<size_t>(a) * n + x.size + q] = x.size + y.apply(a, q);
  }
  return {x.group, n, std::move(act)};
}

GSet inflate_along_projection(const GSet& x, const GroupPtr& p, Side which) {
  GroupPtr prod = which == Side::left ? direct_product(p, x.group) : direct_product(x.group, p);
  std::vector<int> act(static_cast<size_t>(prod->order) * x.size);
  for (int e = 0; e < prod->order; ++e) {
    int g = which == Side::left ? e % x.group->order : e / p->order;
    for (int pt = 0; pt < x.size; ++pt)
      act[static_cast<size_t>(e) * x.size + pt] = x.apply(g, pt);
  }
  return {std::move(prod), x.size, std::move(act)};
}

Subgroup stabilizer(const GSet& x, int point) {
  std::vector<int> mem;
  for (int a = 0; a < x.group->order; ++a)
    if (x.apply(a, point) == point) mem.push_back(a);
  return {x.group, std::move(mem)};
}

std::vector<int> orbit_of(const GSet& x, int point) {
  std::vector<char> hit(x.size, 0);
  std::vector<int> orbit;
  for (int a = 0; a < x.group->order; ++a) {
    int q = x.apply(a, point);
    if (!hit[q]) {
      hit[q] = 1;
      orbit.push_back(q);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

OrbitDecomposition orbit_decomposition(const GSet& x) {
  OrbitDecomposition d;
  std::vector<char> visited(x.size, 0);
  for (int p = 0; p < x.size; ++p) {
    if (visited[p]) continue;
    Orbit o;
    o.points = orbit_of(x, p);
    o.base_point = p;  // least point: ascending sweep
    o.stab = stabilizer(x, p);
    for (int q : o.points) visited[q] = 1;
    d.orbits.push_back(std::move(o));
  }
  return d;
}

bool is_equivariant(const GSet& src, const GSet& dst, const std::vector<int>& image) {
  if (image.size() != static_cast<size_t>(src.size)) return false;
  for (int v : image)
    if (v < 0 || v >= dst.size) return false;
  for (int a = 0; a < src.group->order; ++a)
    for (int p = 0; p < src.size; ++p)
      if (image[src.apply(a, p)] != dst.apply(a, image[p])) return false;
  return true;
}

void validate_gmap(const GMap& m) {
  if (!same_group(*m.source.group, *m.target.group))
    throw InvariantViolation("gmap: source and target over different groups");
  if (!is_equivariant(m.source, m.target, m.image))
    throw InvariantViolation("gmap: image is not equivariant");
}

std::optional<GMap> gsets_isomorphic(const GSet& x, const GSet& y) {
  if (!same_group(*x.group, *y.group)) throw PreconditionError("gsets_isomorphic: different groups");
  if (x.size != y.size) return std::nullopt;
  const Group& g = *x.group;
  auto dx = orbit_decomposition(x);
  auto dy = orbit_decomposition(y);
  if (dx.orbits.size() != dy.orbits.size()) return std::nullopt;

  std::vector<int> image(x.size, -1);
  std::vector<char> used(dy.orbits.size(), 0);
  for (const auto& ox : dx.orbits) {
    bool matched = false;
    for (size_t j = 0; j < dy.orbits.size() && !matched; ++j) {
      if (used[j] || dy.orbits[j].points.size() != ox.points.size()) continue;
      const auto& oy = dy.orbits[j];
      // need a with a Stab(base_y) a^-1 = Stab(base_x)
      for (int a = 0; a < g.order && !matched; ++a) {
        if (conjugate_subgroup(oy.stab, a).members != ox.stab.members) continue;
        int target_base = y.apply(a, oy.base_point);
        for (int e = 0; e < g.order; ++e)
          image[x.apply(e, ox.base_point)] = y.apply(e, target_base);
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  GMap m{x, y, std::move(image)};
  validate_gmap(m);
  return m;
}

}  // namespace fracat
