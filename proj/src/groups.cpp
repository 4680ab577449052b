#include "fracat/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fracat/errors.hpp"

namespace fracat {

namespace {

std::vector<int> closure_members(const Group& g, std::vector<int> seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> mem;
  auto push = [&](int e) {
    if (!in[e]) {
      in[e] = 1;
      mem.push_back(e);
    }
  };
  push(0);
  for (int s : seed) push(s);
  bool changed = true;
  while (changed) {
    changed = false;
    size_t n = mem.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        int p = g.op(mem[i], mem[j]);
        if (!in[p]) {
          in[p] = 1;
          mem.push_back(p);
          changed = true;
        }
      }
    }
  }
  std::sort(mem.begin(), mem.end());
  return mem;
}

}  // namespace

GroupPtr make_group(int order, std::vector<int> mul, std::string label) {
  if (order <= 0 || mul.size() != static_cast<size_t>(order) * order)
    throw InvariantViolation("group table has wrong size");
  auto g = std::make_shared<Group>();
  g->order = order;
  g->mul = std::move(mul);
  g->label = std::move(label);
  g->inv.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    if (g->op(0, a) != a || g->op(a, 0) != a)
      throw InvariantViolation("element 0 is not a two-sided identity");
    for (int b = 0; b < order; ++b)
      if (g->op(a, b) == 0 && g->op(b, a) == 0) g->inv[a] = b;
    if (g->inv[a] < 0) throw InvariantViolation("element without two-sided inverse");
  }
  return g;
}

bool same_group(const Group& a, const Group& b) {
  return a.order == b.order && a.mul == b.mul;
}

void validate_group(const Group& g) {
  const int n = g.order;
  if (g.mul.size() != static_cast<size_t>(n) * n || g.inv.size() != static_cast<size_t>(n))
    throw InvariantViolation("group table has wrong size");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.op(a, b);
      if (ab < 0 || ab >= n) throw InvariantViolation("table entry out of range");
    }
  for (int a = 0; a < n; ++a) {
    if (g.op(0, a) != a || g.op(a, 0) != a) throw InvariantViolation("identity law fails");
    if (g.op(a, g.inv[a]) != 0 || g.op(g.inv[a], a) != 0)
      throw InvariantViolation("inverse law fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw InvariantViolation("associativity fails");
}

int element_order(const Group& g, int a) {
  int k = 1, x = a;
  while (x != 0) {
    x = g.op(x, a);
    ++k;
  }
  return k;
}

std::vector<int> element_order_histogram(const Group& g) {
  std::vector<int> h(g.order + 1, 0);
  for (int a = 0; a < g.order; ++a) ++h[element_order(g, a)];
  return h;
}

bool is_abelian(const Group& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

GroupPtr trivial_group() {
  static GroupPtr t = make_group(1, {0}, "C1");
  return t;
}

GroupPtr cyclic_group(int n) {
  if (n == 1) return trivial_group();
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return make_group(n, std::move(mul), "C" + std::to_string(n));
}

GroupPtr group_from_generators(int degree, const std::vector<std::vector<int>>& generators,
                               int max_order, std::string label) {
  if (degree <= 0) throw PreconditionError("degree must be positive");
  for (const auto& p : generators) {
    if (p.size() != static_cast<size_t>(degree))
      throw PreconditionError("generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v]) throw PreconditionError("generator is not a bijection");
      hit[v] = 1;
    }
  }
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  std::vector<int> frontier{0};
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(degree);
    for (int i = 0; i < degree; ++i) r[i] = a[b[i]];
    return r;
  };
  while (!frontier.empty()) {
    std::set<std::vector<int>> batch;
    for (int u : frontier)
      for (const auto& gen : generators) {
        auto p = compose(elems[u], gen);
        if (!index.count(p)) batch.insert(p);
      }
    frontier.clear();
    for (const auto& p : batch) {
      if (max_order > 0 && static_cast<int>(elems.size()) >= max_order)
        throw CapExceeded("order cap exceeded");
      index.emplace(p, static_cast<int>(elems.size()));
      frontier.push_back(static_cast<int>(elems.size()));
      elems.push_back(p);
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return make_group(n, std::move(mul), std::move(label));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, int max_order) {
  const long long n = static_cast<long long>(g->order) * h->order;
  if (max_order > 0 && n > max_order) throw CapExceeded("order cap exceeded");
  const int ord = static_cast<int>(n);
  std::vector<int> mul(static_cast<size_t>(ord) * ord);
  for (int a1 = 0; a1 < g->order; ++a1)
    for (int a2 = 0; a2 < h->order; ++a2)
      for (int b1 = 0; b1 < g->order; ++b1)
        for (int b2 = 0; b2 < h->order; ++b2) {
          int a = a1 * h->order + a2, b = b1 * h->order + b2;
          mul[static_cast<size_t>(a) * ord + b] = g->op(a1, b1) * h->order + h->op(a2, b2);
        }
  std::string label;
  if (!g->label.empty() && !h->label.empty()) label = g->label + "x" + h->label;
  return make_group(ord, std::move(mul), std::move(label));
}

bool Subgroup::contains(int e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

Subgroup trivial_subgroup(const GroupPtr& g) { return {g, {0}}; }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order);
  for (int i = 0; i < g->order; ++i) all[i] = i;
  return {g, std::move(all)};
}

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& seed) {
  return {g, closure_members(*g, seed)};
}

Subgroup conjugate_subgroup(const Subgroup& s, int t) {
  std::vector<int> mem(s.members.size());
  for (size_t i = 0; i < s.members.size(); ++i) mem[i] = s.parent->conj(t, s.members[i]);
  std::sort(mem.begin(), mem.end());
  return {s.parent, std::move(mem)};
}

bool is_normal(const Subgroup& s) {
  for (int t = 0; t < s.parent->order; ++t)
    for (int m : s.members)
      if (!s.contains(s.parent->conj(t, m))) return false;
  return true;
}

void validate_subgroup(const Subgroup& s) {
  if (s.members.empty() || s.members.front() != 0)
    throw InvariantViolation("subgroup must contain the identity");
  if (!std::is_sorted(s.members.begin(), s.members.end()))
    throw InvariantViolation("subgroup members must be sorted");
  for (int a : s.members) {
    if (a < 0 || a >= s.parent->order) throw InvariantViolation("member out of range");
    if (!s.contains(s.parent->inverse(a))) throw InvariantViolation("subgroup not closed under inverse");
    for (int b : s.members)
      if (!s.contains(s.parent->op(a, b))) throw InvariantViolation("subgroup not closed under product");
  }
  if (s.parent->order % s.size() != 0)
    throw InvariantViolation("subgroup size does not divide group order");
}

std::vector<Subgroup> subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<int> triv{0};
  seen.insert(triv);
  work.push_back(triv);
  for (size_t i = 0; i < work.size(); ++i) {
    std::vector<int> cur = work[i];
    for (int e = 1; e < g->order; ++e) {
      if (std::binary_search(cur.begin(), cur.end(), e)) continue;
      auto ext = cur;
      ext.push_back(e);
      auto closed = closure_members(*g, ext);
      if (seen.insert(closed).second) work.push_back(closed);
    }
  }
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(work.size());
  for (auto& m : work) out.push_back({g, std::move(m)});
  return out;
}

std::vector<Subgroup> conjugacy_classes_of_subgroups(const GroupPtr& g) {
  auto all = subgroups(g);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < all.size(); ++i) index.emplace(all[i].members, static_cast<int>(i));
  std::vector<char> visited(all.size(), 0);
  std::vector<Subgroup> reps;
  for (size_t i = 0; i < all.size(); ++i) {
    if (visited[i]) continue;
    reps.push_back(all[i]);  // least member set in its class, by sweep order
    for (int t = 0; t < g->order; ++t) {
      auto c = conjugate_subgroup(all[i], t);
      visited[index.at(c.members)] = 1;
    }
  }
  return reps;
}

std::vector<int> double_cosets(const Subgroup& a, const Subgroup& w, const Subgroup& b) {
  if (!same_group(*a.parent, *w.parent) || !same_group(*b.parent, *w.parent))
    throw PreconditionError("double_cosets: subgroups of different parent groups");
  for (int m : a.members)
    if (!w.contains(m)) throw PreconditionError("double_cosets: A not contained in W");
  for (int m : b.members)
    if (!w.contains(m)) throw PreconditionError("double_cosets: B not contained in W");
  const Group& g = *w.parent;
  std::vector<char> visited(g.order, 0);
  std::vector<int> reps;
  for (int e : w.members) {
    if (visited[e]) continue;
    reps.push_back(e);
    for (int x : a.members)
      for (int y : b.members) visited[g.op(g.op(x, e), y)] = 1;
  }
  return reps;
}

void validate_group_map(const GroupMap& m) {
  if (m.image.size() != static_cast<size_t>(m.source->order))
    throw InvariantViolation("group map image table has wrong size");
  if (m.image[0] != 0) throw InvariantViolation("group map does not fix the identity");
  for (int a = 0; a < m.source->order; ++a) {
    if (m.image[a] < 0 || m.image[a] >= m.target->order)
      throw InvariantViolation("group map image out of range");
    for (int b = 0; b < m.source->order; ++b)
      if (m.image[m.source->op(a, b)] != m.target->op(m.image[a], m.image[b]))
        throw InvariantViolation("group map is not a homomorphism");
  }
}

GroupMap inverse_map(const GroupMap& m) {
  if (m.source->order != m.target->order) throw PreconditionError("inverse_map: not bijective");
  std::vector<int> inv(m.target->order, -1);
  for (int a = 0; a < m.source->order; ++a) {
    if (inv[m.image[a]] != -1) throw PreconditionError("inverse_map: not injective");
    inv[m.image[a]] = a;
  }
  return {m.target, m.source, std::move(inv)};
}

GroupMap compose_maps(const GroupMap& m2, const GroupMap& m1) {
  if (!same_group(*m2.source, *m1.target)) throw PreconditionError("compose_maps: mismatch");
  std::vector<int> img(m1.source->order);
  for (int a = 0; a < m1.source->order; ++a) img[a] = m2.image[m1.image[a]];
  return {m1.source, m2.target, std::move(img)};
}

namespace {

// Closure of gens[0..k] with a BFS expression of every element as
// (parent element, generator index); lets a candidate image be replayed in
// the target group.
struct ExprClosure {
  std::vector<int> elems;            // BFS order, elems[0] = 0
  std::vector<std::pair<int, int>> expr;  // per elems position: (parent pos, gen index)
};

ExprClosure expr_closure(const Group& g, const std::vector<int>& gens) {
  ExprClosure c;
  std::vector<int> pos(g.order, -1);
  c.elems.push_back(0);
  c.expr.emplace_back(-1, -1);
  pos[0] = 0;
  for (size_t i = 0; i < c.elems.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      int e = g.op(c.elems[i], gens[k]);
      if (pos[e] < 0) {
        pos[e] = static_cast<int>(c.elems.size());
        c.elems.push_back(e);
        c.expr.emplace_back(static_cast<int>(i), static_cast<int>(k));
      }
    }
  return c;
}

// Replays the closure in h with the chosen generator images; empty result if
// the replayed map is not an injective homomorphism on the closure.
std::optional<std::vector<std::pair<int, int>>> replay(const Group& g, const Group& h,
                                                       const ExprClosure& c,
                                                       const std::vector<int>& images) {
  std::vector<std::pair<int, int>> map(c.elems.size());  // (element of g, image in h)
  std::vector<char> used(h.order, 0);
  for (size_t i = 0; i < c.elems.size(); ++i) {
    int img = i == 0 ? 0 : h.op(map[c.expr[i].first].second, images[c.expr[i].second]);
    map[i] = {c.elems[i], img};
    if (used[img]) return std::nullopt;
    used[img] = 1;
  }
  std::vector<int> img_of(g.order, -1);
  for (auto [e, v] : map) img_of[e] = v;
  for (auto [a, va] : map)
    for (auto [b, vb] : map)
      if (img_of[g.op(a, b)] != h.op(va, vb)) return std::nullopt;
  return map;
}

}  // namespace

std::vector<int> minimal_generating_set(const Group& g) {
  std::vector<int> gens;
  std::vector<int> closed{0};
  while (static_cast<int>(closed.size()) < g.order) {
    int e = 1;
    while (std::binary_search(closed.begin(), closed.end(), e)) ++e;
    gens.push_back(e);
    closed = closure_members(g, gens);
  }
  return gens;
}

std::optional<GroupMap> are_isomorphic(const GroupPtr& g, const GroupPtr& h) {
  if (g->order != h->order) return std::nullopt;
  if (element_order_histogram(*g) != element_order_histogram(*h)) return std::nullopt;

  auto gens = minimal_generating_set(*g);
  if (gens.empty()) return GroupMap{g, h, {0}};  // both trivial

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int ord = element_order(*g, gens[k]);
    for (int e = 1; e < h->order; ++e)
      if (element_order(*h, e) == ord) candidates[k].push_back(e);
  }

  std::vector<int> images(gens.size(), -1);
  std::vector<int> result;
  auto dfs = [&](auto&& self, size_t depth) -> bool {
    std::vector<int> partial(gens.begin(), gens.begin() + depth);
    auto clo = expr_closure(*g, partial);
    auto rep = replay(*g, *h, clo, images);
    if (!rep) return false;
    if (depth == gens.size()) {
      if (clo.elems.size() != static_cast<size_t>(g->order)) return false;
      result.assign(g->order, -1);
      for (auto [e, v] : *rep) result[e] = v;
      return true;
    }
    for (int cand : candidates[depth]) {
      images[depth] = cand;
      if (self(self, depth + 1)) return true;
    }
    images[depth] = -1;
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  GroupMap m{g, h, std::move(result)};
  return m;
}

GroupPtr subgroup_as_group(const Subgroup& s) {
  const Group& p = *s.parent;
  const int n = s.size();
  std::vector<int> local(p.order, -1);
  for (int i = 0; i < n; ++i) local[s.members[i]] = i;
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = local[p.op(s.members[i], s.members[j])];
      if (prod < 0) throw InvariantViolation("member set is not closed");
      mul[static_cast<size_t>(i) * n + j] = prod;
    }
  return make_group(n, std::move(mul));
}

GroupPtr quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (!same_group(*n.parent, *g)) throw PreconditionError("quotient_group: wrong parent");
  if (!is_normal(n)) throw PreconditionError("quotient_group: subgroup is not normal");
  std::vector<int> coset_of(g->order, -1);
  std::vector<int> reps;  // least member per coset, ascending
  for (int e = 0; e < g->order; ++e) {
    if (coset_of[e] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int m : n.members) coset_of[g->op(e, m)] = idx;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> mul(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      mul[static_cast<size_t>(i) * q + j] = coset_of[g->op(reps[i], reps[j])];
  return make_group(q, std::move(mul));
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (auto& s : subgroups(g))
    if (is_normal(s)) out.push_back(s);
  return out;
}

bool is_subquotient(const GroupPtr& k, const GroupPtr& g) {
  if (k->order == 1) return true;
  if (g->order % k->order != 0) return false;  // |K| divides |S| divides |G|
  for (const auto& s : subgroups(g)) {
    if (s.size() % k->order != 0) continue;
    auto sg = subgroup_as_group(s);
    for (const auto& n : subgroups(sg)) {
      if (n.size() != s.size() / k->order || !is_normal(n)) continue;
      if (are_isomorphic(quotient_group(sg, n), k)) return true;
    }
  }
  return false;
}

std::vector<GroupPtr> subquotient_representatives(const GroupPtr& g) {
  std::vector<GroupPtr> reps;
  for (const auto& s : subgroups(g)) {
    auto sg = subgroup_as_group(s);
    for (const auto& n : subgroups(sg)) {
      if (!is_normal(n)) continue;
      auto q = quotient_group(sg, n);
      bool known = false;
      for (const auto& r : reps)
        if (are_isomorphic(q, r)) {
          known = true;
          break;
        }
      if (!known) reps.push_back(q);
    }
  }
  return reps;
}

std::string identify_small_group(const Group& g) {
  const int n = g.order;
  bool cyclic = false;
  for (int a = 0; a < n && !cyclic; ++a) cyclic = element_order(g, a) == n;
  if (cyclic) return "C" + std::to_string(n);
  if (n == 4) return "C2xC2";
  if (n == 6) return "S3";
  auto hist = element_order_histogram(g);
  if (n == 8) {
    if (is_abelian(g)) return hist[4] > 0 ? "C4xC2" : "C2xC2xC2";
    return hist[2] == 5 ? "D4" : "Q8";
  }
  if (n == 9) return "C3xC3";
  if (!g.label.empty()) return g.label;
  return "group-of-order-" + std::to_string(n);
}

}  // namespace fracat
