#include "fracat/functors.hpp"

#include <algorithm>
#include <functional>

#include "fracat/errors.hpp"

namespace fracat {

void validate_gspan(const GSpan& s) {
  if (!same_group(*s.left.group, *s.group) || !same_group(*s.right.group, *s.group) ||
      !same_group(*s.tset.group, *s.group))
    throw InvariantViolation("gspan: parts over different groups");
  if (!is_equivariant(s.tset, s.left, s.beta) || !is_equivariant(s.tset, s.right, s.alpha))
    throw InvariantViolation("gspan: legs are not equivariant");
}

GSpan gspan_identity(const GSet& x) {
  std::vector<int> id(x.size);
  for (int i = 0; i < x.size; ++i) id[i] = i;
  return {x.group, x, x, x, id, id};
}

GSpan gspan_compose(const GSpan& s2, const GSpan& s1) {
  if (!same_gset(s2.right, s1.left)) throw PreconditionError("gspan_compose: middle mismatch");
  const Group& g = *s1.group;
  std::vector<int> pair_index(static_cast<size_t>(s2.tset.size) * s1.tset.size, -1);
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < s2.tset.size; ++p)
    for (int q = 0; q < s1.tset.size; ++q)
      if (s2.alpha[p] == s1.beta[q]) {
        pair_index[static_cast<size_t>(p) * s1.tset.size + q] = static_cast<int>(pairs.size());
        pairs.emplace_back(p, q);
      }
  const int n = static_cast<int>(pairs.size());
  std::vector<int> act(static_cast<size_t>(g.order) * n), beta(n), alpha(n);
  for (int i = 0; i < n; ++i) {
    beta[i] = s2.beta[pairs[i].first];
    alpha[i] = s1.alpha[pairs[i].second];
  }
  for (int e = 0; e < g.order; ++e)
    for (int i = 0; i < n; ++i) {
      int p = s2.tset.apply(e, pairs[i].first);
      int q = s1.tset.apply(e, pairs[i].second);
      act[static_cast<size_t>(e) * n + i] = pair_index[static_cast<size_t>(p) * s1.tset.size + q];
    }
  return {s1.group, s2.left, s1.right, GSet{s1.group, n, std::move(act)}, std::move(beta),
          std::move(alpha)};
}

bool gspans_equivalent(const GSpan& s1, const GSpan& s2) {
  if (!same_group(*s1.group, *s2.group) || !same_gset(s1.left, s2.left) ||
      !same_gset(s1.right, s2.right) || s1.tset.size != s2.tset.size)
    return false;
  const int n = s1.tset.size;
  std::vector<int> f(n, -1);
  std::vector<char> used(n, 0);
  // backtracking over images, legs and equivariance checked incrementally
  std::function<bool(int)> place = [&](int u) -> bool {
    if (u == n) return true;
    if (f[u] >= 0) return place(u + 1);
    for (int v = 0; v < n; ++v) {
      if (used[v] || s2.beta[v] != s1.beta[u] || s2.alpha[v] != s1.alpha[u]) continue;
      // propagate along the group action
      std::vector<std::pair<int, int>> placed;
      bool ok = true;
      std::vector<std::pair<int, int>> queue{{u, v}};
      for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
        auto [a, b] = queue[qi];
        if (f[a] == b) continue;
        if (f[a] != -1 || used[b]) {
          ok = false;
          break;
        }
        if (s2.beta[b] != s1.beta[a] || s2.alpha[b] != s1.alpha[a]) {
          ok = false;
          break;
        }
        f[a] = b;
        used[b] = 1;
        placed.emplace_back(a, b);
        for (int e = 0; e < s1.group->order; ++e)
          queue.emplace_back(s1.tset.apply(e, a), s2.tset.apply(e, b));
      }
      if (ok && place(u + 1)) return true;
      for (auto [a, b] : placed) {
        f[a] = -1;
        used[b] = 0;
      }
    }
    return false;
  };
  return place(0);
}

Morphism morphism_from_gspan(const GSpan& s, long long modulus) {
  validate_gspan(s);
  const Group& g = *s.group;
  CatObject src{s.group, s.right};
  CatObject tgt{s.group, s.left};
  GroupPtr q = direct_product(s.group, s.group);
  const int n = g.order * s.tset.size;
  std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
  for (int e = 0; e < g.order; ++e)
    for (int t = 0; t < s.tset.size; ++t) {
      int u = e * s.tset.size + t;
      beta[u] = s.beta[t];
      alpha[u] = s.right.apply(g.inverse(e), s.alpha[t]);
    }
  for (int tq = 0; tq < q->order; ++tq) {
    int g1 = tq / g.order, g2 = tq % g.order;
    for (int e = 0; e < g.order; ++e)
      for (int t = 0; t < s.tset.size; ++t)
        act[static_cast<size_t>(tq) * n + e * s.tset.size + t] =
            g.op(g.op(g1, e), g.inverse(g2)) * s.tset.size + s.tset.apply(g1, t);
  }
  Span span{std::move(src), std::move(tgt), GSet{std::move(q), n, std::move(act)},
            std::move(beta), std::move(alpha)};
  return canonicalize(span, modulus);
}

bool fused_equal(const GSpan& s1, const GSpan& s2, long long modulus) {
  if (!same_gset(s1.left, s2.left) || !same_gset(s1.right, s2.right))
    throw PreconditionError("fused_equal: spans are not parallel");
  return morphism_from_gspan(s1, modulus) == morphism_from_gspan(s2, modulus);
}

bool fused_characterization_holds(const GSpan& s1, const GSpan& s2) {
  if (!same_gset(s1.left, s2.left) || !same_gset(s1.right, s2.right) ||
      s1.tset.size != s2.tset.size)
    return false;
  const Group& g = *s1.group;
  const int n = s1.tset.size;
  GSet conj = conjugation_gset(s1.group);

  // candidate twists: per point the conjugation-equivariant maps T1 -> G are
  // determined orbitwise by a value centralizing the stabilizer
  auto dec = orbit_decomposition(s1.tset);
  std::vector<std::vector<int>> choices;
  for (const auto& orbit : dec.orbits) {
    std::vector<int> vals;
    for (int c = 0; c < g.order; ++c) {
      bool central = true;
      for (int m : orbit.stab.members)
        if (g.conj(m, c) != c) {
          central = false;
          break;
        }
      if (central) vals.push_back(c);
    }
    choices.push_back(std::move(vals));
  }

  // enumerate equivariant f : T1 -> T2 (bijections) by per-orbit base images
  std::vector<int> f(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> t(n, -1);

  std::function<bool(size_t)> pick_twist = [&](size_t oi) -> bool {
    if (oi == dec.orbits.size()) return true;
    const auto& orbit = dec.orbits[oi];
    for (int c : choices[oi]) {
      for (int e = 0; e < g.order; ++e) t[s1.tset.apply(e, orbit.base_point)] = conj.apply(e, c);
      bool ok = true;
      for (int u : orbit.points)
        if (s2.alpha[f[u]] != s1.right.apply(t[u], s1.alpha[u])) {
          ok = false;
          break;
        }
      if (ok && pick_twist(oi + 1)) return true;
    }
    return false;
  };

  std::function<bool(size_t)> pick_f = [&](size_t oi) -> bool {
    if (oi == dec.orbits.size()) return pick_twist(0);
    const auto& orbit = dec.orbits[oi];
    for (int img = 0; img < n; ++img) {
      if (used[img] || s2.beta[img] != s1.beta[orbit.base_point]) continue;
      if (stabilizer(s2.tset, img).members != orbit.stab.members) continue;
      std::vector<std::pair<int, int>> placed;
      bool ok = true;
      for (int e = 0; e < g.order && ok; ++e) {
        int a = s1.tset.apply(e, orbit.base_point), b = s2.tset.apply(e, img);
        if (f[a] == b) continue;
        if (f[a] != -1 || used[b] || s2.beta[b] != s1.beta[a]) {
          ok = false;
          break;
        }
        f[a] = b;
        used[b] = 1;
        placed.emplace_back(a, b);
      }
      if (ok && pick_f(oi + 1)) return true;
      for (auto [a, b] : placed) {
        f[a] = -1;
        used[b] = 0;
      }
    }
    return false;
  };
  return pick_f(0);
}

std::pair<GSpan, GSpan> fused_witness(const GroupPtr& g) {
  if (g->order < 2) throw PreconditionError("fused_witness: no witness over the trivial group");
  GSet u = regular_gset(g);
  GSpan s1 = gspan_identity(u);
  // twisted right leg: x -> x c with t(x) = x c x^-1 the conjugation map
  const int c = 1;
  GSpan s2 = s1;
  for (int x = 0; x < g->order; ++x) s2.alpha[x] = g->op(x, c);
  validate_gspan(s2);
  return {std::move(s1), std::move(s2)};
}

void validate_biset(const Biset& b) {
  GroupPtr expected = direct_product(b.left_group, b.right_group);
  if (!same_group(*b.uset.group, *expected))
    throw InvariantViolation("biset: set does not carry the product action");
}

Biset biset_from_subgroup(const GroupPtr& h, const GroupPtr& g, const Subgroup& stab) {
  GroupPtr prod = direct_product(h, g);
  if (!same_group(*stab.parent, *prod))
    throw PreconditionError("biset_from_subgroup: subgroup of the wrong product");
  return {h, g, coset_gset(prod, stab)};
}

Biset regular_biset(const GroupPtr& g) {
  // G acting on itself on both sides: (a,b) x = a x b^-1
  GroupPtr prod = direct_product(g, g);
  const int n = g->order;
  std::vector<int> act(static_cast<size_t>(prod->order) * n);
  for (int t = 0; t < prod->order; ++t) {
    int a = t / n, b = t % n;
    for (int x = 0; x < n; ++x)
      act[static_cast<size_t>(t) * n + x] = g->op(g->op(a, x), g->inverse(b));
  }
  return {g, g, GSet{std::move(prod), n, std::move(act)}};
}

Biset biset_product(const Biset& v, const Biset& u) {
  if (!same_group(*v.right_group, *u.left_group))
    throw PreconditionError("biset_product: middle groups differ");
  const Group& h = *u.left_group;
  const Group& g = *u.right_group;
  const int nu = u.uset.size, nv = v.uset.size;

  // label H-orbits of V x U under (v,u).h = (v h, h^-1 u) by iterated relabel
  std::vector<int> label(static_cast<size_t>(nv) * nu);
  for (size_t i = 0; i < label.size(); ++i) label[i] = static_cast<int>(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pv = 0; pv < nv; ++pv)
      for (int pu = 0; pu < nu; ++pu) {
        int cur = label[static_cast<size_t>(pv) * nu + pu];
        for (int he = 0; he < h.order; ++he) {
          int qv = v.uset.apply(h.inverse(he), pv);              // (1, h^-1) in K x H
          int qu = u.uset.apply(h.inverse(he) * g.order, pu);    // (h^-1, 1) in H x G
          int& other = label[static_cast<size_t>(qv) * nu + qu];
          if (other > cur) {
            other = cur;
            changed = true;
          } else if (other < cur) {
            cur = other;
            label[static_cast<size_t>(pv) * nu + pu] = cur;
            changed = true;
          }
        }
      }
  }
  std::vector<int> to_point(label.size(), -1);
  std::vector<int> reps;
  for (size_t i = 0; i < label.size(); ++i)
    if (label[i] == static_cast<int>(i)) {
      to_point[i] = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
    }
  const int n = static_cast<int>(reps.size());
  GroupPtr prod = direct_product(v.left_group, u.right_group);
  std::vector<int> act(static_cast<size_t>(prod->order) * n);
  for (int t = 0; t < prod->order; ++t) {
    int ke = t / g.order, ge = t % g.order;
    for (int i = 0; i < n; ++i) {
      int pv = reps[i] / nu, pu = reps[i] % nu;
      int qv = v.uset.apply(ke * h.order, pv);  // (k, 1) in K x H
      int qu = u.uset.apply(ge, pu);            // (1, g) in H x G
      act[static_cast<size_t>(t) * n + i] = to_point[label[static_cast<size_t>(qv) * nu + qu]];
    }
  }
  return {v.left_group, u.right_group, GSet{std::move(prod), n, std::move(act)}};
}

Morphism morphism_from_biset(const Biset& b, long long modulus) {
  validate_biset(b);
  CatObject src = one_point_object(b.right_group);
  CatObject tgt = one_point_object(b.left_group);
  std::vector<int> zeros(b.uset.size, 0);
  Span span{std::move(src), std::move(tgt), b.uset, zeros, zeros};
  return canonicalize(span, modulus);
}

}  // namespace fracat
