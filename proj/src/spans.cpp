#include "fracat/spans.hpp"

#include <algorithm>
#include <sstream>

#include "fracat/errors.hpp"

namespace fracat {

namespace {

long long normalize_coeff(long long c, long long modulus) {
  if (modulus <= 0) return c;
  c %= modulus;
  if (c < 0) c += modulus;
  return c;
}

void normalize_terms(Morphism& m, long long modulus) {
  for (auto it = m.terms.begin(); it != m.terms.end();) {
    it->second = normalize_coeff(it->second, modulus);
    if (it->second == 0)
      it = m.terms.erase(it);
    else
      ++it;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CatObject make_object(GSet xset) {
  GroupPtr g = xset.group;
  return {std::move(g), std::move(xset)};
}

CatObject one_point_object(GroupPtr g) {
  GSet x = trivial_gset(g, 1);
  return {std::move(g), std::move(x)};
}

CatObject empty_object(GroupPtr g) {
  GSet x = empty_gset(g);
  return {std::move(g), std::move(x)};
}

bool same_object(const CatObject& a, const CatObject& b) {
  return same_group(*a.group, *b.group) && same_gset(a.xset, b.xset);
}

std::string object_to_string(const CatObject& a) {
  std::string gname = a.group->label.empty() ? identify_small_group(*a.group) : a.group->label;
  return std::to_string(a.xset.size) + "pt/" + gname;
}

namespace {

void validate_span_in(const HomContext& ctx, const Span& s) {
  if (!same_group(*s.uset.group, *ctx.product))
    throw InvariantViolation("span: U is not a set over target-group x source-group");
  if (s.beta.size() != static_cast<size_t>(s.uset.size) ||
      s.alpha.size() != static_cast<size_t>(s.uset.size))
    throw InvariantViolation("span: leg table has wrong size");
  const int ng = s.source.group->order;
  for (int u = 0; u < s.uset.size; ++u) {
    if (s.beta[u] < 0 || s.beta[u] >= s.target.xset.size ||
        s.alpha[u] < 0 || s.alpha[u] >= s.source.xset.size)
      throw InvariantViolation("span: leg image out of range");
  }
  for (int t = 0; t < s.uset.group->order; ++t) {
    const int h = t / ng, g = t % ng;
    for (int u = 0; u < s.uset.size; ++u) {
      int v = s.uset.apply(t, u);
      if (s.beta[v] != s.target.xset.apply(h, s.beta[u]) ||
          s.alpha[v] != s.source.xset.apply(g, s.alpha[u]))
        throw InvariantViolation("span: legs are not equivariant");
    }
  }
}

}  // namespace

void validate_span(const Span& s) {
  validate_span_in(make_hom_context(s.source, s.target), s);
}

std::string key_to_string(const SpanClassKey& k) {
  std::ostringstream os;
  os << "[{";
  for (size_t i = 0; i < k.stab.size(); ++i) {
    if (i) os << ",";
    os << k.stab[i];
  }
  os << "};(" << k.mark_y << "," << k.mark_x << ")]";
  return os.str();
}

bool operator==(const Morphism& a, const Morphism& b) {
  return same_object(a.source, b.source) && same_object(a.target, b.target) &&
         a.terms == b.terms;
}

std::string morphism_to_string(const Morphism& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : f.terms) {
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << key_to_string(key);
  }
  return os.str();
}

HomContext make_hom_context(const CatObject& src, const CatObject& tgt) {
  return {src, tgt, direct_product(tgt.group, src.group), src.group->order};
}

SpanClassKey canonical_class(const HomContext& ctx, const std::vector<int>& stab_members,
                             int mark_y, int mark_x) {
  const Group& p = *ctx.product;
  const GSet& ys = ctx.target.xset;
  const GSet& xs = ctx.source.xset;
  SpanClassKey best;
  std::vector<int> conj(stab_members.size());
  bool first = true;
  for (int t = 0; t < p.order; ++t) {
    for (size_t i = 0; i < stab_members.size(); ++i) conj[i] = p.conj(t, stab_members[i]);
    std::sort(conj.begin(), conj.end());
    SpanClassKey cand{conj, ys.apply(t / ctx.src_order, mark_y),
                      xs.apply(t % ctx.src_order, mark_x)};
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  }
  return best;
}

Span span_from_class(const HomContext& ctx, const SpanClassKey& key) {
  Subgroup stab{ctx.product, key.stab};
  CosetAction ca = coset_action(ctx.product, stab);
  const int n = ca.gset.size;
  std::vector<int> beta(n), alpha(n);
  for (int pt = 0; pt < n; ++pt) {
    int t = ca.rep[pt];
    beta[pt] = ctx.target.xset.apply(t / ctx.src_order, key.mark_y);
    alpha[pt] = ctx.source.xset.apply(t % ctx.src_order, key.mark_x);
  }
  return {ctx.source, ctx.target, std::move(ca.gset), std::move(beta), std::move(alpha)};
}

Morphism zero_morphism(CatObject src, CatObject tgt) {
  return {std::move(src), std::move(tgt), {}};
}

Morphism canonicalize(const HomContext& ctx, const Span& s, long long modulus) {
  validate_span_in(ctx, s);
  Morphism m = zero_morphism(s.source, s.target);
  const Group& p = *ctx.product;
  std::vector<char> visited(s.uset.size, 0);
  for (int u = 0; u < s.uset.size; ++u) {
    if (visited[u]) continue;
    std::vector<int> stab;
    for (int t = 0; t < p.order; ++t) {
      int v = s.uset.apply(t, u);
      visited[v] = 1;
      if (v == u) stab.push_back(t);
    }
    m.terms[canonical_class(ctx, stab, s.beta[u], s.alpha[u])] += 1;
  }
  normalize_terms(m, modulus);
  return m;
}

Morphism canonicalize(const Span& s, long long modulus) {
  return canonicalize(make_hom_context(s.source, s.target), s, modulus);
}

Morphism identity_morphism(const CatObject& obj, long long modulus) {
  const Group& g = *obj.group;
  const GSet& x = obj.xset;
  HomContext ctx = make_hom_context(obj, obj);
  const GroupPtr& prod = ctx.product;
  const int n = g.order * x.size;
  std::vector<int> act(static_cast<size_t>(prod->order) * n);
  std::vector<int> beta(n), alpha(n);
  for (int e = 0; e < g.order; ++e)
    for (int pt = 0; pt < x.size; ++pt) {
      int u = e * x.size + pt;
      beta[u] = pt;
      alpha[u] = x.apply(g.inverse(e), pt);
    }
  for (int t = 0; t < prod->order; ++t) {
    const int a = t / g.order, b = t % g.order;
    for (int e = 0; e < g.order; ++e)
      for (int pt = 0; pt < x.size; ++pt)
        act[static_cast<size_t>(t) * n + e * x.size + pt] =
            g.op(g.op(a, e), g.inverse(b)) * x.size + x.apply(a, pt);
  }
  Span s{obj, obj, GSet{prod, n, std::move(act)}, std::move(beta), std::move(alpha)};
  return canonicalize(ctx, s, modulus);
}

namespace {

// Pullback of two realized spans along the middle object, quotiented by the
// right action of the middle group. V: Y/H -> Z/K, U: X/G -> Y/H.
Span compose_spans(const HomContext& out_ctx, const Span& v, const Span& u) {
  const Group& hgrp = *u.target.group;  // middle group H
  const int nh = hgrp.order;
  const int ng = u.source.group->order;

  std::vector<int> pair_index(static_cast<size_t>(v.uset.size) * u.uset.size, -1);
  std::vector<std::pair<int, int>> pairs;
  for (int pv = 0; pv < v.uset.size; ++pv)
    for (int pu = 0; pu < u.uset.size; ++pu)
      if (v.alpha[pv] == u.beta[pu]) {
        pair_index[static_cast<size_t>(pv) * u.uset.size + pu] =
            static_cast<int>(pairs.size());
        pairs.emplace_back(pv, pu);
      }

  UnionFind uf(static_cast<int>(pairs.size()));
  for (int h = 1; h < nh; ++h) {
    const int hv = hgrp.inverse(h);         // (1, h^-1) on V, (h^-1, 1) on U
    const int tv = hv;                      // id in K x H: 0 * nh + hv
    const int tu = hv * ng;                 // id in H x G: hv * ng + 0
    for (size_t i = 0; i < pairs.size(); ++i) {
      int pv = v.uset.apply(tv, pairs[i].first);
      int pu = u.uset.apply(tu, pairs[i].second);
      uf.merge(static_cast<int>(i), pair_index[static_cast<size_t>(pv) * u.uset.size + pu]);
    }
  }

  std::vector<int> class_of(pairs.size(), -1);
  std::vector<int> root_pair;
  for (size_t i = 0; i < pairs.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (class_of[r] < 0) {
      class_of[r] = static_cast<int>(root_pair.size());
      root_pair.push_back(r);
    }
    class_of[i] = class_of[r];
  }

  const int n = static_cast<int>(root_pair.size());
  const Group& prod = *out_ctx.product;  // K x G
  std::vector<int> act(static_cast<size_t>(prod.order) * n);
  std::vector<int> beta(n), alpha(n);
  for (int c = 0; c < n; ++c) {
    auto [pv, pu] = pairs[root_pair[c]];
    beta[c] = v.beta[pv];
    alpha[c] = u.alpha[pu];
  }
  for (int t = 0; t < prod.order; ++t) {
    const int k = t / ng, g = t % ng;
    const int tv = k * nh;  // (k, 1) in K x H
    const int tu = g;       // (1, g) in H x G
    for (int c = 0; c < n; ++c) {
      auto [pv, pu] = pairs[root_pair[c]];
      int qv = v.uset.apply(tv, pv);
      int qu = u.uset.apply(tu, pu);
      act[static_cast<size_t>(t) * n + c] =
          class_of[pair_index[static_cast<size_t>(qv) * u.uset.size + qu]];
    }
  }
  return {u.source, v.target, GSet{out_ctx.product, n, std::move(act)}, std::move(beta),
          std::move(alpha)};
}

}  // namespace

Morphism compose(const Morphism& f2, const Morphism& f1, long long modulus) {
  if (!same_object(f2.source, f1.target))
    throw PreconditionError("compose: target of the first factor is not the source of the second");
  Morphism out = zero_morphism(f1.source, f2.target);
  if (f1.is_zero() || f2.is_zero()) return out;
  HomContext ctx1 = make_hom_context(f1.source, f1.target);
  HomContext ctx2 = make_hom_context(f2.source, f2.target);
  HomContext ctxo = make_hom_context(f1.source, f2.target);
  std::vector<std::pair<Span, long long>> vs;
  for (const auto& [k2, c2] : f2.terms) vs.emplace_back(span_from_class(ctx2, k2), c2);
  for (const auto& [k1, c1] : f1.terms) {
    Span u = span_from_class(ctx1, k1);
    for (const auto& [v, c2] : vs) {
      Morphism part = canonicalize(ctxo, compose_spans(ctxo, v, u), 0);
      for (const auto& [key, c] : part.terms) out.terms[key] += c * c1 * c2;
    }
  }
  normalize_terms(out, modulus);
  return out;
}

Morphism add(const Morphism& f, const Morphism& g, long long modulus) {
  if (!same_object(f.source, g.source) || !same_object(f.target, g.target))
    throw PreconditionError("add: object mismatch");
  Morphism out = f;
  for (const auto& [key, c] : g.terms) out.terms[key] += c;
  normalize_terms(out, modulus);
  return out;
}

Morphism scale(long long c, const Morphism& f, long long modulus) {
  Morphism out = f;
  for (auto& [key, v] : out.terms) v *= c;
  normalize_terms(out, modulus);
  return out;
}

Morphism negate(const Morphism& f, long long modulus) { return scale(-1, f, modulus); }

Morphism dual(const Morphism& f, long long modulus) {
  HomContext rev = make_hom_context(f.target, f.source);  // product G x H
  const int ng = f.source.group->order;
  const int nh = f.target.group->order;
  Morphism out = zero_morphism(f.target, f.source);
  for (const auto& [key, c] : f.terms) {
    std::vector<int> swapped(key.stab.size());
    for (size_t i = 0; i < key.stab.size(); ++i) {
      int h = key.stab[i] / ng, g = key.stab[i] % ng;
      swapped[i] = g * nh + h;
    }
    std::sort(swapped.begin(), swapped.end());
    out.terms[canonical_class(rev, swapped, key.mark_x, key.mark_y)] += c;
  }
  normalize_terms(out, modulus);
  return out;
}

}  // namespace fracat
