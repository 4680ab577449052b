#include "fracat/category.hpp"

#include <algorithm>

#include "fracat/errors.hpp"

namespace fracat {

namespace {

// X x H over G x H with (g,h)(x,h') = (gx, hh'), points x * |H| + h.
GSet left_summand_set(const GSet& x, const GroupPtr& h) {
  return gset_product(inflate_along_projection(x, h, Side::right),
                      inflate_along_projection(regular_gset(h), x.group, Side::left));
}

// G x Y over G x H with (g,h)(g',y) = (gg', hy), points g' * |Y| + y.
GSet right_summand_set(const GroupPtr& g, const GSet& y) {
  return gset_product(inflate_along_projection(regular_gset(g), y.group, Side::right),
                      inflate_along_projection(y, g, Side::left));
}

}  // namespace

CatObject direct_sum_object(const CatObject& a, const CatObject& b) {
  GroupPtr gh = direct_product(a.group, b.group);
  GSet sum_set =
      gset_disjoint_union(left_summand_set(a.xset, b.group), right_summand_set(a.group, b.xset));
  return {std::move(gh), std::move(sum_set)};
}

Biproduct direct_sum(const CatObject& a, const CatObject& b, long long modulus) {
  const Group& g = *a.group;
  const Group& h = *b.group;
  const GSet& x = a.xset;
  const GSet& y = b.xset;
  CatObject s = direct_sum_object(a, b);
  GroupPtr gh = s.group;

  // Injection of a: U = G x H x X over (G x H) x G, action
  // (g1,h1,g2)(g,h,x) = (g1 g g2^-1, h1 h, g1 x), legs (g,h,x) -> (x,h) and
  // (g,h,x) -> g^-1 x.
  {
    HomContext ctx_a = make_hom_context(a, s);
    const GroupPtr& q = ctx_a.product;
    const int n = g.order * h.order * x.size;
    std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
    for (int ge = 0; ge < g.order; ++ge)
      for (int he = 0; he < h.order; ++he)
        for (int pt = 0; pt < x.size; ++pt) {
          int u = (ge * h.order + he) * x.size + pt;
          beta[u] = pt * h.order + he;
          alpha[u] = x.apply(g.inverse(ge), pt);
        }
    for (int t = 0; t < q->order; ++t) {
      int g2 = t % g.order, g1 = (t / g.order) / h.order, h1 = (t / g.order) % h.order;
      for (int ge = 0; ge < g.order; ++ge)
        for (int he = 0; he < h.order; ++he)
          for (int pt = 0; pt < x.size; ++pt) {
            int u = (ge * h.order + he) * x.size + pt;
            int v = (g.op(g.op(g1, ge), g.inverse(g2)) * h.order + h.op(h1, he)) * x.size +
                    x.apply(g1, pt);
            act[static_cast<size_t>(t) * n + u] = v;
          }
    }
    Span span{a, s, GSet{q, n, std::move(act)}, std::move(beta), std::move(alpha)};
    Morphism inj_a = canonicalize(ctx_a, span, modulus);

    // Injection of b: U = G x H x Y over (G x H) x H, action
    // (g1,h1,h2)(g,h,y) = (g1 g, h1 h h2^-1, h1 y), legs (g,h,y) -> (g,y) and
    // (g,h,y) -> h^-1 y.
    HomContext ctx_b = make_hom_context(b, s);
    const GroupPtr& q2 = ctx_b.product;
    const int offset = x.size * h.order;
    const int n2 = g.order * h.order * y.size;
    std::vector<int> act2(static_cast<size_t>(q2->order) * n2), beta2(n2), alpha2(n2);
    for (int ge = 0; ge < g.order; ++ge)
      for (int he = 0; he < h.order; ++he)
        for (int pt = 0; pt < y.size; ++pt) {
          int u = (ge * h.order + he) * y.size + pt;
          beta2[u] = offset + ge * y.size + pt;
          alpha2[u] = y.apply(h.inverse(he), pt);
        }
    for (int t = 0; t < q2->order; ++t) {
      int h2 = t % h.order, g1 = (t / h.order) / h.order, h1 = (t / h.order) % h.order;
      for (int ge = 0; ge < g.order; ++ge)
        for (int he = 0; he < h.order; ++he)
          for (int pt = 0; pt < y.size; ++pt) {
            int u = (ge * h.order + he) * y.size + pt;
            int v = (g.op(g1, ge) * h.order + h.op(h.op(h1, he), h.inverse(h2))) * y.size +
                    y.apply(h1, pt);
            act2[static_cast<size_t>(t) * n2 + u] = v;
          }
    }
    Span span2{b, s, GSet{q2, n2, std::move(act2)}, std::move(beta2), std::move(alpha2)};
    Morphism inj_b = canonicalize(ctx_b, span2, modulus);

    Morphism proj_a = dual(inj_a, modulus);
    Morphism proj_b = dual(inj_b, modulus);
    return {std::move(s), std::move(inj_a), std::move(inj_b), std::move(proj_a),
            std::move(proj_b)};
  }
}

Morphism copair(const Morphism& f, const Morphism& t, long long modulus) {
  if (!same_object(f.target, t.target)) throw PreconditionError("copair: target mismatch");
  const CatObject& a = f.source;  // X/G
  const CatObject& b = t.source;  // Y/H
  const CatObject& c = f.target;  // Z/K
  CatObject sum = direct_sum_object(a, b);
  const Group& g = *a.group;
  const Group& h = *b.group;
  const int ng = g.order, nh = h.order;
  Morphism out = zero_morphism(sum, c);

  HomContext ctx_f = make_hom_context(a, c);
  HomContext ctx_t = make_hom_context(b, c);
  HomContext ctx_out = make_hom_context(sum, c);
  const GroupPtr& q = ctx_out.product;  // K x (G x H)

  // Per class <U, beta, alpha> of f: the span <U x H> with action
  // (k,g,h1)(u,h) = ((k,g)u, h h1^-1) and legs (u,h) -> beta(u),
  // (u,h) -> (alpha(u), h^-1).
  for (const auto& [key, coeff] : f.terms) {
    Span u = span_from_class(ctx_f, key);
    const int n = u.uset.size * nh;
    std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
    for (int pu = 0; pu < u.uset.size; ++pu)
      for (int he = 0; he < nh; ++he) {
        int pt = pu * nh + he;
        beta[pt] = u.beta[pu];
        alpha[pt] = u.alpha[pu] * nh + h.inverse(he);
      }
    for (int tq = 0; tq < q->order; ++tq) {
      int k = tq / (ng * nh), rest = tq % (ng * nh), ge = rest / nh, h1 = rest % nh;
      int tu = k * ng + ge;  // (k, g) in K x G
      for (int pu = 0; pu < u.uset.size; ++pu)
        for (int he = 0; he < nh; ++he)
          act[static_cast<size_t>(tq) * n + pu * nh + he] =
              u.uset.apply(tu, pu) * nh + h.op(he, h.inverse(h1));
    }
    Span span{sum, c, GSet{q, n, std::move(act)}, std::move(beta), std::move(alpha)};
    out = add(out, scale(coeff, canonicalize(ctx_out, span, modulus), modulus), modulus);
  }

  // Per class <W, eta, eps> of t: the span <G x W> with action
  // (k,g1,h)(g,w) = (g g1^-1, (k,h)w) and legs (g,w) -> eta(w),
  // (g,w) -> (g^-1, eps(w)).
  const int offset = a.xset.size * nh;
  for (const auto& [key, coeff] : t.terms) {
    Span w = span_from_class(ctx_t, key);
    const int n = ng * w.uset.size;
    std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
    for (int ge = 0; ge < ng; ++ge)
      for (int pw = 0; pw < w.uset.size; ++pw) {
        int pt = ge * w.uset.size + pw;
        beta[pt] = w.beta[pw];
        alpha[pt] = offset + g.inverse(ge) * b.xset.size + w.alpha[pw];
      }
    for (int tq = 0; tq < q->order; ++tq) {
      int k = tq / (ng * nh), rest = tq % (ng * nh), g1 = rest / nh, he = rest % nh;
      int tw = k * nh + he;  // (k, h) in K x H
      for (int ge = 0; ge < ng; ++ge)
        for (int pw = 0; pw < w.uset.size; ++pw)
          act[static_cast<size_t>(tq) * n + ge * w.uset.size + pw] =
              g.op(ge, g.inverse(g1)) * w.uset.size + w.uset.apply(tw, pw);
    }
    Span span{sum, c, GSet{q, n, std::move(act)}, std::move(beta), std::move(alpha)};
    out = add(out, scale(coeff, canonicalize(ctx_out, span, modulus), modulus), modulus);
  }
  return out;
}

CatObject tensor(const CatObject& a, const CatObject& b) {
  GroupPtr gh = direct_product(a.group, b.group);
  GSet prod = gset_product(inflate_along_projection(a.xset, b.group, Side::right),
                           inflate_along_projection(b.xset, a.group, Side::left));
  return {std::move(gh), std::move(prod)};
}

Morphism tensor(const Morphism& f, const Morphism& g, long long modulus) {
  CatObject src = tensor(f.source, g.source);
  CatObject tgt = tensor(f.target, g.target);
  Morphism out = zero_morphism(src, tgt);
  HomContext ctx_f = make_hom_context(f.source, f.target);
  HomContext ctx_g = make_hom_context(g.source, g.target);
  HomContext ctx_out = make_hom_context(src, tgt);
  const GroupPtr& q = ctx_out.product;
  const int ng1 = f.source.group->order;
  const int ng2 = g.source.group->order, nh2 = g.target.group->order;
  for (const auto& [kf, cf] : f.terms) {
    Span u = span_from_class(ctx_f, kf);
    for (const auto& [kg, cg] : g.terms) {
      Span v = span_from_class(ctx_g, kg);
      const int n = u.uset.size * v.uset.size;
      std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
      for (int pu = 0; pu < u.uset.size; ++pu)
        for (int pv = 0; pv < v.uset.size; ++pv) {
          int pt = pu * v.uset.size + pv;
          beta[pt] = u.beta[pu] * g.target.xset.size + v.beta[pv];
          alpha[pt] = u.alpha[pu] * g.source.xset.size + v.alpha[pv];
        }
      for (int tq = 0; tq < q->order; ++tq) {
        int hh = tq / (ng1 * ng2), gg = tq % (ng1 * ng2);
        int h1 = hh / nh2, h2 = hh % nh2, g1 = gg / ng2, g2 = gg % ng2;
        int tu = h1 * ng1 + g1, tv = h2 * ng2 + g2;
        for (int pu = 0; pu < u.uset.size; ++pu)
          for (int pv = 0; pv < v.uset.size; ++pv)
            act[static_cast<size_t>(tq) * n + pu * v.uset.size + pv] =
                u.uset.apply(tu, pu) * v.uset.size + v.uset.apply(tv, pv);
      }
      Span span{src, tgt, GSet{q, n, std::move(act)}, std::move(beta), std::move(alpha)};
      out = add(out, scale(cf * cg, canonicalize(ctx_out, span, modulus), modulus), modulus);
    }
  }
  return out;
}

Decomposition decompose(const CatObject& a) {
  Decomposition d;
  for (const auto& orbit : orbit_decomposition(a.xset).orbits)
    d.push_back(subgroup_as_group(orbit.stab));
  return d;
}

std::optional<std::vector<OrbitPairing>> objects_isomorphic_witness(const CatObject& a,
                                                                    const CatObject& b) {
  Decomposition da = decompose(a), db = decompose(b);
  if (da.size() != db.size()) return std::nullopt;
  std::vector<OrbitPairing> pairing;
  std::vector<char> used(db.size(), 0);
  for (size_t i = 0; i < da.size(); ++i) {
    bool matched = false;
    for (size_t j = 0; j < db.size() && !matched; ++j) {
      if (used[j]) continue;
      if (auto iso = are_isomorphic(da[i], db[j])) {
        used[j] = 1;
        matched = true;
        pairing.push_back({static_cast<int>(i), static_cast<int>(j), std::move(*iso)});
      }
    }
    if (!matched) return std::nullopt;
  }
  return pairing;
}

bool objects_isomorphic(const CatObject& a, const CatObject& b) {
  return objects_isomorphic_witness(a, b).has_value();
}

std::pair<Morphism, Morphism> iso_from_equivariant_bijection(const GroupMap& f,
                                                             const std::vector<int>& t,
                                                             const CatObject& a,
                                                             const CatObject& b,
                                                             long long modulus) {
  validate_group_map(f);
  if (!same_group(*f.source, *a.group) || !same_group(*f.target, *b.group))
    throw PreconditionError("iso_from_equivariant_bijection: map does not match objects");
  if (f.source->order != f.target->order)
    throw PreconditionError("iso_from_equivariant_bijection: f is not an isomorphism");
  GroupMap finv = inverse_map(f);
  const Group& g = *a.group;
  const Group& h = *b.group;
  const GSet& x = a.xset;
  const GSet& y = b.xset;
  if (t.size() != static_cast<size_t>(x.size) || x.size != y.size)
    throw PreconditionError("iso_from_equivariant_bijection: t is not a bijection");
  std::vector<int> tinv(y.size, -1);
  for (int p = 0; p < x.size; ++p) {
    if (t[p] < 0 || t[p] >= y.size || tinv[t[p]] != -1)
      throw PreconditionError("iso_from_equivariant_bijection: t is not a bijection");
    tinv[t[p]] = p;
  }
  for (int e = 0; e < g.order; ++e)
    for (int p = 0; p < x.size; ++p)
      if (t[x.apply(e, p)] != y.apply(f(e), t[p]))
        throw PreconditionError("iso_from_equivariant_bijection: t is not compatible with f");

  // forward a -> b: <H x Y> over H x G with (h,g)(h1,y) = (h h1 f(g^-1), hy),
  // legs (h1,y) -> y and (h1,y) -> t^-1(h1^-1 y).
  Morphism fwd;
  {
    GroupPtr q = direct_product(b.group, a.group);
    const int n = h.order * y.size;
    std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
    for (int h1 = 0; h1 < h.order; ++h1)
      for (int p = 0; p < y.size; ++p) {
        int u = h1 * y.size + p;
        beta[u] = p;
        alpha[u] = tinv[y.apply(h.inverse(h1), p)];
      }
    for (int tq = 0; tq < q->order; ++tq) {
      int he = tq / g.order, ge = tq % g.order;
      for (int h1 = 0; h1 < h.order; ++h1)
        for (int p = 0; p < y.size; ++p)
          act[static_cast<size_t>(tq) * n + h1 * y.size + p] =
              h.op(h.op(he, h1), f(g.inverse(ge))) * y.size + y.apply(he, p);
    }
    Span span{a, b, GSet{q, n, std::move(act)}, std::move(beta), std::move(alpha)};
    fwd = canonicalize(span, modulus);
  }

  // backward b -> a: <G x X> over G x H with (g,h)(g1,x) = (g g1 f^-1(h^-1), gx),
  // legs (g1,x) -> x and (g1,x) -> t(g1^-1 x).
  Morphism bwd;
  {
    GroupPtr q = direct_product(a.group, b.group);
    const int n = g.order * x.size;
    std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
    for (int g1 = 0; g1 < g.order; ++g1)
      for (int p = 0; p < x.size; ++p) {
        int u = g1 * x.size + p;
        beta[u] = p;
        alpha[u] = t[x.apply(g.inverse(g1), p)];
      }
    for (int tq = 0; tq < q->order; ++tq) {
      int ge = tq / h.order, he = tq % h.order;
      for (int g1 = 0; g1 < g.order; ++g1)
        for (int p = 0; p < x.size; ++p)
          act[static_cast<size_t>(tq) * n + g1 * x.size + p] =
              g.op(g.op(ge, g1), finv(h.inverse(he))) * x.size + x.apply(ge, p);
    }
    Span span{b, a, GSet{q, n, std::move(act)}, std::move(beta), std::move(alpha)};
    bwd = canonicalize(span, modulus);
  }
  return {std::move(fwd), std::move(bwd)};
}

CatObject coset_object(const GroupPtr& g, const Subgroup& h) {
  return {g, coset_gset(g, h)};
}

std::pair<Morphism, Morphism> iso_coset_collapse(const GroupPtr& g, const Subgroup& h,
                                                 long long modulus) {
  validate_subgroup(h);
  if (!same_group(*h.parent, *g)) throw PreconditionError("iso_coset_collapse: wrong parent");
  CatObject cos = coset_object(g, h);
  GroupPtr hg = subgroup_as_group(h);
  CatObject pt = one_point_object(hg);
  CosetAction ca = coset_action(g, h);
  const int nh = hg->order;

  // forward (G/H)/G -> {.}/H: G as an (H x G)-set via (h,g1)g = h g g1^-1,
  // legs g -> . and g -> g^-1 H.
  Morphism fwd;
  {
    GroupPtr q = direct_product(hg, g);
    const int n = g->order;
    std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
    for (int e = 0; e < n; ++e) {
      beta[e] = 0;
      alpha[e] = ca.point_of[g->inverse(e)];
    }
    for (int tq = 0; tq < q->order; ++tq) {
      int hl = tq / g->order, g1 = tq % g->order;
      int he = h.members[hl];
      for (int e = 0; e < n; ++e)
        act[static_cast<size_t>(tq) * n + e] = g->op(g->op(he, e), g->inverse(g1));
    }
    Span span{cos, pt, GSet{q, n, std::move(act)}, std::move(beta), std::move(alpha)};
    fwd = canonicalize(span, modulus);
  }

  // backward {.}/H -> (G/H)/G: G as a (G x H)-set via (g1,h)g = g1 g h^-1,
  // legs g -> gH and g -> ..
  Morphism bwd;
  {
    GroupPtr q = direct_product(g, hg);
    const int n = g->order;
    std::vector<int> act(static_cast<size_t>(q->order) * n), beta(n), alpha(n);
    for (int e = 0; e < n; ++e) {
      beta[e] = ca.point_of[e];
      alpha[e] = 0;
    }
    for (int tq = 0; tq < q->order; ++tq) {
      int g1 = tq / nh, hl = tq % nh;
      int he = h.members[hl];
      for (int e = 0; e < n; ++e)
        act[static_cast<size_t>(tq) * n + e] = g->op(g->op(g1, e), g->inverse(he));
    }
    Span span{pt, cos, GSet{q, n, std::move(act)}, std::move(beta), std::move(alpha)};
    bwd = canonicalize(span, modulus);
  }
  return {std::move(fwd), std::move(bwd)};
}

}  // namespace fracat
