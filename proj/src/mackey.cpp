#include "fracat/mackey.hpp"

#include <algorithm>

#include "fracat/errors.hpp"

namespace fracat {

TransitiveSpanData transitive_span_data(const CatObject& src, const CatObject& tgt,
                                        const SpanClassKey& key) {
  GroupPtr product = direct_product(tgt.group, src.group);
  return {src, tgt, Subgroup{std::move(product), key.stab}, key.mark_y, key.mark_x};
}

void validate_transitive_span_data(const TransitiveSpanData& d) {
  validate_subgroup(d.stab);
  const int ng = d.source.group->order;
  if (d.stab.parent->order != d.target.group->order * ng)
    throw InvariantViolation("transitive span: stabilizer lives in the wrong product group");
  for (int m : d.stab.members) {
    if (d.target.xset.apply(m / ng, d.mark_y) != d.mark_y ||
        d.source.xset.apply(m % ng, d.mark_x) != d.mark_x)
      throw InvariantViolation("transitive span: mark is not fixed by the stabilizer");
  }
}

Morphism morphism_from_transitive(const TransitiveSpanData& d, long long modulus) {
  HomContext ctx = make_hom_context(d.source, d.target);
  Morphism m = zero_morphism(d.source, d.target);
  m.terms[canonical_class(ctx, d.stab.members, d.mark_y, d.mark_x)] = 1;
  if (modulus == 1) m.terms.clear();
  return m;
}

Subgroup star_product(const GroupPtr& k, const GroupPtr& h, const GroupPtr& g,
                      const Subgroup& e, const Subgroup& d, int twist,
                      const GroupPtr& kg_product) {
  const int nk = k->order, nh = h->order, ng = g->order;
  std::vector<char> in_e(static_cast<size_t>(nk) * nh, 0);
  std::vector<char> in_d(static_cast<size_t>(nh) * ng, 0);
  for (int m : e.members) in_e[m] = 1;
  for (int m : d.members) in_d[m] = 1;
  std::vector<int> members;
  for (int ke = 0; ke < nk; ++ke)
    for (int ge = 0; ge < ng; ++ge) {
      bool found = false;
      for (int hp = 0; hp < nh && !found; ++hp)
        // (hp, ge) in (twist,1)-conjugate of D  <=>  (twist^-1 hp twist, ge) in D
        found = in_e[ke * nh + hp] &&
                in_d[h->op(h->op(h->inverse(twist), hp), twist) * ng + ge];
      if (found) members.push_back(ke * ng + ge);
    }
  Subgroup out{kg_product, std::move(members)};
  validate_subgroup(out);
  return out;
}

Morphism mackey_compose(const TransitiveSpanData& e, const TransitiveSpanData& d,
                        long long modulus) {
  if (!same_object(e.source, d.target))
    throw PreconditionError("mackey_compose: middle objects differ");
  if (e.mark_x != d.mark_y)
    throw PreconditionError("mackey_compose: middle marks differ");
  const GroupPtr& kgrp = e.target.group;
  const GroupPtr& hgrp = e.source.group;
  const GroupPtr& ggrp = d.source.group;
  const int nh = hgrp->order, ng = ggrp->order;

  Subgroup hprime = stabilizer(d.target.xset, d.mark_y);

  std::vector<int> amem, bmem;
  {
    std::vector<char> seen(nh, 0);
    for (int m : e.stab.members) {
      int hp = m % nh;  // projection of E <= K x H onto H
      if (!seen[hp]) {
        seen[hp] = 1;
        amem.push_back(hp);
      }
    }
    std::sort(amem.begin(), amem.end());
  }
  {
    std::vector<char> seen(nh, 0);
    for (int m : d.stab.members) {
      int hp = m / ng;  // projection of D <= H x G onto H
      if (!seen[hp]) {
        seen[hp] = 1;
        bmem.push_back(hp);
      }
    }
    std::sort(bmem.begin(), bmem.end());
  }
  Subgroup a{hgrp, std::move(amem)};
  Subgroup b{hgrp, std::move(bmem)};
  for (int m : a.members)
    if (!hprime.contains(m))
      throw InvariantViolation("mackey_compose: projection of E escapes the leg stabilizer");
  for (int m : b.members)
    if (!hprime.contains(m))
      throw InvariantViolation("mackey_compose: projection of D escapes the leg stabilizer");

  HomContext ctx = make_hom_context(d.source, e.target);
  Morphism out = zero_morphism(d.source, e.target);
  for (int twist : double_cosets(a, hprime, b)) {
    Subgroup t = star_product(kgrp, hgrp, ggrp, e.stab, d.stab, twist, ctx.product);
    out.terms[canonical_class(ctx, t.members, e.mark_y, d.mark_x)] += 1;
  }
  if (modulus > 0) {
    for (auto it = out.terms.begin(); it != out.terms.end();) {
      it->second %= modulus;
      if (it->second < 0) it->second += modulus;
      if (it->second == 0)
        it = out.terms.erase(it);
      else
        ++it;
    }
  }
  return out;
}

}  // namespace fracat
