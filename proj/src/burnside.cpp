#include "fracat/burnside.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "fracat/errors.hpp"

namespace fracat {

int HomBasis::index_of(const SpanClassKey& k) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), k);
  if (it == classes.end() || !(*it == k)) return -1;
  return static_cast<int>(it - classes.begin());
}

HomBasis hom_basis(const CatObject& a, const CatObject& b) {
  HomContext ctx = make_hom_context(a, b);
  const int ng = ctx.src_order;
  std::set<SpanClassKey> keys;
  for (const auto& rep : conjugacy_classes_of_subgroups(ctx.product)) {
    for (int y = 0; y < b.xset.size; ++y)
      for (int x = 0; x < a.xset.size; ++x) {
        bool fixed = true;
        for (int m : rep.members) {
          if (b.xset.apply(m / ng, y) != y || a.xset.apply(m % ng, x) != x) {
            fixed = false;
            break;
          }
        }
        if (fixed) keys.insert(canonical_class(ctx, rep.members, y, x));
      }
  }
  HomBasis basis{a, b, std::vector<SpanClassKey>(keys.begin(), keys.end())};
  return basis;
}

Morphism basis_morphism(const HomBasis& basis, int index) {
  Morphism m = zero_morphism(basis.source, basis.target);
  m.terms[basis.classes[index]] = 1;
  return m;
}

std::vector<long long> coordinates(const HomBasis& basis, const Morphism& f) {
  std::vector<long long> v(basis.classes.size(), 0);
  for (const auto& [key, c] : f.terms) {
    int i = basis.index_of(key);
    if (i < 0) throw InvariantViolation("coordinates: class outside the basis");
    v[i] = c;
  }
  return v;
}

StructureTable double_burnside_table(const GroupPtr& g) {
  CatObject pt = one_point_object(g);
  StructureTable t;
  t.basis = hom_basis(pt, pt);
  const int n = t.basis.rank();
  t.coeffs.assign(static_cast<size_t>(n) * n * n, 0);
  std::vector<Morphism> b(n);
  for (int i = 0; i < n; ++i) b[i] = basis_morphism(t.basis, i);

  // entries are independent pure computations; rows run concurrently and land
  // at fixed indices
  auto row = [&](int i) {
    std::vector<long long> out(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
      auto coords = coordinates(t.basis, compose(b[i], b[j]));
      for (int k = 0; k < n; ++k) out[static_cast<size_t>(j) * n + k] = coords[k];
    }
    return out;
  };
  std::vector<std::future<std::vector<long long>>> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) rows.push_back(std::async(std::launch::async, row, i));
  for (int i = 0; i < n; ++i) {
    auto out = rows[i].get();
    std::copy(out.begin(), out.end(), t.coeffs.begin() + static_cast<size_t>(i) * n * n);
  }

  Morphism id = identity_morphism(pt);
  if (id.terms.size() != 1)
    throw InvariantViolation("double_burnside_table: identity is not a single class");
  t.identity_index = t.basis.index_of(id.terms.begin()->first);
  if (t.identity_index < 0)
    throw InvariantViolation("double_burnside_table: identity class missing from basis");
  return t;
}

bool essential_hom_nonzero(const CatObject& a, const GroupPtr& k) {
  for (const auto& orbit : orbit_decomposition(a.xset).orbits)
    if (is_subquotient(k, subgroup_as_group(orbit.stab))) return true;
  return false;
}

bool essential_hom_nonzero_by_definition(const CatObject& a, const GroupPtr& k) {
  CatObject pt_k = one_point_object(k);
  HomBasis hom = hom_basis(pt_k, a);
  if (hom.rank() == 0) return false;

  // Middle groups: subquotients of the orbit stabilizers of order < |k|,
  // up to isomorphism.
  std::vector<GroupPtr> mids;
  for (const auto& orbit : orbit_decomposition(a.xset).orbits)
    for (const auto& q : subquotient_representatives(subgroup_as_group(orbit.stab))) {
      if (q->order >= k->order) continue;
      bool known = false;
      for (const auto& m : mids)
        if (are_isomorphic(q, m)) {
          known = true;
          break;
        }
      if (!known) mids.push_back(q);
    }

  std::vector<std::vector<long long>> rows;
  for (const auto& mid : mids) {
    CatObject pt_mid = one_point_object(mid);
    HomBasis down = hom_basis(pt_k, pt_mid);
    HomBasis up = hom_basis(pt_mid, a);
    for (int i = 0; i < down.rank(); ++i) {
      Morphism u = basis_morphism(down, i);
      for (int j = 0; j < up.rank(); ++j)
        rows.push_back(coordinates(hom, compose(basis_morphism(up, j), u)));
    }
  }
  return !rows_span_full_lattice(rows, hom.rank());
}

IntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows, int cols) {
  IntMatrix m{static_cast<int>(rows.size()), cols, {}};
  m.data.reserve(static_cast<size_t>(m.rows) * cols);
  for (const auto& row : rows) {
    if (row.size() != static_cast<size_t>(cols))
      throw PreconditionError("matrix_from_rows: ragged rows");
    m.data.insert(m.data.end(), row.begin(), row.end());
  }
  return m;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw PreconditionError("matrix_product: dimension mismatch");
  IntMatrix c{a.rows, b.cols, std::vector<long long>(static_cast<size_t>(a.rows) * b.cols, 0)};
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m{n, n, std::vector<long long>(static_cast<size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix burnside_functor_apply(const Morphism& f) {
  CatObject pt = one_point_object(trivial_group());
  HomBasis src = hom_basis(pt, f.source);
  HomBasis tgt = hom_basis(pt, f.target);
  IntMatrix m{tgt.rank(), src.rank(),
              std::vector<long long>(static_cast<size_t>(tgt.rank()) * src.rank(), 0)};
  for (int j = 0; j < src.rank(); ++j) {
    auto col = coordinates(tgt, compose(f, basis_morphism(src, j)));
    for (int i = 0; i < tgt.rank(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<long long> smith_diagonal(IntMatrix m) {
  std::vector<long long> diag;
  int r = 0, c = 0;
  auto swap_rows = [&](int i, int j) {
    for (int k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
  };
  auto swap_cols = [&](int i, int j) {
    for (int k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
  };
  while (r < m.rows && c < m.cols) {
    // pivot: the entry of least nonzero magnitude in the remaining block
    int pi = r, pj = c;
    long long best = 0;
    for (int i = r; i < m.rows; ++i)
      for (int j = c; j < m.cols; ++j)
        if (m.at(i, j) != 0 && (best == 0 || std::abs(m.at(i, j)) < best)) {
          best = std::abs(m.at(i, j));
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(r, pi);
    swap_cols(c, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = r + 1; i < m.rows; ++i) {
        long long q = m.at(i, c) / m.at(r, c);
        if (q != 0)
          for (int j = c; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
        if (m.at(i, c) != 0) {
          swap_rows(r, i);
          clean = false;
        }
      }
      for (int j = c + 1; j < m.cols; ++j) {
        long long q = m.at(r, j) / m.at(r, c);
        if (q != 0)
          for (int i = r; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, c);
        if (m.at(r, j) != 0) {
          swap_cols(c, j);
          clean = false;
        }
      }
    }
    diag.push_back(std::abs(m.at(r, c)));
    ++r;
    ++c;
  }
  return diag;
}

bool rows_span_full_lattice(const std::vector<std::vector<long long>>& rows, int dim) {
  if (dim == 0) return true;
  if (rows.empty()) return false;
  auto diag = smith_diagonal(matrix_from_rows(rows, dim));
  if (static_cast<int>(diag.size()) < dim) return false;
  for (long long d : diag)
    if (d != 1) return false;
  return true;
}

}  // namespace fracat
