#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "loctrop/core.hpp"

namespace loctrop {

struct OriginOnlyError : DomainError {
  OriginOnlyError() : DomainError("cone is the origin; no relative interior direction") {}
};

namespace lin {

// Reduced row echelon form over Q.  Deterministic: columns left to right,
// first nonzero row as pivot.
inline std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows,
                                          std::vector<int>* pivots_out = nullptr) {
  std::vector<std::vector<Rat>> out;
  if (rows.empty()) return out;
  const std::size_t ncols = rows[0].size();
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = rows[r][col];
    for (auto& x : rows[r]) x /= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(r);
  if (pivots_out) *pivots_out = pivots;
  return rows;
}

// Basis of {x : E x = 0} given E in RREF with the stated pivot columns.
inline std::vector<std::vector<Rat>> nullspace(
    const std::vector<std::vector<Rat>>& rref_rows, const std::vector<int>& pivots,
    int ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < rref_rows.size(); ++i)
      v[pivots[i]] = -rref_rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Constraint {
  std::vector<Int> a;
  bool strict = false;
};

inline bool is_zero_row(const std::vector<Int>& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

// gcd scaling that preserves the sign (inequalities are one-sided).
inline std::vector<Int> scale_signed(std::vector<Int> a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, x);
  if (g != 0)
    for (Int& x : a) x /= g;
  return a;
}

// Satisfiability over R of the homogeneous system {a.x >= 0 or > 0}.
// Exact Fourier-Motzkin; fine at ambient dimension <= 5 or so.
inline bool feasible(std::vector<Constraint> sys, int nvars) {
  for (auto& c : sys) c.a = scale_signed(c.a);

  for (int var = nvars - 1; var >= 0; --var) {
    // dedupe / ground-check
    {
      std::map<std::vector<Int>, bool> seen;
      std::vector<Constraint> next;
      for (auto& c : sys) {
        if (is_zero_row(c.a)) {
          if (c.strict) return false;
          continue;
        }
        c.a = scale_signed(c.a);
        auto it = seen.find(c.a);
        if (it == seen.end())
          seen.emplace(c.a, c.strict);
        else
          it->second = it->second || c.strict;
      }
      for (auto& [row, strict] : seen) next.push_back(Constraint{row, strict});
      sys = std::move(next);
    }
    std::vector<Constraint> pos, negn, rest;
    for (auto& c : sys) {
      if (c.a[var] > 0)
        pos.push_back(std::move(c));
      else if (c.a[var] < 0)
        negn.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    for (const auto& p : pos)
      for (const auto& n : negn) {
        Constraint comb;
        comb.strict = p.strict || n.strict;
        comb.a.resize(p.a.size());
        const Int pc = p.a[var], nc = -n.a[var];
        for (std::size_t j = 0; j < p.a.size(); ++j)
          comb.a[j] = nc * p.a[j] + pc * n.a[j];
        if (is_zero_row(comb.a)) {
          if (comb.strict) return false;
          continue;
        }
        comb.a = scale_signed(comb.a);
        rest.push_back(std::move(comb));
      }
    sys = std::move(rest);
  }
  for (const auto& c : sys)
    if (c.strict) return false;  // leftover ground strict rows
  return true;
}

inline Rat dot_rat(const std::vector<Int>& a, const std::vector<Rat>& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
  return s;
}

// One point of {rows.t > 0 for strict rows, >= 0 otherwise}, assuming the
// system is strictly feasible.  Fourier-Motzkin with exact back substitution:
// level j holds the projection onto variables t_0..t_{j-1}.
inline std::vector<Rat> strict_point(const std::vector<Constraint>& rows, int k) {
  std::vector<std::vector<Constraint>> levels(k + 1);
  levels[k] = rows;
  for (int var = k - 1; var >= 1; --var) {
    std::vector<Constraint> pos, negn, rest;
    for (const auto& c : levels[var + 1]) {
      if (is_zero_row(c.a)) continue;
      if (c.a[var] > 0)
        pos.push_back(c);
      else if (c.a[var] < 0)
        negn.push_back(c);
      else
        rest.push_back(c);
    }
    for (const auto& p : pos)
      for (const auto& n : negn) {
        Constraint comb;
        comb.strict = p.strict || n.strict;
        comb.a.resize(p.a.size());
        const Int pc = p.a[var], nc = -n.a[var];
        for (std::size_t j = 0; j < p.a.size(); ++j)
          comb.a[j] = nc * p.a[j] + pc * n.a[j];
        if (!is_zero_row(comb.a)) rest.push_back(std::move(comb));
      }
    levels[var] = std::move(rest);
  }
  std::vector<Rat> t(k, Rat(0));
  for (int var = 0; var < k; ++var) {
    std::optional<Rat> lo, hi;
    for (const auto& c : levels[var + 1]) {
      if (c.a[var] == 0) continue;
      Rat partial = 0;
      for (int j = 0; j < var; ++j) partial += Rat(c.a[j]) * t[j];
      Rat bound = -partial / Rat(c.a[var]);
      if (c.a[var] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi)
      t[var] = (*lo + *hi) / 2;
    else if (lo)
      t[var] = *lo + 1;
    else if (hi)
      t[var] = *hi - 1;
    else
      t[var] = 0;
  }
  return t;
}

}  // namespace lin

// ---------------------------------------------------------------------------
// Cones

// {u in R^n : eq.u = 0, ineq.u >= 0} with primitive integer normals.
// canonicalize() produces the unique representative: equality rows are the
// RREF basis of the lineality-orthogonal span, inequalities are the facet
// normals reduced modulo the equality space.
struct RationalCone {
  int ambient = 0;
  std::vector<std::vector<Int>> eq;
  std::vector<std::vector<Int>> ineq;
  bool canonical = false;
  bool promoted_equalities = false;  // EmptyInterior flag from canonicalize

  bool operator==(const RationalCone& o) const {
    return ambient == o.ambient && eq == o.eq && ineq == o.ineq;
  }
};

inline RationalCone make_cone(int ambient, std::vector<std::vector<Int>> eqs,
                              std::vector<std::vector<Int>> ineqs) {
  RationalCone c;
  c.ambient = ambient;
  c.eq = std::move(eqs);
  c.ineq = std::move(ineqs);
  return c;
}

inline std::vector<Int> int_row(const std::vector<int>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

// The closure of the orthant stratum: u_i = 0 on lambda, u_j >= 0 elsewhere.
inline RationalCone stratum_closure_cone(const Stratum& s) {
  RationalCone c;
  c.ambient = s.nvars;
  for (int i = 0; i < s.nvars; ++i) {
    std::vector<Int> row(s.nvars, Int(0));
    row[i] = 1;
    if (s.forces_zero(i))
      c.eq.push_back(std::move(row));
    else
      c.ineq.push_back(std::move(row));
  }
  return c;
}

namespace detail {

using lin::scale_signed;

// Clear the pivot coordinates of b against the integer RREF rows (positive
// leading entries); direction-preserving (multiplies b by positive numbers).
inline std::vector<Int> reduce_mod_eqs(std::vector<Int> b,
                                       const std::vector<std::vector<Int>>& eq_rows,
                                       const std::vector<int>& pivots) {
  for (std::size_t i = 0; i < eq_rows.size(); ++i) {
    int p = pivots[i];
    if (b[p] == 0) continue;
    Int lead = eq_rows[i][p];
    Int bp = b[p];
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = lead * b[j] - bp * eq_rows[i][j];
  }
  return scale_signed(b);
}

}  // namespace detail

inline RationalCone canonicalize(const RationalCone& in) {
  if (in.canonical) return in;
  RationalCone c;
  c.ambient = in.ambient;

  std::vector<std::vector<Rat>> eq_rat;
  for (const auto& r : in.eq) eq_rat.emplace_back(r.begin(), r.end());
  std::vector<std::vector<Int>> work_ineq = in.ineq;
  bool promoted_any = false;

  std::vector<std::vector<Int>> eq_int;
  std::vector<int> pivots;
  std::vector<std::vector<Rat>> null_basis;

  auto rebuild_eqs = [&]() {
    std::vector<std::vector<Rat>> rr = lin::rref(eq_rat, &pivots);
    eq_rat = rr;
    eq_int.clear();
    for (const auto& r : rr) eq_int.push_back(primitive_vector(r));
    null_basis = lin::nullspace(rr, pivots, c.ambient);
  };
  rebuild_eqs();

  // Promote inequalities that the system forces to be equalities.
  for (bool changed = true; changed;) {
    changed = false;
    // Project inequalities onto the nullspace coordinates.
    const int k = static_cast<int>(null_basis.size());
    std::vector<std::vector<Int>> proj;
    std::vector<std::size_t> src;
    std::set<std::vector<Int>> seen;
    for (std::size_t i = 0; i < work_ineq.size(); ++i) {
      std::vector<Rat> row(k);
      for (int j = 0; j < k; ++j) row[j] = lin::dot_rat(work_ineq[i], null_basis[j]);
      std::vector<Int> pr(k);
      {
        Int lcm_den = 1;
        for (const Rat& x : row) lcm_den = lcm(lcm_den, denominator(x));
        for (int j = 0; j < k; ++j) pr[j] = numerator(row[j]) * (lcm_den / denominator(row[j]));
        pr = detail::scale_signed(pr);
      }
      if (lin::is_zero_row(pr)) continue;  // implied by the equalities
      if (seen.insert(pr).second) {
        proj.push_back(pr);
        src.push_back(i);
      }
    }
    std::vector<lin::Constraint> base;
    for (const auto& p : proj) base.push_back(lin::Constraint{p, false});
    for (std::size_t i = 0; i < proj.size(); ++i) {
      auto sys = base;
      sys.push_back(lin::Constraint{proj[i], true});
      if (!lin::feasible(sys, static_cast<int>(proj[i].size()))) {
        eq_rat.emplace_back(work_ineq[src[i]].begin(), work_ineq[src[i]].end());
        work_ineq.erase(work_ineq.begin() + src[i]);
        promoted_any = true;
        rebuild_eqs();
        changed = true;
        break;
      }
    }
    if (!changed) {
      // Stable: reduce, dedupe, and drop redundant inequalities.
      std::set<std::vector<Int>> reduced;
      for (const auto& b : work_ineq) {
        std::vector<Int> r = detail::reduce_mod_eqs(b, eq_int, pivots);
        if (!lin::is_zero_row(r)) reduced.insert(r);
      }
      std::vector<std::vector<Int>> cand(reduced.begin(), reduced.end());
      // Redundancy test in nullspace coordinates.
      const int k = static_cast<int>(null_basis.size());
      auto project = [&](const std::vector<Int>& b) {
        std::vector<Rat> row(k);
        for (int j = 0; j < k; ++j) row[j] = lin::dot_rat(b, null_basis[j]);
        std::vector<Int> pr(k);
        Int lcm_den = 1;
        for (const Rat& x : row) lcm_den = lcm(lcm_den, denominator(x));
        for (int j = 0; j < k; ++j) pr[j] = numerator(row[j]) * (lcm_den / denominator(row[j]));
        return detail::scale_signed(pr);
      };
      std::vector<bool> keep(cand.size(), true);
      for (std::size_t i = 0; i < cand.size(); ++i) {
        std::vector<lin::Constraint> sys;
        for (std::size_t j = 0; j < cand.size(); ++j)
          if (j != i && keep[j]) sys.push_back(lin::Constraint{project(cand[j]), false});
        std::vector<Int> pi = project(cand[i]);
        for (Int& x : pi) x = -x;
        sys.push_back(lin::Constraint{pi, true});
        if (!lin::feasible(sys, k)) keep[i] = false;  // implied by the others
      }
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (keep[i]) c.ineq.push_back(cand[i]);
    }
  }

  c.eq = eq_int;
  std::sort(c.eq.begin(), c.eq.end());
  std::sort(c.ineq.begin(), c.ineq.end());
  c.canonical = true;
  c.promoted_equalities = promoted_any;
  return c;
}

inline int cone_dim(const RationalCone& c) {
  RationalCone k = canonicalize(c);
  return k.ambient - static_cast<int>(k.eq.size());
}

inline RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  if (a.ambient != b.ambient) throw DomainError("cone ambient dimensions differ");
  RationalCone c;
  c.ambient = a.ambient;
  c.eq = a.eq;
  c.eq.insert(c.eq.end(), b.eq.begin(), b.eq.end());
  c.ineq = a.ineq;
  c.ineq.insert(c.ineq.end(), b.ineq.begin(), b.ineq.end());
  return canonicalize(c);
}

inline bool cone_contains(const RationalCone& c, const std::vector<Rat>& u) {
  for (const auto& r : c.eq)
    if (lin::dot_rat(r, u) != 0) return false;
  for (const auto& r : c.ineq)
    if (lin::dot_rat(r, u) < 0) return false;
  return true;
}

inline bool cone_contains(const RationalCone& c, const WeightVector& u) {
  return cone_contains(c, u.w);
}

inline bool is_origin_cone(const RationalCone& c) { return cone_dim(c) == 0; }

// Exact point in the relative interior, scaled to primitive integers.
// Throws OriginOnlyError for the zero cone.
inline std::vector<Rat> relative_interior_point(const RationalCone& cone) {
  RationalCone c = canonicalize(cone);
  const int n = c.ambient;
  std::vector<std::vector<Rat>> eq_rat;
  for (const auto& r : c.eq) eq_rat.emplace_back(r.begin(), r.end());
  std::vector<int> pivots;
  std::vector<std::vector<Rat>> rr = lin::rref(eq_rat, &pivots);
  std::vector<std::vector<Rat>> N = lin::nullspace(rr, pivots, n);
  const int k = static_cast<int>(N.size());
  if (k == 0) throw OriginOnlyError();

  std::vector<lin::Constraint> rows;
  for (const auto& b : c.ineq) {
    std::vector<Rat> row(k);
    for (int j = 0; j < k; ++j) row[j] = lin::dot_rat(b, N[j]);
    std::vector<Int> pr(k);
    Int lcm_den = 1;
    for (const Rat& x : row) lcm_den = lcm(lcm_den, denominator(x));
    for (int j = 0; j < k; ++j) pr[j] = numerator(row[j]) * (lcm_den / denominator(row[j]));
    rows.push_back(lin::Constraint{detail::scale_signed(pr), true});
  }
  std::vector<Rat> t = lin::strict_point(rows, k);
  std::vector<Rat> u(n, Rat(0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) u[i] += t[j] * N[j][i];
  // Verify and scale.
  for (const auto& r : c.eq)
    if (lin::dot_rat(r, u) != 0) throw DomainError("relative interior point failed equality");
  for (const auto& r : c.ineq)
    if (lin::dot_rat(r, u) <= 0) throw DomainError("relative interior point not strict");
  std::vector<Int> prim = primitive_vector(u);
  std::vector<Rat> out(prim.begin(), prim.end());
  // primitive_vector normalizes the leading sign; restore the original ray.
  bool flipped = false;
  for (int i = 0; i < n; ++i) {
    if (u[i] != 0) {
      flipped = (u[i] > 0) != (out[i] > 0);
      break;
    }
  }
  if (flipped)
    for (auto& x : out) x = -x;
  return out;
}

inline WeightVector relint_weight(const RationalCone& c) {
  if (cone_dim(c) == 0) return WeightVector{std::vector<Rat>(c.ambient, Rat(0))};
  WeightVector u;
  u.w = relative_interior_point(c);
  return u;
}

inline std::string cone_key(const RationalCone& cone) {
  RationalCone c = canonicalize(cone);
  std::string s = std::to_string(c.ambient) + "|E";
  for (const auto& r : c.eq) {
    for (const auto& x : r) s += x.str() + ",";
    s += ";";
  }
  s += "|I";
  for (const auto& r : c.ineq) {
    for (const auto& x : r) s += x.str() + ",";
    s += ";";
  }
  return s;
}

inline bool cone_equal(const RationalCone& a, const RationalCone& b) {
  return canonicalize(a) == canonicalize(b);
}

// Distinct facets (dimension-one-down faces).
inline std::vector<RationalCone> facets(const RationalCone& cone) {
  RationalCone c = canonicalize(cone);
  const int d = cone_dim(c);
  std::vector<RationalCone> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < c.ineq.size(); ++i) {
    RationalCone f = c;
    f.canonical = false;
    f.eq.push_back(c.ineq[i]);
    RationalCone k = canonicalize(f);
    if (cone_dim(k) != d - 1) continue;
    if (seen.insert(cone_key(k)).second) out.push_back(std::move(k));
  }
  return out;
}

// All faces including the cone itself, down to (and including) dimension 0
// when the cone is pointed.
inline std::vector<RationalCone> all_faces(const RationalCone& cone) {
  RationalCone c = canonicalize(cone);
  std::map<std::string, RationalCone> acc;
  std::vector<RationalCone> queue{c};
  acc.emplace(cone_key(c), c);
  while (!queue.empty()) {
    RationalCone cur = queue.back();
    queue.pop_back();
    for (RationalCone& f : facets(cur)) {
      std::string key = cone_key(f);
      if (acc.emplace(key, f).second) queue.push_back(std::move(f));
    }
  }
  std::vector<RationalCone> out;
  for (auto& [k, v] : acc) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const RationalCone& a, const RationalCone& b) {
    int da = a.ambient - static_cast<int>(a.eq.size());
    int db = b.ambient - static_cast<int>(b.eq.size());
    if (da != db) return da < db;
    if (a.eq != b.eq) return a.eq < b.eq;
    return a.ineq < b.ineq;
  });
  return out;
}

// Primitive generators of the one-dimensional faces.
inline std::vector<std::vector<Int>> cone_rays(const RationalCone& cone) {
  std::vector<std::vector<Int>> rays;
  std::set<std::vector<Int>> seen;
  for (const RationalCone& f : all_faces(cone)) {
    if (cone_dim(f) != 1) continue;
    std::vector<Rat> p = relative_interior_point(f);
    std::vector<Int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = numerator(p[i]);
    if (seen.insert(r).second) rays.push_back(std::move(r));
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

}  // namespace loctrop
