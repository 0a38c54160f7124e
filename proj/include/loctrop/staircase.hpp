#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "loctrop/core.hpp"

namespace loctrop {

// Minimal generators of S + N^k for a finite S.  `ambient` records which
// coordinates of the original ring survive a projection (identity for E_0).
struct Staircase {
  std::vector<ExponentVector> generators;  // sorted lex, pairwise incomparable
  std::vector<int> ambient_coords;
};

// Sort by total degree, then keep points not dominated by a retained one.
// Anything dominated has degree >= its dominator, so one forward pass works.
inline Staircase minimal_staircase(std::vector<ExponentVector> s) {
  std::sort(s.begin(), s.end(), [](const ExponentVector& a, const ExponentVector& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return lex_less(a, b);
  });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  Staircase out;
  for (const ExponentVector& p : s) {
    bool dominated = false;
    for (const ExponentVector& g : out.generators)
      if (divides(g, p)) {
        dominated = true;
        break;
      }
    if (!dominated) out.generators.push_back(p);
  }
  std::sort(out.generators.begin(), out.generators.end(), lex_less);
  if (!s.empty())
    for (int i = 0; i < s.front().size(); ++i) out.ambient_coords.push_back(i);
  return out;
}

inline ExponentVector project_exponent(const ExponentVector& a, const Stratum& lambda) {
  ExponentVector p;
  for (int i = 0; i < a.size(); ++i)
    if (!lambda.forces_zero(i)) p.e.push_back(a[i]);
  return p;
}

// Fibers of the projected staircase: one class per generator of
// E_lambda(phi_lambda(f)), each a subset of Supp(f).
struct StratumClasses {
  Stratum stratum;
  std::vector<ExponentVector> projected_generators;     // in N^(n-|lambda|)
  std::vector<std::vector<ExponentVector>> classes;     // parallel to above
  bool complete_only_if_tail_dominated = false;         // truncated input caveat
};

inline StratumClasses stratum_staircase(const Series& f, const Stratum& lambda) {
  if (f.is_zero()) throw ZeroSeriesError();
  StratumClasses out;
  out.stratum = lambda;
  out.complete_only_if_tail_dominated = !f.is_exact();

  if (lambda.is_origin()) {
    // Single class: the whole support (the projection has one point).
    out.projected_generators.push_back(ExponentVector{});
    out.classes.push_back(support(f));
    return out;
  }

  std::vector<ExponentVector> projected;
  for (const Term& t : f.terms) projected.push_back(project_exponent(t.exp, lambda));
  Staircase stair = minimal_staircase(projected);

  for (const ExponentVector& beta : stair.generators) {
    std::vector<ExponentVector> fiber;
    for (const Term& t : f.terms)
      if (project_exponent(t.exp, lambda) == beta) fiber.push_back(t.exp);
    std::sort(fiber.begin(), fiber.end(), lex_less);
    out.projected_generators.push_back(beta);
    out.classes.push_back(std::move(fiber));
  }
  return out;
}

// f~^lambda: the terms of f supported on E_lambda(f); zero for the origin stratum.
inline Series tilde_poly(const Series& f, const Stratum& lambda) {
  if (lambda.is_origin()) return Series::zero(f.nvars, f.trunc_degree);
  if (f.is_zero()) return f;
  StratumClasses sc = stratum_staircase(f, lambda);
  std::vector<Term> raw;
  for (const auto& cls : sc.classes)
    for (const ExponentVector& a : cls)
      for (const Term& t : f.terms)
        if (t.exp == a) raw.push_back(t);
  return Series::make(f.nvars, f.trunc_degree, std::move(raw));
}

// f^^lambda: at most two members per class, the lexicographically smallest
// two (the paper only asks for some choice; this one is reproducible).
inline Series hat_poly(const Series& f, const Stratum& lambda) {
  if (lambda.is_origin()) return Series::zero(f.nvars, f.trunc_degree);
  if (f.is_zero()) return f;
  StratumClasses sc = stratum_staircase(f, lambda);
  std::vector<Term> raw;
  for (const auto& cls : sc.classes) {
    std::size_t keep = std::min<std::size_t>(2, cls.size());
    for (std::size_t i = 0; i < keep; ++i)
      for (const Term& t : f.terms)
        if (t.exp == cls[i]) raw.push_back(t);
  }
  return Series::make(f.nvars, f.trunc_degree, std::move(raw));
}

// E_0(f) as a staircase of the full support.
inline Staircase series_staircase(const Series& f) {
  if (f.is_zero()) throw ZeroSeriesError();
  return minimal_staircase(support(f));
}

// f = x^m * unit in the graded ring iff the componentwise minimum of the
// support is itself a support point.  Weight-homogeneity of initial forms
// makes the unit cofactor live in the zero-weight variables automatically.
inline bool is_monomial_times_unit(const Series& f) {
  if (f.is_zero()) return false;
  ExponentVector m = f.terms[0].exp;
  for (const Term& t : f.terms) m = exp_min(m, t.exp);
  for (const Term& t : f.terms)
    if (t.exp == m) return true;
  return false;
}

}  // namespace loctrop
