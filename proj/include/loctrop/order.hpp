#pragma once

#include <vector>

#include "loctrop/core.hpp"

namespace loctrop {

// Monomial orders as stacked weight rows plus a fixed tiebreak.
//
// Comparison: smaller row value means the more leading monomial (the min
// convention of local weights).  After all rows tie, total degree decides
// (ascending when `local_degree`, so 1 is largest; descending otherwise,
// giving graded global orders), and finally reverse lexicographic.
//
//   local u-order:   rows = {u},        local_degree = true
//   stacked w'+ew:   rows = {w', w},    local_degree = true
//   global grevlex:  rows = {},         local_degree = false
struct Order {
  int nvars = 0;
  std::vector<std::vector<Rat>> rows;
  bool local_degree = true;

  // +1: a leads b; -1: b leads a; 0 only when a == b.
  int compare(const ExponentVector& a, const ExponentVector& b) const {
    for (const auto& r : rows) {
      Rat wa = 0, wb = 0;
      for (int i = 0; i < nvars; ++i) {
        wa += r[i] * a[i];
        wb += r[i] * b[i];
      }
      if (wa != wb) return wa < wb ? 1 : -1;
    }
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) {
      if (local_degree) return da < db ? 1 : -1;
      return da > db ? 1 : -1;
    }
    for (int i = nvars - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  bool leads(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) > 0;
  }
};

inline Order local_order(const WeightVector& u) {
  Order o;
  o.nvars = u.size();
  o.rows = {u.w};
  o.local_degree = true;
  return o;
}

inline Order stacked_order(int nvars, std::vector<std::vector<Rat>> rows) {
  Order o;
  o.nvars = nvars;
  o.rows = std::move(rows);
  o.local_degree = true;
  return o;
}

inline Order global_grevlex(int nvars) {
  Order o;
  o.nvars = nvars;
  o.local_degree = false;
  return o;
}

// Appends a fresh variable t (index n) compared globally before everything
// else; used for ideal quotients by elimination.
inline Order elimination_order(const Order& base) {
  Order o;
  o.nvars = base.nvars + 1;
  std::vector<Rat> trow(o.nvars, Rat(0));
  trow[base.nvars] = -1;  // larger t power = more leading
  o.rows.push_back(std::move(trow));
  for (const auto& r : base.rows) {
    std::vector<Rat> row = r;
    row.push_back(0);
    o.rows.push_back(std::move(row));
  }
  o.local_degree = base.local_degree;
  return o;
}

inline std::size_t leading_index(const Series& f, const Order& ord) {
  if (f.is_zero()) throw ZeroSeriesError();
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.terms.size(); ++i)
    if (ord.leads(f.terms[i].exp, f.terms[best].exp)) best = i;
  return best;
}

inline const ExponentVector& leading_exponent(const Series& f, const Order& ord) {
  return f.terms[leading_index(f, ord)].exp;
}

inline const Rat& leading_coefficient(const Series& f, const Order& ord) {
  return f.terms[leading_index(f, ord)].coeff;
}

// Total degree gap between the polynomial and its leading monomial; the
// selection quantity that makes Mora division terminate.
inline int ecart(const Series& f, const Order& ord) {
  int deg = 0;
  for (const Term& t : f.terms) deg = std::max(deg, t.exp.total_degree());
  return deg - leading_exponent(f, ord).total_degree();
}

// Terms minimizing the weight rows lexicographically: the initial form of f
// with respect to a (possibly stacked) weight, ignoring the tiebreak.
inline Series initial_by_rows(const Series& f, const std::vector<std::vector<Rat>>& rows) {
  if (f.is_zero()) throw ZeroSeriesError();
  std::vector<char> alive(f.terms.size(), 1);
  for (const auto& r : rows) {
    WeightVector u;
    u.w = r;
    bool first = true;
    Rat best = 0;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      if (!alive[i]) continue;
      Rat v = dot(u, f.terms[i].exp);
      if (first || v < best) {
        best = v;
        first = false;
      }
    }
    for (std::size_t i = 0; i < f.terms.size(); ++i)
      if (alive[i] && dot(u, f.terms[i].exp) != best) alive[i] = 0;
  }
  std::vector<Term> raw;
  for (std::size_t i = 0; i < f.terms.size(); ++i)
    if (alive[i]) raw.push_back(f.terms[i]);
  return Series::make(f.nvars, f.trunc_degree, std::move(raw));
}

}  // namespace loctrop
