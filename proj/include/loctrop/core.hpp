#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "loctrop/rational.hpp"

namespace loctrop {

struct ZeroSeriesError : DomainError {
  ZeroSeriesError() : DomainError("operation undefined for the zero series") {}
};

struct NegativeEntryError : DomainError {
  NegativeEntryError() : DomainError("weight vector has a negative entry") {}
};

// ---------------------------------------------------------------------------
// Exponents

struct ExponentVector {
  std::vector<int> e;

  int size() const { return static_cast<int>(e.size()); }
  int operator[](int i) const { return e[i]; }
  int total_degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool operator==(const ExponentVector&) const = default;
};

inline bool lex_less(const ExponentVector& a, const ExponentVector& b) {
  return a.e < b.e;
}

// a <= b componentwise: x^a divides x^b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector c = a;
  for (std::size_t i = 0; i < c.e.size(); ++i) c.e[i] += b.e[i];
  return c;
}

inline ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector c = a;
  for (std::size_t i = 0; i < c.e.size(); ++i) c.e[i] -= b.e[i];
  return c;
}

inline ExponentVector exp_lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector c = a;
  for (std::size_t i = 0; i < c.e.size(); ++i) c.e[i] = std::max(c.e[i], b.e[i]);
  return c;
}

inline ExponentVector exp_min(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector c = a;
  for (std::size_t i = 0; i < c.e.size(); ++i) c.e[i] = std::min(c.e[i], b.e[i]);
  return c;
}

inline ExponentVector zero_exponent(int n) {
  return ExponentVector{std::vector<int>(n, 0)};
}

inline ExponentVector unit_exponent(int n, int i) {
  ExponentVector a = zero_exponent(n);
  a.e[i] = 1;
  return a;
}

// ---------------------------------------------------------------------------
// Weights and strata

struct WeightVector {
  std::vector<Rat> w;

  int size() const { return static_cast<int>(w.size()); }
  const Rat& operator[](int i) const { return w[i]; }
  bool operator==(const WeightVector&) const = default;

  bool in_local_weight_space() const {
    for (const Rat& x : w)
      if (x < 0) return false;
    return true;
  }
  bool strictly_positive() const {
    for (const Rat& x : w)
      if (x <= 0) return false;
    return true;
  }
  bool is_zero() const {
    for (const Rat& x : w)
      if (x != 0) return false;
    return true;
  }
};

inline WeightVector weight_from_ints(const std::vector<int>& v) {
  WeightVector u;
  for (int x : v) u.w.emplace_back(x);
  return u;
}

inline Rat dot(const WeightVector& u, const ExponentVector& a) {
  Rat s = 0;
  for (std::size_t i = 0; i < u.w.size(); ++i) s += u.w[i] * a.e[i];
  return s;
}

// lambda = the coordinates forced to zero (0-based, sorted).
struct Stratum {
  int nvars = 0;
  std::vector<int> zero;

  bool operator==(const Stratum&) const = default;

  bool is_maximal() const { return zero.empty(); }   // all u_i > 0
  bool is_origin() const { return static_cast<int>(zero.size()) == nvars; }
  int dim() const { return nvars - static_cast<int>(zero.size()); }

  bool forces_zero(int i) const {
    return std::binary_search(zero.begin(), zero.end(), i);
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars; ++i)
      if (!forces_zero(i)) s.push_back(i);
    return s;
  }
  // "0" for the maximal stratum, else concatenated 1-based indices, e.g. "12".
  std::string label() const {
    if (zero.empty()) return "0";
    std::string s;
    for (int i : zero) s += std::to_string(i + 1);
    return s;
  }
  // Does u lie in the open stratum U^lambda_loc?
  bool contains_open(const WeightVector& u) const {
    for (int i = 0; i < nvars; ++i) {
      bool z = forces_zero(i);
      if (z && u[i] != 0) return false;
      if (!z && u[i] <= 0) return false;
    }
    return true;
  }
};

inline Stratum stratum_of(const WeightVector& u) {
  if (!u.in_local_weight_space()) throw NegativeEntryError();
  Stratum s;
  s.nvars = u.size();
  for (int i = 0; i < u.size(); ++i)
    if (u[i] == 0) s.zero.push_back(i);
  return s;
}

// All 2^n strata ordered by (cardinality of zero set, lexicographic).
inline std::vector<Stratum> enumerate_strata(int n) {
  if (n < 1) throw DomainError("variable count must be >= 1");
  std::vector<Stratum> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Stratum s;
    s.nvars = n;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.zero.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.zero.size() != b.zero.size()) return a.zero.size() < b.zero.size();
    return a.zero < b.zero;
  });
  return out;
}

// A canonical interior sample of the stratum: 1 on the support, 0 on lambda.
inline WeightVector stratum_sample(const Stratum& s) {
  WeightVector u;
  u.w.assign(s.nvars, Rat(0));
  for (int i = 0; i < s.nvars; ++i)
    if (!s.forces_zero(i)) u.w[i] = 1;
  return u;
}

// ---------------------------------------------------------------------------
// Series

struct Term {
  Rat coeff;
  ExponentVector exp;
  bool operator==(const Term&) const = default;
};

// A finite term list over Q.  trunc_degree empty means the series IS the
// polynomial (EXACT); otherwise terms above the truncation degree are unknown.
struct Series {
  int nvars = 0;
  std::optional<int> trunc_degree;
  std::vector<Term> terms;  // sorted lex by exponent, nonzero coefficients

  bool is_exact() const { return !trunc_degree.has_value(); }
  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  int term_count() const { return static_cast<int>(terms.size()); }

  bool operator==(const Series&) const = default;

  static Series make(int nvars, std::optional<int> trunc,
                     std::vector<Term> raw) {
    Series f;
    f.nvars = nvars;
    f.trunc_degree = trunc;
    std::map<std::vector<int>, Rat> acc;
    for (auto& t : raw) {
      if (t.exp.size() != nvars)
        throw DomainError("exponent length does not match variable count");
      for (int x : t.exp.e)
        if (x < 0) throw DomainError("negative exponent");
      if (trunc && t.exp.total_degree() > *trunc)
        throw DomainError("term above the stated truncation degree");
      acc[t.exp.e] += t.coeff;
    }
    for (auto& [e, c] : acc)
      if (c != 0) f.terms.push_back(Term{c, ExponentVector{e}});
    return f;
  }

  static Series zero(int nvars, std::optional<int> trunc = std::nullopt) {
    return make(nvars, trunc, {});
  }
  static Series monomial(int nvars, Rat c, ExponentVector e) {
    return make(nvars, std::nullopt, {Term{std::move(c), std::move(e)}});
  }
  static Series one(int nvars) {
    return monomial(nvars, 1, zero_exponent(nvars));
  }
};

inline std::optional<int> combine_trunc(const Series& a, const Series& b) {
  if (a.is_exact() && b.is_exact()) return std::nullopt;
  if (a.is_exact()) return b.trunc_degree;
  if (b.is_exact()) return a.trunc_degree;
  return std::min(*a.trunc_degree, *b.trunc_degree);
}

inline Series add(const Series& a, const Series& b) {
  assert(a.nvars == b.nvars);
  auto trunc = combine_trunc(a, b);
  std::vector<Term> raw;
  for (const Term& t : a.terms)
    if (!trunc || t.exp.total_degree() <= *trunc) raw.push_back(t);
  for (const Term& t : b.terms)
    if (!trunc || t.exp.total_degree() <= *trunc) raw.push_back(t);
  return Series::make(a.nvars, trunc, std::move(raw));
}

inline Series scale(const Series& a, const Rat& c) {
  if (c == 0) return Series::zero(a.nvars, a.trunc_degree);
  Series f = a;
  for (Term& t : f.terms) t.coeff *= c;
  return f;
}

inline Series neg(const Series& a) { return scale(a, -1); }

inline Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

// a + c * x^d * b, the workhorse of division.
inline Series axpy(const Series& a, const Rat& c, const ExponentVector& d,
                   const Series& b) {
  auto trunc = combine_trunc(a, b);
  std::vector<Term> raw = a.terms;
  for (const Term& t : b.terms) {
    ExponentVector e = exp_add(t.exp, d);
    if (trunc && e.total_degree() > *trunc) continue;
    raw.push_back(Term{t.coeff * c, e});
  }
  if (trunc)
    std::erase_if(raw, [&](const Term& t) { return t.exp.total_degree() > *trunc; });
  return Series::make(a.nvars, trunc, std::move(raw));
}

inline Series mul(const Series& a, const Series& b) {
  auto trunc = combine_trunc(a, b);
  std::vector<Term> raw;
  for (const Term& s : a.terms)
    for (const Term& t : b.terms) {
      ExponentVector e = exp_add(s.exp, t.exp);
      if (trunc && e.total_degree() > *trunc) continue;
      raw.push_back(Term{s.coeff * t.coeff, e});
    }
  return Series::make(a.nvars, trunc, std::move(raw));
}

// ---------------------------------------------------------------------------
// Support, weights, initial forms

inline std::vector<ExponentVector> support(const Series& f) {
  std::vector<ExponentVector> s;
  s.reserve(f.terms.size());
  for (const Term& t : f.terms) s.push_back(t.exp);
  return s;
}

inline Rat weight_of(const Series& f, const WeightVector& u) {
  if (f.is_zero()) throw ZeroSeriesError();
  if (!u.in_local_weight_space()) throw NegativeEntryError();
  Rat best = dot(u, f.terms[0].exp);
  for (std::size_t i = 1; i < f.terms.size(); ++i)
    best = std::min(best, dot(u, f.terms[i].exp));
  return best;
}

struct InitialForm {
  Series body;
  WeightVector weight;
  Rat value;
  Stratum ring_tag;
  bool truncation_warning = false;
};

inline InitialForm initial_form(const Series& f, const WeightVector& u) {
  InitialForm out;
  out.value = weight_of(f, u);  // validates f != 0 and u >= 0
  out.weight = u;
  out.ring_tag = stratum_of(u);
  std::vector<Term> raw;
  for (const Term& t : f.terms)
    if (dot(u, t.exp) == out.value) raw.push_back(t);
  out.body = Series::make(f.nvars, f.trunc_degree, std::move(raw));
  // Zero-weight directions of a truncated series may hide unseen terms of the
  // same weight beyond the truncation degree.
  out.truncation_warning = !f.is_exact() && !stratum_of(u).is_maximal();
  return out;
}

// ---------------------------------------------------------------------------
// Printing

inline std::vector<std::string> default_var_names(int n) {
  static const char* short_names[] = {"x", "y", "z", "w"};
  std::vector<std::string> v;
  if (n <= 4)
    for (int i = 0; i < n; ++i) v.push_back(short_names[i]);
  else
    for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

inline std::string monomial_to_string(const ExponentVector& e,
                                      const std::vector<std::string>& vars) {
  std::string s;
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string series_to_string(const Series& f,
                                    const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const Term& t : f.terms) {
    Rat c = t.coeff;
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mono = monomial_to_string(t.exp, vars);
    if (c != 1 || mono == "1") {
      s += rat_to_string(c);
      if (mono != "1") s += "*" + mono;
    } else {
      s += mono;
    }
  }
  return s;
}

inline std::string series_to_string(const Series& f) {
  return series_to_string(f, default_var_names(f.nvars));
}

}  // namespace loctrop
