#pragma once

#include <random>
#include <set>
#include <vector>

#include "loctrop/cone.hpp"
#include "loctrop/core.hpp"
#include "loctrop/staircase.hpp"

namespace loctrop {

struct NotBivariateError : DomainError {
  NotBivariateError() : DomainError("operation requires exactly two variables") {}
};

struct GridSpec {
  int max_denominator = 8;
  int box_degree = 8;     // lattice box for brute-force staircases
  int sample_count = 200;
  unsigned long long seed = 0;
};

// ---------------------------------------------------------------------------
// Brute-force staircase over a lattice box

inline Staircase brute_staircase(const std::vector<ExponentVector>& s, int box) {
  Staircase out;
  if (s.empty()) return out;
  const int n = s.front().size();
  for (const ExponentVector& p : s)
    for (int i = 0; i < n; ++i)
      if (p[i] > box) throw DomainError("staircase point outside the box");

  // mark[p] = p lies in S + N^n
  std::vector<int> dims(n, box + 1);
  auto index_of = [&](const std::vector<int>& p) {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * (box + 1) + p[i];
    return idx;
  };
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= box + 1;
  std::vector<char> mark(total, 0);
  for (const ExponentVector& p : s) mark[index_of(p.e)] = 1;

  std::vector<int> p(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int i = n - 1; i >= 0; --i) {
      p[i] = static_cast<int>(rem % (box + 1));
      rem /= (box + 1);
    }
    if (!mark[flat]) {
      for (int i = 0; i < n && !mark[flat]; ++i) {
        if (p[i] == 0) continue;
        --p[i];
        if (mark[index_of(p)]) mark[flat] = 1;
        ++p[i];
      }
    }
  }
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (!mark[flat]) continue;
    std::size_t rem = flat;
    for (int i = n - 1; i >= 0; --i) {
      p[i] = static_cast<int>(rem % (box + 1));
      rem /= (box + 1);
    }
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if (p[i] == 0) continue;
      --p[i];
      if (mark[index_of(p)]) minimal = false;
      ++p[i];
    }
    if (minimal) out.generators.push_back(ExponentVector{p});
  }
  std::sort(out.generators.begin(), out.generators.end(), lex_less);
  for (int i = 0; i < n; ++i) out.ambient_coords.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Global min-twice over the full support (no staircase shortcut)

inline bool global_min_twice(const Series& f, const WeightVector& w) {
  if (f.is_zero()) return false;
  Rat best = dot(w, f.terms[0].exp);
  for (const Term& t : f.terms) best = std::min(best, dot(w, t.exp));
  int hits = 0;
  for (const Term& t : f.terms)
    if (dot(w, t.exp) == best) ++hits;
  return hits >= 2;
}

// ---------------------------------------------------------------------------
// Newton polygon rays of a plane curve germ

// Inward normals (both entries positive, primitive) of the compact lower
// edges of the Newton polygon of f: the classical order directions of the
// Puiseux branches through the origin.
inline std::vector<std::vector<Int>> newton_polygon_rays(const Series& f) {
  if (f.nvars != 2) throw NotBivariateError();
  if (!f.is_exact()) throw DomainError("Newton polygon oracle needs an exact polynomial");
  if (f.is_zero()) throw ZeroSeriesError();
  for (const Term& t : f.terms)
    if (t.exp.total_degree() == 0)
      throw DomainError("curve must pass through the origin");

  std::set<std::vector<Int>> rays;
  const auto sup = support(f);
  for (std::size_t i = 0; i < sup.size(); ++i)
    for (std::size_t j = i + 1; j < sup.size(); ++j) {
      const ExponentVector& a = sup[i];
      const ExponentVector& b = sup[j];
      long dx = b[0] - a[0], dy = b[1] - a[1];
      // normal candidates to the segment; keep the strictly positive one
      long nx = dy, ny = -dx;
      if (!(nx > 0 && ny > 0)) {
        nx = -dy;
        ny = dx;
      }
      if (!(nx > 0 && ny > 0)) continue;
      Int va = Int(nx) * a[0] + Int(ny) * a[1];
      bool on_hull = true;
      for (const ExponentVector& c : sup)
        if (Int(nx) * c[0] + Int(ny) * c[1] < va) {
          on_hull = false;
          break;
        }
      if (on_hull) rays.insert(primitive_vector(std::vector<Int>{Int(nx), Int(ny)}));
    }
  return std::vector<std::vector<Int>>(rays.begin(), rays.end());
}

// ---------------------------------------------------------------------------
// Cone-wide homogeneity via the 1-skeleton

inline bool homogeneity_check(const Series& h, const RationalCone& cone) {
  if (h.is_zero() || h.is_monomial()) return true;
  for (const auto& ray : cone_rays(cone)) {
    std::vector<Rat> r(ray.begin(), ray.end());
    WeightVector u{r};
    Rat v = dot(u, h.terms[0].exp);
    for (const Term& t : h.terms)
      if (dot(u, t.exp) != v) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Deterministic sampling (mt19937_64 is fully specified by the standard; all
// draws go through explicit modulo so results are platform-stable)

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Rat random_positive_rational(std::mt19937_64& rng, int max_num = 24, int max_den = 8) {
  return Rat(rand_int(rng, 1, max_num), rand_int(rng, 1, max_den));
}

// A random weight in the open stratum.
inline WeightVector random_stratum_weight(std::mt19937_64& rng, const Stratum& s) {
  WeightVector u;
  u.w.assign(s.nvars, Rat(0));
  for (int i = 0; i < s.nvars; ++i)
    if (!s.forces_zero(i)) u.w[i] = random_positive_rational(rng);
  return u;
}

inline WeightVector random_local_weight(std::mt19937_64& rng, int n) {
  auto strata = enumerate_strata(n);
  const Stratum& s = strata[rng() % strata.size()];
  return random_stratum_weight(rng, s);
}

// Random series with >= 2 terms, distinct exponents, coefficients in +-1..9.
inline Series random_series(std::mt19937_64& rng, int n, int max_degree, int max_terms,
                            std::optional<int> trunc) {
  for (;;) {
    int k = rand_int(rng, 2, std::max(2, max_terms));
    std::vector<Term> raw;
    for (int i = 0; i < k; ++i) {
      ExponentVector e = zero_exponent(n);
      int budget = max_degree;
      for (int j = 0; j < n; ++j) {
        e.e[j] = rand_int(rng, 0, budget);
        budget -= e.e[j];
      }
      Rat c(rand_int(rng, 1, 9) * (rng() % 2 ? 1 : -1));
      raw.push_back(Term{c, e});
    }
    Series f = Series::make(n, trunc, raw);
    if (f.term_count() >= 2) return f;
  }
}

inline std::vector<Series> random_ideal(std::mt19937_64& rng, int n, int max_degree,
                                        int max_gens, int max_terms) {
  int g = rand_int(rng, 1, max_gens);
  std::vector<Series> out;
  for (int i = 0; i < g; ++i)
    out.push_back(random_series(rng, n, max_degree, max_terms, std::nullopt));
  return out;
}

// All grid weights with entries p/q, q <= max_den, 0 <= p/q <= box.
inline std::vector<WeightVector> grid_points(int n, int max_den, int box = 1) {
  std::set<Rat> vals;
  for (int q = 1; q <= max_den; ++q)
    for (int p = 0; p <= box * q; ++p) vals.insert(Rat(p, q));
  std::vector<Rat> axis(vals.begin(), vals.end());
  std::vector<WeightVector> out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    WeightVector u;
    for (int i = 0; i < n; ++i) u.w.push_back(axis[idx[i]]);
    out.push_back(std::move(u));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == axis.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

}  // namespace loctrop
