#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "loctrop/core.hpp"
#include "loctrop/fan.hpp"
#include "loctrop/staircase.hpp"

namespace loctrop {

struct EmptyTropicalPolynomialError : DomainError {
  EmptyTropicalPolynomialError() : DomainError("empty tropical polynomial") {}
};

// Min-plus polynomial: min_i (c_i + a_i . w).  Series over Q tropicalize with
// all coefficients 0; the general coefficient slot serves the oracle paths.
struct TropicalPolynomial {
  int nvars = 0;
  std::vector<std::pair<Rat, ExponentVector>> monomials;

  static TropicalPolynomial from_series(const Series& f) {
    TropicalPolynomial F;
    F.nvars = f.nvars;
    for (const Term& t : f.terms) F.monomials.emplace_back(Rat(0), t.exp);
    return F;
  }
  bool constant_coefficients() const {
    for (const auto& [c, e] : monomials)
      if (c != monomials[0].first) return false;
    return true;
  }
};

inline Rat trop_eval(const TropicalPolynomial& F, const WeightVector& w) {
  if (F.monomials.empty()) throw EmptyTropicalPolynomialError();
  Rat best = F.monomials[0].first + dot(w, F.monomials[0].second);
  for (std::size_t i = 1; i < F.monomials.size(); ++i)
    best = std::min(best, F.monomials[i].first + dot(w, F.monomials[i].second));
  return best;
}

inline int min_count(const TropicalPolynomial& F, const WeightVector& w) {
  Rat best = trop_eval(F, w);
  int k = 0;
  for (const auto& [c, e] : F.monomials)
    if (c + dot(w, e) == best) ++k;
  return k;
}

inline bool min_twice(const TropicalPolynomial& F, const WeightVector& w) {
  if (F.monomials.empty()) return false;
  return min_count(F, w) >= 2;
}

struct WitnessPair {
  ExponentVector a, b;
};

struct Certificate {
  enum class Kind { witness, groebner_cone, origin_convention };
  Kind kind = Kind::witness;
  std::vector<WitnessPair> pairs;  // one per generator on the witness path
  int groebner_cone_id = -1;
};

struct TropicalVarietyResult {
  int nvars = 0;
  std::vector<RationalCone> cones;        // canonical, sorted (dim, constraints)
  std::vector<Certificate> certificates;  // parallel to cones
  std::vector<Stratum> strata_touched;
  bool truncation_caveat = false;
  std::vector<std::string> warnings;
  FanValidation fan;
};

// Tie regions of a constant-coefficient tropical polynomial inside the closed
// stratum: for each unordered pair, the locus where both attain the minimum.
// Cones not meeting the open stratum are dropped.
inline std::vector<std::pair<RationalCone, WitnessPair>> hypersurface_fan(
    const TropicalPolynomial& F, const Stratum& lambda) {
  if (!F.constant_coefficients())
    throw DomainError("hypersurface fans need constant tropical coefficients");
  std::vector<std::pair<RationalCone, WitnessPair>> out;
  if (F.monomials.size() < 2) return out;
  const int n = F.nvars;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < F.monomials.size(); ++i)
    for (std::size_t j = i + 1; j < F.monomials.size(); ++j) {
      const ExponentVector& a = F.monomials[i].second;
      const ExponentVector& b = F.monomials[j].second;
      RationalCone c = stratum_closure_cone(lambda);
      c.eq.push_back(int_row(exp_sub(a, b).e));
      for (std::size_t k = 0; k < F.monomials.size(); ++k) {
        if (k == i || k == j) continue;
        c.ineq.push_back(int_row(exp_sub(F.monomials[k].second, a).e));
      }
      // Must meet the open stratum.
      std::vector<lin::Constraint> sys;
      for (const auto& e : c.eq) {
        sys.push_back(lin::Constraint{e, false});
        std::vector<Int> m(e);
        for (Int& x : m) x = -x;
        sys.push_back(lin::Constraint{m, false});
      }
      for (const auto& q : c.ineq) sys.push_back(lin::Constraint{q, false});
      for (int k = 0; k < n; ++k) {
        if (lambda.forces_zero(k)) continue;
        std::vector<Int> strict(n, Int(0));
        strict[k] = 1;
        sys.push_back(lin::Constraint{strict, true});
      }
      if (!lin::feasible(sys, n)) continue;
      RationalCone canon = canonicalize(c);
      if (seen.insert(cone_key(canon)).second)
        out.emplace_back(std::move(canon), WitnessPair{a, b});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise membership characterizations for a single series.

inline bool member_via_trop(const Series& f, const WeightVector& w) {
  if (f.is_zero()) throw ZeroSeriesError();
  return min_twice(TropicalPolynomial::from_series(f), w);
}

// Convention: a zero surrogate polynomial (the origin stratum) accepts every
// point of its stratum, matching V(<0>) = everything.
inline bool member_via_tilde(const Series& f, const WeightVector& w) {
  Series g = tilde_poly(f, stratum_of(w));
  if (g.is_zero()) return true;
  return min_twice(TropicalPolynomial::from_series(g), w);
}

inline bool member_via_hat(const Series& f, const WeightVector& w) {
  Series g = hat_poly(f, stratum_of(w));
  if (g.is_zero()) return true;
  return min_twice(TropicalPolynomial::from_series(g), w);
}

// ---------------------------------------------------------------------------
// Assembly

enum class OriginSemantics { definition, monomial_test };

namespace detail {

struct GeneratingCone {
  RationalCone cone;
  Certificate cert;
  Stratum stratum;
};

inline TropicalVarietyResult assemble_variety(int nvars,
                                              std::vector<GeneratingCone> gen,
                                              bool caveat,
                                              std::vector<std::string> warnings) {
  TropicalVarietyResult out;
  out.nvars = nvars;
  out.truncation_caveat = caveat;
  out.warnings = std::move(warnings);

  std::set<std::string> strata_seen;
  std::vector<RationalCone> raw;
  for (const auto& g : gen) {
    raw.push_back(g.cone);
    if (strata_seen.insert(g.stratum.label()).second) out.strata_touched.push_back(g.stratum);
  }
  out.fan = validate_fan(raw, nvars);
  if (!out.fan.ok) {
    out.warnings.push_back("cone collection failed fan validation");
    // Keep the raw cones for inspection.
    for (auto& c : raw) out.cones.push_back(canonicalize(c));
    out.certificates.resize(out.cones.size());
    return out;
  }
  out.cones = out.fan.fan.cones;
  out.certificates.resize(out.cones.size());
  for (std::size_t i = 0; i < out.cones.size(); ++i) {
    bool assigned = false;
    for (const auto& g : gen) {
      if (cone_equal(intersect(out.cones[i], g.cone), out.cones[i])) {
        out.certificates[i] = g.cert;
        assigned = true;
        break;
      }
    }
    if (!assigned && cone_dim(out.cones[i]) == 0) {
      out.certificates[i].kind = Certificate::Kind::origin_convention;
    }
  }
  return out;
}

}  // namespace detail

inline bool is_unit_series(const Series& f) {
  for (const Term& t : f.terms)
    if (t.exp.total_degree() == 0) return true;
  return false;
}

// T^h_loc(trop f): the min-twice locus, assembled stratum by stratum from the
// hat surrogates (the origin belongs iff the truncated support has >= 2 points).
inline TropicalVarietyResult local_trop_hypersurface(const Series& f) {
  if (f.is_zero()) throw ZeroSeriesError();
  std::vector<detail::GeneratingCone> gen;
  for (const Stratum& lam : enumerate_strata(f.nvars)) {
    if (lam.is_origin()) continue;
    Series h = hat_poly(f, lam);
    if (h.is_zero()) continue;
    for (auto& [cone, pair] : hypersurface_fan(TropicalPolynomial::from_series(h), lam)) {
      Certificate cert;
      cert.kind = Certificate::Kind::witness;
      cert.pairs = {pair};
      gen.push_back({std::move(cone), std::move(cert), lam});
    }
  }
  if (f.term_count() >= 2) {
    Stratum origin;
    origin.nvars = f.nvars;
    for (int i = 0; i < f.nvars; ++i) origin.zero.push_back(i);
    Certificate cert;
    cert.kind = Certificate::Kind::witness;
    cert.pairs = {WitnessPair{f.terms[0].exp, f.terms[1].exp}};
    gen.push_back({canonicalize(stratum_closure_cone(origin)), std::move(cert), origin});
  }
  return detail::assemble_variety(f.nvars, std::move(gen), !f.is_exact(), {});
}

// T_loc(<f>) for a principal ideal.
//   definition:    Def-style construction; the origin joins unconditionally via
//                  the zero surrogate of the origin stratum.
//   monomial_test: each cone is kept only when the initial form at its
//                  relative interior is not a monomial times a unit, which is
//                  the ideal-level no-monomial test for principal ideals.
inline TropicalVarietyResult principal_tropical_variety(const Series& f,
                                                        OriginSemantics sem) {
  if (f.is_zero()) throw ZeroSeriesError();
  std::vector<std::string> warnings;
  if (is_unit_series(f))
    warnings.push_back("generator is a unit: the ideal is the whole ring");

  std::vector<detail::GeneratingCone> gen;
  for (const Stratum& lam : enumerate_strata(f.nvars)) {
    if (lam.is_origin()) continue;
    Series h = hat_poly(f, lam);
    if (h.is_zero()) continue;
    for (auto& [cone, pair] : hypersurface_fan(TropicalPolynomial::from_series(h), lam)) {
      if (sem == OriginSemantics::monomial_test) {
        WeightVector u = relint_weight(cone);
        if (is_monomial_times_unit(initial_form(f, u).body)) continue;
      }
      Certificate cert;
      cert.kind = Certificate::Kind::witness;
      cert.pairs = {pair};
      gen.push_back({std::move(cone), std::move(cert), lam});
    }
  }
  bool origin_in = sem == OriginSemantics::definition ? true : !is_monomial_times_unit(f);
  if (origin_in) {
    Stratum origin;
    origin.nvars = f.nvars;
    for (int i = 0; i < f.nvars; ++i) origin.zero.push_back(i);
    Certificate cert;
    cert.kind = Certificate::Kind::origin_convention;
    gen.push_back({canonicalize(stratum_closure_cone(origin)), std::move(cert), origin});
  }
  return detail::assemble_variety(f.nvars, std::move(gen), !f.is_exact(), std::move(warnings));
}

// Stratum-wise intersection of the generators' hypersurfaces (a prevariety,
// not the variety).  Definition semantics admits the origin unconditionally;
// the monomial test asks every generator for a tie at 0.
inline TropicalVarietyResult prevariety(const std::vector<Series>& gens,
                                        OriginSemantics sem = OriginSemantics::definition) {
  if (gens.empty()) throw DomainError("prevariety needs at least one generator");
  const int n = gens[0].nvars;
  bool caveat = false;
  for (const Series& g : gens) {
    if (g.is_zero()) throw ZeroSeriesError();
    if (g.nvars != n) throw DomainError("generators live in different rings");
    caveat = caveat || !g.is_exact();
  }

  std::vector<detail::GeneratingCone> out_gen;
  for (const Stratum& lam : enumerate_strata(n)) {
    if (lam.is_origin()) continue;
    std::vector<std::vector<std::pair<RationalCone, WitnessPair>>> per_gen;
    bool stratum_empty = false;
    for (const Series& g : gens) {
      Series h = hat_poly(g, lam);
      if (h.is_zero()) {
        stratum_empty = true;
        break;
      }
      auto fan = hypersurface_fan(TropicalPolynomial::from_series(h), lam);
      if (fan.empty()) {
        stratum_empty = true;
        break;
      }
      per_gen.push_back(std::move(fan));
    }
    if (stratum_empty) continue;

    // Common refinement over one tie cone per generator.
    std::set<std::string> seen;
    std::vector<std::size_t> idx(per_gen.size(), 0);
    for (;;) {
      RationalCone meet = per_gen[0][idx[0]].first;
      std::vector<WitnessPair> pairs{per_gen[0][idx[0]].second};
      bool dead = false;
      for (std::size_t g = 1; g < per_gen.size() && !dead; ++g) {
        meet = intersect(meet, per_gen[g][idx[g]].first);
        pairs.push_back(per_gen[g][idx[g]].second);
        dead = cone_dim(meet) == 0;
      }
      if (!dead) {
        // Keep only pieces meeting the open stratum.
        WeightVector u = relint_weight(meet);
        if (lam.contains_open(u) && seen.insert(cone_key(meet)).second) {
          Certificate cert;
          cert.kind = Certificate::Kind::witness;
          cert.pairs = std::move(pairs);
          out_gen.push_back({std::move(meet), std::move(cert), lam});
        }
      }
      std::size_t g = 0;
      while (g < idx.size() && ++idx[g] == per_gen[g].size()) idx[g++] = 0;
      if (g == idx.size()) break;
    }
  }

  bool origin_in = true;
  if (sem == OriginSemantics::monomial_test)
    for (const Series& g : gens) origin_in = origin_in && g.term_count() >= 2;
  if (origin_in) {
    Stratum origin;
    origin.nvars = n;
    for (int i = 0; i < n; ++i) origin.zero.push_back(i);
    Certificate cert;
    cert.kind = Certificate::Kind::origin_convention;
    out_gen.push_back({canonicalize(stratum_closure_cone(origin)), std::move(cert), origin});
  }
  return detail::assemble_variety(n, std::move(out_gen), caveat, {});
}

// Pointwise membership in an assembled result.
inline bool variety_contains(const TropicalVarietyResult& r, const WeightVector& w) {
  return cones_contain(r.cones, w);
}

}  // namespace loctrop
