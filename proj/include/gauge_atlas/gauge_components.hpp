#pragma once

// Components of the gauge group of a PU(r)-bundle P -> X through the
// mapping-torus correspondence: a class is the pair (parity, degree) read off
// from (t2, q4) of the mapping torus over S^1 x X.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gauge_atlas/bundle_classes.hpp"
#include "gauge_atlas/cohomology_model.hpp"
#include "gauge_atlas/error.hpp"
#include "gauge_atlas/number_theory.hpp"

namespace gauge_atlas {

/// pi_0 class of a gauge transformation.  `eta` lies in H^1(X, Z_r); `deg`
/// is the coordinate in H^3(X) = Z and is present iff X is a closed 3-manifold.
struct GaugeClass {
  int r = 2;
  CohClass eta;
  std::optional<std::int64_t> deg;

  friend bool operator==(const GaugeClass&, const GaugeClass&) = default;
};

inline const CohomologyModel& base_manifold(const BundleClass& p) {
  const auto* model = std::get_if<CohomologyModel>(&p.base);
  if (model == nullptr)
    throw Error(ErrorCode::invalid_argument, "gauge classes live on bundles over a closed manifold X");
  return *model;
}

inline GaugeClass make_gauge_class(const CohomologyModel& x, int r, std::vector<std::int64_t> eta,
                                   std::optional<std::int64_t> deg) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "r must be at least 2");
  if (static_cast<int>(eta.size()) != x.b1())
    throw Error(ErrorCode::invalid_argument, "eta needs b1 = " + std::to_string(x.b1()) + " coefficients");
  if (x.dimension() == 3 && !deg)
    throw Error(ErrorCode::invalid_argument, "deg is required on a closed 3-manifold");
  if (x.dimension() != 3 && deg)
    throw Error(ErrorCode::invalid_argument, "deg is only defined on closed 3-manifolds");
  return {r, CohClass::residue_class(1, std::move(eta), r), deg};
}

inline GaugeClass identity_class(const CohomologyModel& x, int r) {
  return make_gauge_class(x, r, std::vector<std::int64_t>(static_cast<std::size_t>(x.b1()), 0),
                          x.dimension() == 3 ? std::optional<std::int64_t>(0) : std::nullopt);
}

inline void check_compatible(const BundleClass& p, const GaugeClass& g) {
  const auto& x = base_manifold(p);
  if (g.r != p.r) throw Error(ErrorCode::rank_mismatch, "gauge class and bundle have different r");
  if (g.eta.degree != 1 || g.eta.modulus != g.r)
    throw Error(ErrorCode::ring_mismatch, "eta must be a degree-1 class over Z_r");
  x.check_shape(g.eta);
  if ((x.dimension() == 3) != g.deg.has_value())
    throw Error(ErrorCode::invalid_argument, "deg must be present exactly on closed 3-manifolds");
}

inline const CohClass& stored_lift(const BundleClass& p) {
  if (!p.t2_lift) throw Error(ErrorCode::missing_lift, "t2 has no stored integral lift");
  return *p.t2_lift;
}

/// Residue that deg must have mod r: <t2_lift cup eta_lift>[X].  The value
/// does not depend on the choice of either lift.
inline std::int64_t degree_residue(const BundleClass& p, const CohClass& eta) {
  const auto& x = base_manifold(p);
  return mod(x.cup_eval(stored_lift(p), canonical_lift(eta)), p.r);
}

inline bool is_admissible(const BundleClass& p, const GaugeClass& g) {
  check_compatible(p, g);
  if (base_manifold(p).dimension() != 3) return true;
  return mod(*g.deg, p.r) == degree_residue(p, g.eta);
}

/// The mapping torus P_u over S^1 x X of a transformation in class g:
/// t2 = (t2(P), eta) under the Kunneth splitting, q4 = 2 deg e.
inline BundleClass mapping_torus_class(const BundleClass& p, const GaugeClass& g) {
  check_compatible(p, g);
  const auto& x = base_manifold(p);
  const auto product = kunneth_model(x);
  const auto& lift = stored_lift(p);
  const auto t_lift = product.join({lift, canonical_lift(g.eta)});
  BundleClass q{p.r, product, mod_r_reduce(t_lift, p.r), t_lift, std::nullopt};
  if (x.dimension() == 3) {
    q.q4 = 2 * *g.deg;
    if (!woodward_check(q))
      throw Error(ErrorCode::woodward_violation,
                  "(eta, deg) is not realizable: the mapping torus violates the Pontryagin-square congruence");
  }
  return q;
}

/// Inverse of mapping_torus_class for a bundle Q on S^1 x X restricting to P.
inline GaugeClass gauge_class_from_torus(const BundleClass& q, const BundleClass& p) {
  const auto* product = std::get_if<ProductModel>(&q.base);
  if (product == nullptr) throw Error(ErrorCode::invalid_argument, "Q must live on S^1 x X");
  const auto& x = base_manifold(p);
  if (!(product->base() == x)) throw Error(ErrorCode::fiber_mismatch, "Q is not a bundle over S^1 x X");
  if (q.r != p.r) throw Error(ErrorCode::rank_mismatch, "Q and P have different r");
  const auto split = product->split(q.t2);
  if (split.base_part != p.t2)
    throw Error(ErrorCode::fiber_mismatch, "Q does not restrict to P on the fiber");
  GaugeClass g{p.r, split.ds_part, std::nullopt};
  if (x.dimension() == 3) {
    if (!q.q4) throw Error(ErrorCode::invalid_argument, "Q is missing q4");
    // H^4(X) = 0, so q4 is entirely its ds part.
    if (*q.q4 % 2 != 0)
      throw Error(ErrorCode::claim1_violation, "odd q4: not the mapping torus of a gauge transformation of P");
    g.deg = *q.q4 / 2;
  }
  return g;
}

enum class Pi0Kind { full_H1, congruence_subset };

constexpr std::string_view to_string(Pi0Kind k) {
  return k == Pi0Kind::full_H1 ? "full_H1" : "congruence_subset";
}

/// pi_0 of the gauge group as a subset of H^1(X, Z_r) (x Z on a closed
/// 3-manifold).  On a surface the parity injects pi_0 into H^1(X, Z_r) and
/// every class is realized; on a closed 3-manifold the image is the set of
/// (eta, deg) with deg = <t2_lift cup eta>[X] mod r.
struct Pi0Description {
  Pi0Kind kind;
  int r;
  CohomologyModel base;
  std::optional<CohClass> t2_lift;

  /// Order of the parity group H^1(X, Z_r) = Z_r^b1.
  [[nodiscard]] std::uint64_t parity_group_order() const {
    std::uint64_t n = 1;
    for (int i = 0; i < base.b1(); ++i) n *= static_cast<std::uint64_t>(r);
    return n;
  }

  [[nodiscard]] bool contains(const GaugeClass& g) const {
    if (g.r != r || g.eta.degree != 1 || g.eta.modulus != r) return false;
    if (static_cast<int>(g.eta.coefficients.size()) != base.b1()) return false;
    if (kind == Pi0Kind::full_H1) return !g.deg.has_value();
    if (!g.deg) return false;
    return mod(*g.deg, r) == mod(base.cup_eval(*t2_lift, canonical_lift(g.eta)), r);
  }
};

inline Pi0Description pi0_description(const BundleClass& p) {
  const auto& x = base_manifold(p);
  if (x.dimension() == 2) return {Pi0Kind::full_H1, p.r, x, p.t2_lift};
  return {Pi0Kind::congruence_subset, p.r, x, stored_lift(p)};
}

inline GaugeClass compose_classes(const GaugeClass& a, const GaugeClass& b) {
  if (a.r != b.r) throw Error(ErrorCode::rank_mismatch, "compose_classes: r mismatch");
  if (a.eta.coefficients.size() != b.eta.coefficients.size() || a.deg.has_value() != b.deg.has_value())
    throw Error(ErrorCode::invalid_argument, "compose_classes: classes live on different bases");
  auto eta = a.eta.coefficients;
  for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += b.eta.coefficients[i];
  GaugeClass out{a.r, CohClass::residue_class(1, std::move(eta), a.r), std::nullopt};
  if (a.deg) out.deg = *a.deg + *b.deg;
  return out;
}

inline GaugeClass inverse_class(const GaugeClass& g) {
  auto eta = g.eta.coefficients;
  for (auto& c : eta) c = -c;
  GaugeClass out{g.r, CohClass::residue_class(1, std::move(eta), g.r), std::nullopt};
  if (g.deg) out.deg = -*g.deg;
  return out;
}

/// g composed with itself k times (k < 0 composes the inverse).
inline GaugeClass compose_power(const GaugeClass& g, std::int64_t k) {
  const GaugeClass step = k < 0 ? inverse_class(g) : g;
  GaugeClass acc = compose_classes(g, inverse_class(g));
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) acc = compose_classes(acc, step);
  return acc;
}

struct GaugeReport {
  bool admissible;
  bool in_identity_component;
  /// eta = 0: lifts to an SU(r)-valued map, trivial on the 1-skeleton.
  bool eta_trivial;
  std::optional<bool> deg_divisible_by_r;
};

inline GaugeReport classify_gauge_class(const BundleClass& p, const GaugeClass& g) {
  if (!is_admissible(p, g))
    throw Error(ErrorCode::inadmissible, "gauge class violates the pi_0 congruence for this bundle");
  GaugeReport report{true, false, g.eta.is_zero(), std::nullopt};
  report.in_identity_component = report.eta_trivial && (!g.deg || *g.deg == 0);
  if (g.deg) {
    report.deg_divisible_by_r = *g.deg % p.r == 0;
    if (report.eta_trivial && !*report.deg_divisible_by_r)
      throw Error(ErrorCode::consistency_failure, "eta = 0 but deg is not divisible by r");
  }
  return report;
}

inline void require_closed_3manifold(const CohomologyModel& x, std::string_view what) {
  if (x.dimension() != 3) throw Error(ErrorCode::unsupported, std::string(what) + " needs a closed 3-manifold");
}

inline void check_degree_inputs(const CohomologyModel& x, const CohClass& c, const CohClass& sigma, int r) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "r must be at least 2");
  if (!c.integral() || c.degree != 2) throw Error(ErrorCode::ring_mismatch, "c must be an integral degree-2 class");
  if (!sigma.integral() || sigma.degree != 1)
    throw Error(ErrorCode::ring_mismatch, "sigma must be an integral degree-1 class");
  x.check_shape(c);
  x.check_shape(sigma);
}

/// A class of degree d = <sigma cup c>[X] with parity red_r(sigma), for the
/// bundle whose t2 lifts to c (c = c1 of the U(r) lift, sigma = PD[Sigma]).
inline GaugeClass exists_degree_d(const CohomologyModel& x, const CohClass& c, const CohClass& sigma, int r) {
  require_closed_3manifold(x, "exists_degree_d");
  check_degree_inputs(x, c, sigma, r);
  const std::int64_t d = x.cup_eval(sigma, c);
  return {r, mod_r_reduce(sigma, r), d};
}

struct DegreeOneClass {
  GaugeClass gauge;
  std::int64_t d;
  /// m d + n r = 1 with m in [0, r).
  std::int64_t m;
  std::int64_t n;
};

/// A degree-1 class with parity m red_r(sigma), where m d + n r = 1.
inline DegreeOneClass exists_degree_one(const CohomologyModel& x, const CohClass& c, const CohClass& sigma, int r) {
  require_closed_3manifold(x, "exists_degree_one");
  check_degree_inputs(x, c, sigma, r);
  const std::int64_t d = x.cup_eval(sigma, c);
  const auto bez = extended_gcd(d, r);
  if (bez.g != 1)
    throw Error(ErrorCode::degree_one_not_guaranteed,
                "degree-1 class not guaranteed: gcd(d, r) = " + std::to_string(bez.g));
  const std::int64_t m = mod(bez.x, r);
  const std::int64_t n = (1 - m * d) / r;
  auto eta = sigma.coefficients;
  for (auto& e : eta) e *= m;
  return {{r, CohClass::residue_class(1, std::move(eta), r), 1}, d, m, n};
}

/// Circle-valued map f: X -> S^1 presented by sigma = PD[Sigma] for a fiber
/// Sigma, a section loop gamma in H_1 (dual basis of H^1) with
/// <sigma, gamma> = 1, and d = t2(P)[Sigma] mod r.
struct FibrationData {
  CohClass sigma;
  std::vector<std::int64_t> gamma;
  std::int64_t d;
};

inline std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_argument, "vector length mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), std::int64_t{0});
}

inline void validate(const FibrationData& fib, const CohomologyModel& x) {
  require_closed_3manifold(x, "fibration data");
  if (!fib.sigma.integral() || fib.sigma.degree != 1)
    throw Error(ErrorCode::ring_mismatch, "sigma must be an integral degree-1 class");
  x.check_shape(fib.sigma);
  if (static_cast<int>(fib.gamma.size()) != x.b1())
    throw Error(ErrorCode::invalid_argument, "gamma needs b1 coordinates");
  if (dot(fib.sigma.coefficients, fib.gamma) != 1)
    throw Error(ErrorCode::invariant_violation, "section condition <sigma, gamma> = 1 fails");
}

/// The bundle whose t2 is Poincare dual to d [gamma].
inline BundleClass fibration_bundle(const CohomologyModel& x, const FibrationData& fib, int r) {
  validate(fib, x);
  auto c = x.poincare_dual_of_loop(fib.gamma);
  for (auto& v : c.coefficients) v *= mod(fib.d, r);
  return make_bundle(x, r, c);
}

struct GSigmaDecomposition {
  std::int64_t k;
  DegreeOneClass u1;
};

/// For g with parity vanishing on the fiber surface, the exponent k with
/// [g] = [u1]^k where u1 is the degree-1 class; verifies eta(g) = k eta(u1).
inline GSigmaDecomposition g_sigma_decompose(const GaugeClass& g, const FibrationData& fib, const BundleClass& p) {
  const auto& x = base_manifold(p);
  validate(fib, x);
  check_compatible(p, g);
  const int r = p.r;
  if (std::gcd(mod(fib.d, r), static_cast<std::int64_t>(r)) != 1)
    throw Error(ErrorCode::degree_one_not_guaranteed, "d is not a generator of Z_r");
  const std::int64_t d_p = mod(x.cup_eval(fib.sigma, stored_lift(p)), r);
  if (d_p != mod(fib.d, r))
    throw Error(ErrorCode::consistency_failure, "t2(P)[Sigma] differs from the fibration's d");
  const std::int64_t lambda = mod(dot(g.eta.coefficients, fib.gamma), r);
  for (std::size_t i = 0; i < g.eta.coefficients.size(); ++i)
    if (g.eta.coefficients[i] != mod(lambda * fib.sigma.coefficients[i], r))
      throw Error(ErrorCode::not_in_g_sigma, "parity does not vanish on the fiber surface");
  auto u1 = exists_degree_one(x, stored_lift(p), fib.sigma, r);
  const std::int64_t k = *g.deg;
  for (std::size_t i = 0; i < g.eta.coefficients.size(); ++i)
    if (g.eta.coefficients[i] != mod(k * u1.gauge.eta.coefficients[i], r))
      throw Error(ErrorCode::consistency_failure, "eta(g) != deg(g) * eta(u1): class is inadmissible");
  return {k, std::move(u1)};
}

inline bool generates_cyclic(std::int64_t value, int r) {
  return std::gcd(mod(value, r), static_cast<std::int64_t>(r)) == 1;
}

/// Hypothesis of the free-action statement for flat connections: t2(P)[X]
/// (surface) or t2(P)[Sigma] (3-manifold, sigma = PD[Sigma]) generates Z_r.
/// The conclusion is implied, not computed.
inline bool free_action_hypothesis(const BundleClass& p, const std::optional<CohClass>& sigma = std::nullopt) {
  const auto& x = base_manifold(p);
  if (x.dimension() == 2) return generates_cyclic(p.t2.coefficients.at(0), p.r);
  if (!sigma) throw Error(ErrorCode::invalid_argument, "a surface class sigma is required on a 3-manifold");
  return generates_cyclic(x.cup_eval(mod_r_reduce(*sigma, p.r), p.t2), p.r);
}

}  // namespace gauge_atlas
