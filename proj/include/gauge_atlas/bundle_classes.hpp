#pragma once

// Isomorphism classes of PU(r)-bundles over bases of dimension <= 4 through
// the invariants (t2, q4), the Pontryagin square on reductions of integral
// classes, and the congruence that relates q4 to t2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gauge_atlas/cohomology_model.hpp"
#include "gauge_atlas/error.hpp"
#include "gauge_atlas/number_theory.hpp"

namespace gauge_atlas {

using BaseSpace = std::variant<CohomologyModel, ProductModel>;

inline int dimension(const BaseSpace& base) {
  return std::visit([](const auto& m) { return m.dimension(); }, base);
}

inline int rank(const BaseSpace& base, int degree) {
  return std::visit([degree](const auto& m) { return m.rank(degree); }, base);
}

inline std::string base_name(const BaseSpace& base) {
  return std::visit([](const auto& m) { return std::string(m.name()); }, base);
}

/// A PU(r)-bundle isomorphism class.  `q4` is the coefficient of the positive
/// generator of H^4 and is present exactly when the base is 4-dimensional;
/// below dimension 4 the class q4 vanishes.
struct BundleClass {
  int r = 2;
  BaseSpace base;
  CohClass t2;
  std::optional<CohClass> t2_lift;
  std::optional<std::int64_t> q4;

  /// Isomorphism: equal (r, t2, q4) over the same base.  The lift is
  /// auxiliary data and does not take part.
  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.r == b.r && a.base == b.base && a.t2 == b.t2 && a.q4 == b.q4;
  }
};

/// Integral class with the residues of t as coefficients.  Every mod-r class
/// lifts in the torsion-free model, and this is the lift enumeration uses.
inline CohClass canonical_lift(const CohClass& t) {
  return CohClass::integral_class(t.degree, t.coefficients);
}

inline const ProductModel& require_product4(const BaseSpace& base, std::string_view what) {
  const auto* product = std::get_if<ProductModel>(&base);
  if (product == nullptr || product->dimension() != 4)
    throw Error(ErrorCode::unsupported, std::string(what) + ": base must be S^1 x (3-manifold)");
  return *product;
}

/// Coefficient of e in C t for t the reduction of t_lift; t_lift cup t_lift
/// (r even) or 2 t_lift cup t_lift (r odd), reduced mod 2r.
inline std::int64_t pontryagin_square_on_product(const ProductModel& model, const CohClass& t_lift, int r) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "r must be at least 2");
  if (model.dimension() != 4)
    throw Error(ErrorCode::unsupported, "pontryagin_square_on_product: base must be S^1 x (3-manifold)");
  if (!t_lift.integral())
    throw Error(ErrorCode::missing_lift, "Pontryagin square needs an integral lift of t2");
  if (t_lift.degree != 2)
    throw Error(ErrorCode::degree_mismatch, "Pontryagin square takes a degree-2 class");
  const std::int64_t square = model.cup_eval(t_lift, t_lift);
  const std::int64_t factor = (r % 2 == 0) ? 1 : 2;
  return mod(factor * square, 2 * static_cast<std::int64_t>(r));
}

/// Residue mod 2r that q4 must have for the given t2 lift.
inline std::int64_t woodward_target(const ProductModel& model, const CohClass& t2_lift, int r) {
  const std::int64_t ct = pontryagin_square_on_product(model, t2_lift, r);
  const std::int64_t two_r = 2 * static_cast<std::int64_t>(r);
  const std::int64_t factor = (r % 2 == 0) ? (r + 1) : (r + 1) / 2;
  return mod(factor * ct, two_r);
}

inline bool woodward_check(const ProductModel& model, const CohClass& t2_lift, std::int64_t q4, int r) {
  return mod(q4, 2 * static_cast<std::int64_t>(r)) == woodward_target(model, t2_lift, r);
}

inline bool woodward_check(const BundleClass& p) {
  const auto& model = require_product4(p.base, "woodward_check");
  if (!p.t2_lift) throw Error(ErrorCode::missing_lift, "woodward_check: t2 has no stored integral lift");
  if (!p.q4) throw Error(ErrorCode::invalid_argument, "woodward_check: q4 missing on a 4-dimensional base");
  return woodward_check(model, *p.t2_lift, *p.q4, p.r);
}

/// Validates the BundleClass invariants and throws the matching error.
inline void validate(const BundleClass& p) {
  if (p.r < 2) throw Error(ErrorCode::invalid_argument, "r must be at least 2");
  const int dim = dimension(p.base);
  if (p.t2.degree != 2 || p.t2.modulus != p.r)
    throw Error(ErrorCode::ring_mismatch, "t2 must be a degree-2 class over Z_r");
  if (static_cast<int>(p.t2.coefficients.size()) != rank(p.base, 2))
    throw Error(ErrorCode::invalid_argument, "t2 has the wrong number of coefficients for " + base_name(p.base));
  for (auto c : p.t2.coefficients)
    if (c < 0 || c >= p.r) throw Error(ErrorCode::invalid_argument, "t2 coefficients must be reduced mod r");
  if (p.t2_lift) {
    if (!p.t2_lift->integral() || p.t2_lift->degree != 2)
      throw Error(ErrorCode::ring_mismatch, "t2_lift must be an integral degree-2 class");
    if (mod_r_reduce(*p.t2_lift, p.r) != p.t2)
      throw Error(ErrorCode::invariant_violation, "t2_lift does not reduce to t2");
  }
  if (dim == 4) {
    if (!p.q4) throw Error(ErrorCode::invalid_argument, "q4 required on a 4-dimensional base");
    if (!woodward_check(p))
      throw Error(ErrorCode::woodward_violation, "(t2, q4) violates the Pontryagin-square congruence");
  } else if (p.q4) {
    throw Error(ErrorCode::invalid_argument, "q4 vanishes below dimension 4 and must not be stored");
  }
}

/// Bundle from an integral lift of t2 (and q4 on 4-dimensional bases).
inline BundleClass make_bundle(BaseSpace base, int r, const CohClass& t2_lift,
                               std::optional<std::int64_t> q4 = std::nullopt) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "r must be at least 2");
  if (!t2_lift.integral()) throw Error(ErrorCode::ring_mismatch, "t2_lift must be integral");
  BundleClass p{r, std::move(base), mod_r_reduce(t2_lift, r), t2_lift, q4};
  validate(p);
  return p;
}

struct QWindow {
  std::int64_t lo;
  std::int64_t hi;
};

inline constexpr std::uint64_t kMaxEnumeration = 20'000'000;

/// All bundle classes over `base`.  Below dimension 4 these are the elements
/// of H^2(base, Z_r); in dimension 4 they are the pairs (t, q) with q in the
/// window that satisfy the congruence.  Ordered lexicographically in the t
/// coordinates and then by q.
inline std::vector<BundleClass> enumerate_bundles(const BaseSpace& base, int r,
                                                  std::optional<QWindow> q4_window = std::nullopt) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "r must be at least 2");
  const int dim = dimension(base);
  if (dim > 4) throw Error(ErrorCode::unsupported, "dimension above 4");
  if (dim == 4 && !q4_window)
    throw Error(ErrorCode::missing_window, "a q4 window is required on a 4-dimensional base");
  if (q4_window && q4_window->lo > q4_window->hi)
    throw Error(ErrorCode::invalid_argument, "empty q4 window");

  const int n = rank(base, 2);
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::uint64_t>(r);
    if (count > kMaxEnumeration)
      throw Error(ErrorCode::enumeration_too_large, "H^2(base, Z_r) too large to enumerate");
  }

  std::vector<BundleClass> out;
  std::vector<std::int64_t> t(static_cast<std::size_t>(n), 0);
  for (std::uint64_t step = 0; step < count; ++step) {
    const auto t2 = CohClass::residue_class(2, t, r);
    const auto lift = canonical_lift(t2);
    if (dim < 4) {
      out.push_back({r, base, t2, lift, std::nullopt});
    } else {
      const auto& model = std::get<ProductModel>(base);
      const auto target = woodward_target(model, lift, r);
      for (std::int64_t q = q4_window->lo; q <= q4_window->hi; ++q)
        if (mod(q, 2 * static_cast<std::int64_t>(r)) == target) out.push_back({r, base, t2, lift, q});
    }
    // Odometer with the last coordinate fastest, i.e. lexicographic order.
    for (int i = n - 1; i >= 0; --i) {
      if (++t[static_cast<std::size_t>(i)] < r) break;
      t[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

enum class LiftType { SU_liftable, U_liftable, not_determined };

constexpr std::string_view to_string(LiftType t) {
  switch (t) {
    case LiftType::SU_liftable: return "SU_liftable";
    case LiftType::U_liftable: return "U_liftable";
    case LiftType::not_determined: return "not_determined";
  }
  return "not_determined";
}

/// SU(r) lift iff t2 = 0; U(r) lift iff t2 reduces from an integral class.
/// Every supported base is torsion-free, so every class is at least
/// U_liftable; not_determined is reserved for bases with torsion.
inline LiftType lift_type(const BundleClass& p) {
  if (p.t2.is_zero()) return LiftType::SU_liftable;
  return LiftType::U_liftable;
}

/// The bundle obtained by restricting a bundle on S^1 x X to {pt} x X.
inline BundleClass restrict_to_fiber(const BundleClass& q) {
  const auto* product = std::get_if<ProductModel>(&q.base);
  if (product == nullptr) throw Error(ErrorCode::invalid_argument, "restrict_to_fiber: base is not a product");
  BundleClass p{q.r, product->base(), product->restrict_to_fiber(q.t2), std::nullopt, std::nullopt};
  if (q.t2_lift) p.t2_lift = product->restrict_to_fiber(*q.t2_lift);
  return p;
}

}  // namespace gauge_atlas
