#pragma once

// Chern-Weil integrals on flat tori [0,1)^dim sampled on N^dim periodic grids.
// Connection components are continuum samples A_mu(x) in su(r); derivatives
// are centered periodic differences, so every discrete quantity here is
// second-order accurate on smooth data.  Spatial integrals are periodic
// trapezoidal sums with compensated accumulation in lexicographic order.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "gauge_atlas/error.hpp"
#include "gauge_atlas/lie_numerics.hpp"

namespace gauge_atlas::lattice {

using lie::Complex;
using lie::ComplexMatrix;

class TorusGrid {
 public:
  TorusGrid(int dim, int n) : dim_(dim), n_(n) {
    if (dim < 1 || dim > 4) throw Error(ErrorCode::invalid_argument, "torus dimension must be 1..4");
    if (n < 4) throw Error(ErrorCode::invalid_argument, "grid needs at least 4 points per axis");
    size_ = 1;
    for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(n);
    std::size_t stride = 1;
    for (int a = dim - 1; a >= 0; --a) {
      strides_[static_cast<std::size_t>(a)] = stride;
      stride *= static_cast<std::size_t>(n);
    }
  }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] double spacing() const { return 1.0 / n_; }
  [[nodiscard]] double cell_volume() const { return std::pow(spacing(), dim_); }

  [[nodiscard]] int coord(std::size_t index, int axis) const {
    return static_cast<int>((index / strides_[static_cast<std::size_t>(axis)]) % static_cast<std::size_t>(n_));
  }

  [[nodiscard]] double position(std::size_t index, int axis) const { return coord(index, axis) * spacing(); }

  /// Index of the point `step` sites away along `axis`, wrapping periodically.
  [[nodiscard]] std::size_t shift(std::size_t index, int axis, int step) const {
    const int c = coord(index, axis);
    int next = (c + step) % n_;
    if (next < 0) next += n_;
    const auto stride = strides_[static_cast<std::size_t>(axis)];
    return index - static_cast<std::size_t>(c) * stride + static_cast<std::size_t>(next) * stride;
  }

  friend bool operator==(const TorusGrid& a, const TorusGrid& b) { return a.dim_ == b.dim_ && a.n_ == b.n_; }

 private:
  int dim_;
  int n_;
  std::size_t size_ = 0;
  std::array<std::size_t, 4> strides_{};
};

/// Per-point samples of one matrix-valued function on the grid.
using MatrixSamples = std::vector<ComplexMatrix>;

struct ConnectionField {
  TorusGrid grid;
  int rank;
  std::vector<MatrixSamples> components;  // [axis][point]

  static ConnectionField zero(const TorusGrid& grid, int rank) {
    return {grid, rank,
            std::vector<MatrixSamples>(static_cast<std::size_t>(grid.dim()),
                                       MatrixSamples(grid.size(), ComplexMatrix::Zero(rank, rank)))};
  }

  void validate(double tol = 1e-10) const {
    if (static_cast<int>(components.size()) != grid.dim())
      throw Error(ErrorCode::grid_mismatch, "connection needs one component per axis");
    for (const auto& comp : components) {
      if (comp.size() != grid.size()) throw Error(ErrorCode::grid_mismatch, "connection component has wrong size");
      for (const auto& m : comp)
        if (m.rows() != rank || !lie::is_su_matrix(m, tol))
          throw Error(ErrorCode::invalid_element, "connection sample is not in su(r)");
    }
  }
};

/// Number of index pairs mu < nu in `dim` dimensions, and their flat index.
constexpr int pair_count(int dim) { return dim * (dim - 1) / 2; }
constexpr int pair_index(int mu, int nu, int dim) {
  // Lexicographic over mu < nu.
  return mu * dim - mu * (mu + 1) / 2 + (nu - mu - 1);
}

/// Curvature 2-form.  Only the mu < nu components are stored, so
/// F_{mu nu} = -F_{nu mu} holds exactly.
struct CurvatureField {
  TorusGrid grid;
  int rank;
  std::vector<MatrixSamples> upper;  // [pair_index(mu, nu)][point]

  [[nodiscard]] ComplexMatrix component(int mu, int nu, std::size_t point) const {
    if (mu == nu) return ComplexMatrix::Zero(rank, rank);
    if (mu < nu) return upper[static_cast<std::size_t>(pair_index(mu, nu, grid.dim()))][point];
    return -upper[static_cast<std::size_t>(pair_index(nu, mu, grid.dim()))][point];
  }

  [[nodiscard]] const ComplexMatrix& upper_component(int mu, int nu, std::size_t point) const {
    return upper[static_cast<std::size_t>(pair_index(mu, nu, grid.dim()))][point];
  }

  /// Largest |tr F_{mu nu}| over the grid.
  [[nodiscard]] double max_trace() const {
    double worst = 0.0;
    for (const auto& comp : upper)
      for (const auto& m : comp) worst = std::max(worst, std::abs(m.trace()));
    return worst;
  }
};

struct GaugeMapField {
  TorusGrid grid;
  int rank;
  MatrixSamples samples;

  static GaugeMapField identity(const TorusGrid& grid, int rank) {
    return {grid, rank, MatrixSamples(grid.size(), ComplexMatrix::Identity(rank, rank))};
  }

  /// Largest deviation from U U* = Id and det U = 1.
  [[nodiscard]] double max_unitarity_defect() const {
    double worst = 0.0;
    for (const auto& u : samples) {
      worst = std::max(worst, (u * u.adjoint() - ComplexMatrix::Identity(rank, rank)).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(u.determinant() - 1.0));
    }
    return worst;
  }

  void validate(double tol = 1e-10) const {
    if (samples.size() != grid.size()) throw Error(ErrorCode::grid_mismatch, "gauge map has wrong size");
    if (max_unitarity_defect() > tol) throw Error(ErrorCode::invalid_element, "gauge map sample is not in SU(r)");
  }
};

/// Pointwise product (u v)(x) = u(x) v(x).
inline GaugeMapField multiply(const GaugeMapField& u, const GaugeMapField& v) {
  if (!(u.grid == v.grid) || u.rank != v.rank) throw Error(ErrorCode::grid_mismatch, "gauge maps differ in grid or rank");
  GaugeMapField out{u.grid, u.rank, MatrixSamples(u.samples.size())};
  for (std::size_t p = 0; p < u.samples.size(); ++p) out.samples[p] = u.samples[p] * v.samples[p];
  return out;
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

inline ComplexMatrix central_difference(const MatrixSamples& f, const TorusGrid& grid, std::size_t point, int axis) {
  const double inv = 0.5 / grid.spacing();
  return inv * (f[grid.shift(point, axis, 1)] - f[grid.shift(point, axis, -1)]);
}

/// F_{mu nu} = d_mu A_nu - d_nu A_mu + [A_mu, A_nu].
inline CurvatureField curvature_from_connection(const ConnectionField& a) {
  const auto& grid = a.grid;
  const int dim = grid.dim();
  CurvatureField f{grid, a.rank, std::vector<MatrixSamples>(static_cast<std::size_t>(pair_count(dim)))};
  for (int mu = 0; mu < dim; ++mu) {
    for (int nu = mu + 1; nu < dim; ++nu) {
      auto& out = f.upper[static_cast<std::size_t>(pair_index(mu, nu, dim))];
      out.resize(grid.size());
      const auto& amu = a.components[static_cast<std::size_t>(mu)];
      const auto& anu = a.components[static_cast<std::size_t>(nu)];
      for (std::size_t p = 0; p < grid.size(); ++p) {
        out[p] = central_difference(anu, grid, p, mu) - central_difference(amu, grid, p, nu) +
                 lie::commutator(amu[p], anu[p]);
      }
    }
  }
  return f;
}

/// Abelian constant-curvature field on T^4 with H = diag(1, -1, 0, ..., 0):
/// F_{12} = 2 pi i n1 H, F_{34} = 2 pi i n2 H, all other components zero.
inline CurvatureField constant_curvature_config(int r, int n1, int n2, const TorusGrid& grid) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "r must be at least 2");
  if (grid.dim() != 4) throw Error(ErrorCode::invalid_argument, "constant curvature configuration lives on T^4");
  ComplexMatrix h = ComplexMatrix::Zero(r, r);
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  CurvatureField f{grid, r, std::vector<MatrixSamples>(static_cast<std::size_t>(pair_count(4)))};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      ComplexMatrix value = ComplexMatrix::Zero(r, r);
      if (mu == 0 && nu == 1) value = two_pi_i * static_cast<double>(n1) * h;
      if (mu == 2 && nu == 3) value = two_pi_i * static_cast<double>(n2) * h;
      f.upper[static_cast<std::size_t>(pair_index(mu, nu, 4))] = MatrixSamples(grid.size(), value);
    }
  }
  return f;
}

/// (r / 4 pi^2 kappa) sum_x <F ^ F>(x) h^4 with
/// <F ^ F> = 2 <F12, F34> - 2 <F13, F24> + 2 <F14, F23>.
/// kappa cancels, so the value does not depend on the chosen scale.
inline double chern_weil_integral(const CurvatureField& f, const lie::InnerProductScale& scale) {
  if (f.grid.dim() != 4) throw Error(ErrorCode::invalid_argument, "chern_weil_integral needs a 4-dimensional grid");
  if (!(scale.kappa > 0.0)) throw Error(ErrorCode::invalid_argument, "kappa must be positive");
  const double kappa = scale.kappa;
  CompensatedSum sum;
  for (std::size_t p = 0; p < f.grid.size(); ++p) {
    const double density = 2.0 * (lie::inner_product(f.upper_component(0, 1, p), f.upper_component(2, 3, p), kappa) -
                                  lie::inner_product(f.upper_component(0, 2, p), f.upper_component(1, 3, p), kappa) +
                                  lie::inner_product(f.upper_component(0, 3, p), f.upper_component(1, 2, p), kappa));
    sum.add(density);
  }
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return f.rank / (4.0 * pi2 * kappa) * sum.value() * f.grid.cell_volume();
}

/// Pointwise u^{-1} F u.
inline CurvatureField conjugate_curvature(const CurvatureField& f, const GaugeMapField& u) {
  if (!(f.grid == u.grid) || f.rank != u.rank) throw Error(ErrorCode::grid_mismatch, "curvature and gauge map differ");
  CurvatureField out = f;
  for (auto& comp : out.upper)
    for (std::size_t p = 0; p < comp.size(); ++p) comp[p] = u.samples[p].adjoint() * comp[p] * u.samples[p];
  return out;
}

/// Shape of the test maps T^3 -> SU(2) used by `winding_map`.
enum class WindingProfile {
  /// exp(i pi w phi(|y|/R) yhat . sigma) around the cell center, identity
  /// outside the ball of radius R; phi is the odd septic smoothstep.
  bump,
  /// q/|q| for q = (2 - sum cos 2 pi x_i, sin 2 pi x_1, sin 2 pi x_2,
  /// sin 2 pi x_3), raised to the power w.  Analytic and periodic.
  trigonometric,
};

struct WindingMapOptions {
  WindingProfile profile = WindingProfile::trigonometric;
  double radius = 0.5;  // bump only
};

/// Odd smoothstep with phi(0) = 0, phi(1) = 1 and phi', phi'', phi''' = 0 at 1.
inline double septic_smoothstep(double t) {
  if (t >= 1.0) return 1.0;
  const double t2 = t * t;
  return t * (35.0 + t2 * (-35.0 + t2 * (21.0 - 5.0 * t2))) / 16.0;
}

namespace detail {

/// a0 I + i (a1 sigma_1 + a2 sigma_2 + a3 sigma_3) for a unit quaternion.
inline ComplexMatrix su2_from_quaternion(double a0, double a1, double a2, double a3) {
  ComplexMatrix u(2, 2);
  u(0, 0) = Complex(a0, a3);
  u(0, 1) = Complex(a2, a1);
  u(1, 0) = Complex(-a2, a1);
  u(1, 1) = Complex(a0, -a3);
  return u;
}

}  // namespace detail

inline constexpr double kTrigReparam = 0.5;

/// Smooth periodic map T^3 -> SU(2) of winding number w.
inline GaugeMapField winding_map(int w, const TorusGrid& grid, int r = 2, const WindingMapOptions& options = {}) {
  if (r != 2) throw Error(ErrorCode::unsupported, "winding maps are implemented for r = 2 only");
  if (grid.dim() != 3) throw Error(ErrorCode::invalid_argument, "winding maps live on T^3");
  GaugeMapField u{grid, 2, MatrixSamples(grid.size())};
  const double pi = std::numbers::pi;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    std::array<double, 3> x{grid.position(p, 0), grid.position(p, 1), grid.position(p, 2)};
    if (options.profile == WindingProfile::bump) {
      std::array<double, 3> y{x[0] - 0.5, x[1] - 0.5, x[2] - 0.5};
      const double rho = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
      const double angle = pi * w * septic_smoothstep(rho / options.radius);
      // The (-1)^w factor makes the map identically 1 outside the ball.
      const double sign = (w % 2 == 0) ? 1.0 : -1.0;
      const double s = rho > 0.0 ? std::sin(angle) / rho : 0.0;
      u.samples[p] = sign * detail::su2_from_quaternion(std::cos(angle), s * y[0], s * y[1], s * y[2]);
    } else {
      // Reparametrize each circle by t - beta sin(2 pi t) / 2 pi to spread the
      // pulled-back volume, which otherwise concentrates near the origin.
      for (auto& t : x) t -= kTrigReparam * std::sin(2 * pi * t) / (2 * pi);
      const double q0 = 2.0 - std::cos(2 * pi * x[0]) - std::cos(2 * pi * x[1]) - std::cos(2 * pi * x[2]);
      std::array<double, 3> q{std::sin(2 * pi * x[0]), std::sin(2 * pi * x[1]), std::sin(2 * pi * x[2])};
      const double vnorm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
      // q/|q| = cos(a) + sin(a) n.sigma; the power w multiplies the angle.  The
      // imaginary part is negated so that w = 1 has winding number +1.
      const double a = std::atan2(vnorm, q0);
      const double s = vnorm > 0.0 ? -std::sin(w * a) / vnorm : 0.0;
      u.samples[p] = detail::su2_from_quaternion(std::cos(w * a), s * q[0], s * q[1], s * q[2]);
    }
  }
  return u;
}

/// Maurer-Cartan forms theta_mu = u^{-1} d_mu u by centered differences.
inline std::vector<MatrixSamples> maurer_cartan_forms(const GaugeMapField& u) {
  const auto& grid = u.grid;
  std::vector<MatrixSamples> theta(static_cast<std::size_t>(grid.dim()), MatrixSamples(grid.size()));
  for (int mu = 0; mu < grid.dim(); ++mu)
    for (std::size_t p = 0; p < grid.size(); ++p)
      theta[static_cast<std::size_t>(mu)][p] = u.samples[p].adjoint() * central_difference(u.samples, grid, p, mu);
  return theta;
}

/// (1 / 24 pi^2) int tr((u^{-1} du)^3) = (1 / 8 pi^2) int tr(theta_1 [theta_2, theta_3]).
inline double maurer_cartan_winding(const GaugeMapField& u) {
  if (u.grid.dim() != 3) throw Error(ErrorCode::invalid_argument, "winding number needs T^3");
  const auto theta = maurer_cartan_forms(u);
  CompensatedSum sum;
  for (std::size_t p = 0; p < u.grid.size(); ++p)
    sum.add((theta[0][p] * lie::commutator(theta[1][p], theta[2][p])).trace().real());
  return sum.value() * u.grid.cell_volume() / (8.0 * std::numbers::pi * std::numbers::pi);
}

inline void check_same_grid(const ConnectionField& a, const GaugeMapField& u) {
  if (!(a.grid == u.grid)) throw Error(ErrorCode::grid_mismatch, "connection and gauge map live on different grids");
  if (a.rank != u.rank) throw Error(ErrorCode::rank_mismatch, "connection and gauge map have different rank");
}

/// (u* a0)_mu = u^{-1} d_mu u + u^{-1} (a0)_mu u, projected back to su(r).
inline ConnectionField pullback_connection(const ConnectionField& a0, const GaugeMapField& u) {
  check_same_grid(a0, u);
  const auto theta = maurer_cartan_forms(u);
  ConnectionField out{a0.grid, a0.rank, a0.components};
  for (int mu = 0; mu < a0.grid.dim(); ++mu) {
    auto& comp = out.components[static_cast<std::size_t>(mu)];
    for (std::size_t p = 0; p < comp.size(); ++p) {
      const auto& g = u.samples[p];
      comp[p] = lie::project_to_su(theta[static_cast<std::size_t>(mu)][p] + g.adjoint() * comp[p] * g);
    }
  }
  return out;
}

enum class Orientation { positive, negative };

/// Composite Simpson weights on n intervals of [0, 1].  When n is odd the
/// last three intervals use the 3/8 rule.
inline std::vector<double> simpson_weights(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "Simpson quadrature needs at least 2 intervals");
  const double h = 1.0 / n;
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  const int simpson_end = (n % 2 == 0) ? n : n - 3;
  for (int j = 0; j + 2 <= simpson_end; j += 2) {
    w[static_cast<std::size_t>(j)] += h / 3.0;
    w[static_cast<std::size_t>(j) + 1] += 4.0 * h / 3.0;
    w[static_cast<std::size_t>(j) + 2] += h / 3.0;
  }
  if (simpson_end != n) {
    const auto j = static_cast<std::size_t>(simpson_end);
    w[j] += 3.0 * h / 8.0;
    w[j + 1] += 9.0 * h / 8.0;
    w[j + 2] += 9.0 * h / 8.0;
    w[j + 3] += 3.0 * h / 8.0;
  }
  return w;
}

/// int_X <F ^ b> for a curvature F and a 1-form b on T^3:
/// <F12, b3> - <F13, b2> + <F23, b1>.
inline double wedge_pairing(const CurvatureField& f, const std::vector<MatrixSamples>& b, double kappa) {
  CompensatedSum sum;
  for (std::size_t p = 0; p < f.grid.size(); ++p) {
    sum.add(lie::inner_product(f.upper_component(0, 1, p), b[2][p], kappa) -
            lie::inner_product(f.upper_component(0, 2, p), b[1][p], kappa) +
            lie::inner_product(f.upper_component(1, 2, p), b[0][p], kappa));
  }
  return sum.value() * f.grid.cell_volume();
}

/// (r / 4 pi^2 kappa) int_0^1 int_X <F_{a(s)} ^ d_s a> along the straight path
/// from a0 to u* a0 (reversed for Orientation::negative).
inline double degree_integral(const ConnectionField& a0, const GaugeMapField& u, const lie::InnerProductScale& scale,
                              int s_steps, Orientation orientation = Orientation::positive) {
  if (s_steps < 2) throw Error(ErrorCode::invalid_argument, "s_steps must be at least 2");
  if (a0.grid.dim() != 3) throw Error(ErrorCode::invalid_argument, "degree_integral needs a connection on T^3");
  if (!(scale.kappa > 0.0)) throw Error(ErrorCode::invalid_argument, "kappa must be positive");
  check_same_grid(a0, u);
  const auto target = pullback_connection(a0, u);
  const auto& start = orientation == Orientation::positive ? a0 : target;
  const auto& end = orientation == Orientation::positive ? target : a0;

  std::vector<MatrixSamples> velocity = end.components;
  for (std::size_t mu = 0; mu < velocity.size(); ++mu)
    for (std::size_t p = 0; p < velocity[mu].size(); ++p) velocity[mu][p] -= start.components[mu][p];

  const auto weights = simpson_weights(s_steps);
  ConnectionField path = start;
  CompensatedSum total;
  for (int j = 0; j <= s_steps; ++j) {
    const double s = static_cast<double>(j) / s_steps;
    for (std::size_t mu = 0; mu < velocity.size(); ++mu)
      for (std::size_t p = 0; p < velocity[mu].size(); ++p)
        path.components[mu][p] = start.components[mu][p] + s * velocity[mu][p];
    const auto f = curvature_from_connection(path);
    total.add(weights[static_cast<std::size_t>(j)] * wedge_pairing(f, velocity, scale.kappa));
  }
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return a0.rank / (4.0 * pi2 * scale.kappa) * total.value();
}

/// Max over points and triples of |D_i F_jk + D_j F_ki + D_k F_ij| with
/// D_i X = d_i X + [A_i, X].  Zero in the continuum.
inline double bianchi_residual(const ConnectionField& a, const CurvatureField& f) {
  const auto& grid = a.grid;
  const int dim = grid.dim();
  auto covariant = [&](int i, int j, int k, std::size_t p) {
    const double inv = 0.5 / grid.spacing();
    const ComplexMatrix fjk = f.component(j, k, p);
    return ComplexMatrix(inv * (f.component(j, k, grid.shift(p, i, 1)) - f.component(j, k, grid.shift(p, i, -1))) +
                         lie::commutator(a.components[static_cast<std::size_t>(i)][p], fjk));
  };
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k)
        for (std::size_t p = 0; p < grid.size(); ++p) {
          const ComplexMatrix res = covariant(i, j, k, p) + covariant(j, k, i, p) + covariant(k, i, j, p);
          worst = std::max(worst, res.norm());
        }
  return worst;
}

/// Max over points and pairs of |F_{u* a} - u^{-1} F_a u|.
inline double equivariance_residual(const ConnectionField& a0, const GaugeMapField& u) {
  check_same_grid(a0, u);
  const auto f0 = conjugate_curvature(curvature_from_connection(a0), u);
  const auto f1 = curvature_from_connection(pullback_connection(a0, u));
  double worst = 0.0;
  for (std::size_t c = 0; c < f0.upper.size(); ++c)
    for (std::size_t p = 0; p < f0.upper[c].size(); ++p)
      worst = std::max(worst, (f1.upper[c][p] - f0.upper[c][p]).norm());
  return worst;
}

/// Value at h = 0 of the polynomial in h^2 through (h_i^2, v_i): Richardson
/// extrapolation for an error expansion in even powers of the spacing.
inline double richardson_extrapolate(std::span<const int> grid_sizes, std::span<const double> values) {
  if (grid_sizes.size() != values.size() || grid_sizes.empty())
    throw Error(ErrorCode::invalid_argument, "richardson_extrapolate: mismatched inputs");
  double result = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double xi = 1.0 / (static_cast<double>(grid_sizes[i]) * grid_sizes[i]);
    double basis = 1.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j == i) continue;
      const double xj = 1.0 / (static_cast<double>(grid_sizes[j]) * grid_sizes[j]);
      basis *= (0.0 - xj) / (xi - xj);
    }
    result += basis * values[i];
  }
  return result;
}

/// Smooth periodic su(2)-valued connection on T^dim used by the convergence
/// studies: every component is a low-frequency trigonometric combination of
/// i sigma_k, so the connection is non-abelian and non-flat.
inline ConnectionField smooth_test_connection(const TorusGrid& grid, double amplitude = 0.7) {
  const auto basis = lie::su_basis(2);
  auto a = ConnectionField::zero(grid, 2);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int mu = 0; mu < grid.dim(); ++mu) {
    for (std::size_t p = 0; p < grid.size(); ++p) {
      ComplexMatrix value = ComplexMatrix::Zero(2, 2);
      for (int k = 0; k < 3; ++k) {
        double phase = 0.3 * (mu + 1) * (k + 1);
        for (int axis = 0; axis < grid.dim(); ++axis)
          phase += two_pi * grid.position(p, axis) * (((axis + mu + k) % 3 == 0) ? 1.0 : 0.0);
        value += amplitude * std::sin(phase + 0.5 * k) * basis[static_cast<std::size_t>(k)];
      }
      a.components[static_cast<std::size_t>(mu)][p] = value;
    }
  }
  return a;
}

/// Smooth periodic map T^dim -> SU(2) of winding number zero:
/// exp(i sum_k f_k(x) sigma_k) with low-frequency f_k.
inline GaugeMapField smooth_test_gauge(const TorusGrid& grid, double amplitude = 0.8) {
  const auto basis = lie::su_basis(2);
  GaugeMapField u{grid, 2, MatrixSamples(grid.size())};
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    ComplexMatrix x = ComplexMatrix::Zero(2, 2);
    for (int k = 0; k < 3; ++k) {
      double phase = 0.7 * k;
      for (int axis = 0; axis < grid.dim(); ++axis)
        phase += two_pi * grid.position(p, axis) * (((axis + k) % 2 == 0) ? 1.0 : 0.0);
      x += amplitude * std::cos(phase) * basis[static_cast<std::size_t>(k)];
    }
    u.samples[p] = lie::unitary_exp(x);
  }
  return u;
}

}  // namespace gauge_atlas::lattice
