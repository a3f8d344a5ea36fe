#pragma once

// Floating-point model of su(r): elements, the adjoint action in a fixed
// real basis, Ad-invariant inner products and the exponential map.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

#include "gauge_atlas/error.hpp"

namespace gauge_atlas::lie {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kElementTolerance = 1e-12;

/// Largest entry of |m + m*| and |tr m|, the two quantities that must vanish
/// for m to lie in su(r).
struct SuDefect {
  double skew;
  double trace;
};

inline SuDefect su_defect(const ComplexMatrix& m) {
  return {(m + m.adjoint()).cwiseAbs().maxCoeff(), std::abs(m.trace())};
}

inline bool is_su_matrix(const ComplexMatrix& m, double tol = kElementTolerance) {
  if (m.rows() != m.cols() || m.rows() < 2) return false;
  const auto d = su_defect(m);
  return d.skew <= tol && d.trace <= tol;
}

/// Skew-Hermitian traceless part of an arbitrary square matrix.
inline ComplexMatrix project_to_su(const ComplexMatrix& m) {
  const auto r = m.rows();
  ComplexMatrix p = 0.5 * (m - m.adjoint());
  p -= (p.trace() / static_cast<double>(r)) * ComplexMatrix::Identity(r, r);
  return p;
}

/// An element of su(r) stored as its r x r complex matrix.
class LieElement {
 public:
  explicit LieElement(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
      throw Error(ErrorCode::invalid_element, "Lie element must be a square matrix");
    if (entries_.rows() < 2)
      throw Error(ErrorCode::invalid_element, "Lie element rank must be at least 2");
    const auto d = su_defect(entries_);
    if (d.skew > kElementTolerance)
      throw Error(ErrorCode::invalid_element, "Lie element is not skew-Hermitian");
    if (d.trace > kElementTolerance)
      throw Error(ErrorCode::invalid_element, "Lie element is not traceless");
  }

  static LieElement zero(int r) {
    if (r < 2) throw Error(ErrorCode::invalid_element, "rank must be at least 2");
    return LieElement(ComplexMatrix::Zero(r, r));
  }

  [[nodiscard]] int rank() const { return static_cast<int>(entries_.rows()); }
  [[nodiscard]] const ComplexMatrix& entries() const { return entries_; }

 private:
  ComplexMatrix entries_;
};

inline int algebra_dimension(int r) { return r * r - 1; }

/// Generalized Gell-Mann basis of su(r), multiplied by i so every element is
/// skew-Hermitian.  Order: for each pair j < k (lexicographic) the symmetric
/// then the antisymmetric off-diagonal element, followed by the r - 1
/// diagonal elements.  Each basis element X satisfies tr(X X*) = 2 and the
/// basis is orthogonal for the Frobenius pairing.  For r = 2 this is
/// {i sigma_1, i sigma_2, i sigma_3}.
inline std::vector<ComplexMatrix> su_basis(int r) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "rank must be at least 2");
  const Complex i(0.0, 1.0);
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(algebra_dimension(r)));
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(r, r);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      basis.push_back(i * sym);
      ComplexMatrix anti = ComplexMatrix::Zero(r, r);
      anti(j, k) = -i;
      anti(k, j) = i;
      basis.push_back(i * anti);
    }
  }
  for (int l = 1; l < r; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(r, r);
    const double c = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) diag(j, j) = c;
    diag(l, l) = -c * l;
    basis.push_back(i * diag);
  }
  return basis;
}

/// Gram matrix of `su_basis(r)` for the Frobenius pairing Re tr(x y*).
inline Eigen::MatrixXd basis_gram(int r) {
  const auto basis = su_basis(r);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      gram(a, b) = (basis[a] * basis[b].adjoint()).trace().real();
  return gram;
}

/// Coordinates of an su(r) matrix in `su_basis(r)`.
inline Eigen::VectorXd coordinates(const ComplexMatrix& x, const std::vector<ComplexMatrix>& basis) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    c(static_cast<Eigen::Index>(a)) = 0.5 * (x * basis[a].adjoint()).trace().real();
  return c;
}

inline Eigen::VectorXd coordinates(const LieElement& x) {
  return coordinates(x.entries(), su_basis(x.rank()));
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

/// Real (r^2 - 1) x (r^2 - 1) matrix of ad(mu) = [mu, .] in `su_basis(r)`.
struct AdOperator {
  int rank;
  Eigen::MatrixXd matrix;
};

inline AdOperator ad_operator(const LieElement& mu) {
  const int r = mu.rank();
  const auto basis = su_basis(r);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index b = 0; b < n; ++b)
    m.col(b) = coordinates(commutator(mu.entries(), basis[b]), basis);
  return {r, std::move(m)};
}

/// Tr(ad(mu) o ad(nu)) as the trace of the product of the two ad matrices.
/// On su(r) this equals 2r tr(mu nu), which is negative definite.
inline double killing_trace(const LieElement& mu, const LieElement& nu) {
  if (mu.rank() != nu.rank())
    throw Error(ErrorCode::rank_mismatch, "killing_trace: rank mismatch");
  const auto a = ad_operator(mu);
  const auto b = ad_operator(nu);
  return (a.matrix * b.matrix).trace();
}

enum class ScaleFlavor { frobenius, killing, coroot, custom };

constexpr std::string_view to_string(ScaleFlavor f) {
  switch (f) {
    case ScaleFlavor::frobenius: return "frobenius";
    case ScaleFlavor::killing: return "killing";
    case ScaleFlavor::coroot: return "coroot";
    case ScaleFlavor::custom: return "custom";
  }
  return "custom";
}

/// Normalization kappa_r of <mu, nu> = -kappa_r tr(mu nu).
struct InnerProductScale {
  double kappa;
  ScaleFlavor flavor;

  static InnerProductScale frobenius() { return {1.0, ScaleFlavor::frobenius}; }
  static InnerProductScale killing(int r) { return {2.0 * r, ScaleFlavor::killing}; }
  static InnerProductScale coroot() {
    return {1.0 / (4.0 * std::numbers::pi * std::numbers::pi), ScaleFlavor::coroot};
  }
  static InnerProductScale custom(double kappa) {
    if (!(kappa > 0.0)) throw Error(ErrorCode::invalid_argument, "kappa must be positive");
    return {kappa, ScaleFlavor::custom};
  }
};

/// Raw matrix form of the inner product, for callers that hold plain su(r)
/// matrices (lattice samples) rather than validated elements.
inline double inner_product(const ComplexMatrix& mu, const ComplexMatrix& nu, double kappa) {
  return -kappa * (mu * nu).trace().real();
}

inline double inner_product(const LieElement& mu, const LieElement& nu, const InnerProductScale& scale) {
  if (mu.rank() != nu.rank())
    throw Error(ErrorCode::rank_mismatch, "inner_product: rank mismatch");
  if (!(scale.kappa > 0.0))
    throw Error(ErrorCode::invalid_argument, "inner_product: kappa must be positive");
  return inner_product(mu.entries(), nu.entries(), scale.kappa);
}

/// The element with 2 pi i in entries (1,2) and (2,1); it exponentiates to
/// diag(-1, -1, 1, ..., 1) up to conjugation, i.e. to -Id for r = 2.
inline LieElement coroot_element(int r) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "coroot_element: rank must be at least 2");
  ComplexMatrix xi = ComplexMatrix::Zero(r, r);
  const Complex v(0.0, 2.0 * std::numbers::pi);
  xi(0, 1) = v;
  xi(1, 0) = v;
  return LieElement(std::move(xi));
}

/// exp(mu) through the eigendecomposition of the Hermitian matrix -i mu.
inline ComplexMatrix unitary_exp(const ComplexMatrix& mu) {
  const Complex i(0.0, 1.0);
  const ComplexMatrix h = -i * mu;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()));
  const auto& v = solver.eigenvectors();
  Eigen::VectorXcd phases(v.rows());
  for (Eigen::Index k = 0; k < v.rows(); ++k) phases(k) = std::exp(i * solver.eigenvalues()(k));
  return v * phases.asDiagonal() * v.adjoint();
}

inline ComplexMatrix unitary_exp(const LieElement& mu) { return unitary_exp(mu.entries()); }

/// Seeded sample: standard normal real and imaginary parts, projected to
/// su(r).
template <class Rng>
LieElement random_element(int r, Rng& rng) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "random_element: rank must be at least 2");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) m(a, b) = Complex(normal(rng), normal(rng));
  return LieElement(project_to_su(m));
}

template <class Rng>
ComplexMatrix random_special_unitary(int r, Rng& rng) {
  return unitary_exp(random_element(r, rng));
}

}  // namespace gauge_atlas::lie
