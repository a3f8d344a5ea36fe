#pragma once

// Integral cohomology of closed oriented connected manifolds of dimension 2
// or 3 with torsion-free homology, presented through the Poincare pairing
// on H^1, together with the Kunneth model of S^1 x X.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gauge_atlas/error.hpp"
#include "gauge_atlas/number_theory.hpp"

namespace gauge_atlas {

/// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t n = rows.size();
    const std::size_t c = n == 0 ? 0 : rows.front().size();
    IntMatrix m(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != c)
        throw Error(ErrorCode::schema_error, "matrix rows have unequal length");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  [[nodiscard]] std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  [[nodiscard]] std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline std::int64_t determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::invalid_argument, "determinant of non-square matrix");
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Inverse of a unimodular integer matrix through its adjugate.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::int64_t det = determinant(m);
  if (det != 1 && det != -1)
    throw Error(ErrorCode::invariant_violation, "matrix is not unimodular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == j) continue;
          minor(ra, cb++) = m(a, b);
        }
        ++ra;
      }
      const std::int64_t cof = ((i + j) % 2 == 0 ? 1 : -1) * determinant(minor);
      inv(j, i) = cof * det;
    }
  }
  return inv;
}

/// A cohomology class given by coordinates in the model's basis of H^degree.
/// `modulus == 0` means integral coefficients, otherwise Z_modulus, in which
/// case coefficients are kept reduced to [0, modulus).
struct CohClass {
  int degree = 0;
  std::vector<std::int64_t> coefficients;
  std::int64_t modulus = 0;

  [[nodiscard]] bool integral() const { return modulus == 0; }
  [[nodiscard]] bool is_zero() const {
    for (auto c : coefficients)
      if (c != 0) return false;
    return true;
  }

  static CohClass integral_class(int degree, std::vector<std::int64_t> coefficients) {
    return {degree, std::move(coefficients), 0};
  }

  static CohClass residue_class(int degree, std::vector<std::int64_t> coefficients, std::int64_t n) {
    for (auto& c : coefficients) c = mod(c, n);
    return {degree, std::move(coefficients), n};
  }

  friend bool operator==(const CohClass&, const CohClass&) = default;
};

inline CohClass mod_r_reduce(const CohClass& x, std::int64_t r) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "mod_r_reduce: r must be at least 2");
  if (!x.integral()) {
    if (x.modulus % r != 0)
      throw Error(ErrorCode::ring_mismatch, "mod_r_reduce: Z_n class only reduces to Z_r when r divides n");
  }
  return CohClass::residue_class(x.degree, x.coefficients, r);
}

/// Closed oriented connected manifold of dimension 2 or 3 with torsion-free
/// homology.  H^0 and H^dim are Z (the latter generated by the dual of the
/// fundamental class); H^1 has rank b1.  In dimension 3, H^2 also has rank
/// b1 and `pairing` is the cup pairing H^1 x H^2 -> H^3 = Z.  In dimension 2,
/// `pairing` is the antisymmetric cup pairing H^1 x H^1 -> H^2 = Z.
class CohomologyModel {
 public:
  CohomologyModel(std::string name, int dimension, IntMatrix pairing)
      : name_(std::move(name)), dimension_(dimension), pairing_(std::move(pairing)) {
    validate();
  }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] int b1() const { return static_cast<int>(pairing_.rows()); }
  [[nodiscard]] const IntMatrix& pairing() const { return pairing_; }

  [[nodiscard]] int rank(int degree) const {
    if (degree < 0 || degree > dimension_) return 0;
    if (degree == 0 || degree == dimension_) return 1;
    return b1();
  }

  /// The class with coefficient 1 on the dual of the fundamental class.
  [[nodiscard]] CohClass top_class() const { return CohClass::integral_class(dimension_, {1}); }

  /// Evaluation <x cup y>[X] for complementary degrees.
  [[nodiscard]] std::int64_t cup_eval(const CohClass& x, const CohClass& y) const {
    if (x.degree + y.degree != dimension_)
      throw Error(ErrorCode::degree_mismatch, "cup_eval: degrees must sum to the dimension");
    if (x.modulus != y.modulus)
      throw Error(ErrorCode::ring_mismatch, "cup_eval: coefficient rings differ");
    check_shape(x);
    check_shape(y);
    std::int64_t value = 0;
    if (x.degree == 0 || y.degree == 0) {
      value = x.coefficients[0] * y.coefficients[0];
    } else if (dimension_ == 3 && x.degree == 1) {
      value = bilinear(x.coefficients, y.coefficients);
    } else if (dimension_ == 3) {
      // H^2 x H^1: graded commutativity sign (-1)^(2*1) = +1.
      value = bilinear(y.coefficients, x.coefficients);
    } else {
      value = bilinear(x.coefficients, y.coefficients);
    }
    return x.integral() ? value : mod(value, x.modulus);
  }

  void check_shape(const CohClass& x) const {
    if (x.degree < 0 || x.degree > dimension_)
      throw Error(ErrorCode::degree_mismatch, "class degree outside [0, dim]");
    if (static_cast<int>(x.coefficients.size()) != rank(x.degree))
      throw Error(ErrorCode::invalid_argument,
                  "class of degree " + std::to_string(x.degree) + " needs " +
                      std::to_string(rank(x.degree)) + " coefficients on " + name_);
  }

  /// Poincare dual in H^2 of a loop class gamma in H_1 (dimension 3 only),
  /// i.e. the class c with <x cup c>[X] = x . gamma for all x in H^1.
  [[nodiscard]] CohClass poincare_dual_of_loop(const std::vector<std::int64_t>& gamma) const {
    if (dimension_ != 3)
      throw Error(ErrorCode::unsupported, "poincare_dual_of_loop needs a 3-manifold");
    if (static_cast<int>(gamma.size()) != b1())
      throw Error(ErrorCode::invalid_argument, "loop class has wrong length");
    return CohClass::integral_class(2, unimodular_inverse(pairing_).apply(gamma));
  }

  friend bool operator==(const CohomologyModel&, const CohomologyModel&) = default;

 private:
  [[nodiscard]] std::int64_t bilinear(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * pairing_(i, j) * y[j];
    return s;
  }

  void validate() const {
    if (dimension_ != 2 && dimension_ != 3)
      throw Error(ErrorCode::invariant_violation, "dimension: must be 2 or 3");
    if (pairing_.rows() != pairing_.cols())
      throw Error(ErrorCode::invariant_violation, "pairing not square");
    const char* field = dimension_ == 3 ? "cup12" : "cup11";
    if (dimension_ == 2) {
      if (pairing_.rows() % 2 != 0)
        throw Error(ErrorCode::invariant_violation, "b1: must be even for a surface");
      for (std::size_t i = 0; i < pairing_.rows(); ++i)
        for (std::size_t j = 0; j < pairing_.cols(); ++j)
          if (pairing_(i, j) != -pairing_(j, i))
            throw Error(ErrorCode::invariant_violation, std::string(field) + ": pairing not antisymmetric");
    }
    const auto det = determinant(pairing_);
    if (det != 1 && det != -1)
      throw Error(ErrorCode::invariant_violation, std::string(field) + ": pairing not unimodular");
  }

  std::string name_;
  int dimension_;
  IntMatrix pairing_;
};

/// A class on S^1 x X split as base_part + ds cup ds_part.
struct ProductClass {
  CohClass base_part;  // H^k(X)
  CohClass ds_part;    // H^{k-1}(X)
};

/// Kunneth model H^k(S^1 x X) = H^k(X) + ds cup H^{k-1}(X).  Flattened
/// coordinates list the H^k(X) part first and then the ds part.  The
/// orientation makes ds cup [X]^* the positive generator of the top group.
class ProductModel {
 public:
  explicit ProductModel(CohomologyModel base) : base_(std::move(base)) {}

  [[nodiscard]] const CohomologyModel& base() const { return base_; }
  [[nodiscard]] int dimension() const { return base_.dimension() + 1; }
  [[nodiscard]] std::string name() const { return "S1x" + base_.name(); }

  [[nodiscard]] int rank(int degree) const { return base_.rank(degree) + base_.rank(degree - 1); }

  [[nodiscard]] ProductClass split(const CohClass& x) const {
    if (static_cast<int>(x.coefficients.size()) != rank(x.degree))
      throw Error(ErrorCode::invalid_argument,
                  "class of degree " + std::to_string(x.degree) + " needs " +
                      std::to_string(rank(x.degree)) + " coefficients on " + name());
    const auto n0 = static_cast<std::ptrdiff_t>(base_.rank(x.degree));
    ProductClass p;
    p.base_part = {x.degree, {x.coefficients.begin(), x.coefficients.begin() + n0}, x.modulus};
    p.ds_part = {x.degree - 1, {x.coefficients.begin() + n0, x.coefficients.end()}, x.modulus};
    return p;
  }

  [[nodiscard]] CohClass join(const ProductClass& p) const {
    if (p.base_part.degree != p.ds_part.degree + 1)
      throw Error(ErrorCode::degree_mismatch, "join: ds part must have degree one less");
    if (p.base_part.modulus != p.ds_part.modulus)
      throw Error(ErrorCode::ring_mismatch, "join: coefficient rings differ");
    CohClass x{p.base_part.degree, p.base_part.coefficients, p.base_part.modulus};
    x.coefficients.insert(x.coefficients.end(), p.ds_part.coefficients.begin(), p.ds_part.coefficients.end());
    if (static_cast<int>(x.coefficients.size()) != rank(x.degree))
      throw Error(ErrorCode::invalid_argument, "join: summand sizes do not match the model");
    return x;
  }

  /// The positive generator e = ds cup [X]^* of the top group, as a multiple of
  /// which every top-degree class is recorded.
  [[nodiscard]] CohClass top_class() const {
    return join({CohClass::integral_class(dimension(), {}), base_.top_class()});
  }

  /// Evaluation on [S^1 x X] of x cup y for complementary degrees, with
  /// (a + ds b)(a' + ds b') = a a' + ds (b a' + (-1)^|a| a b') and ds ds = 0.
  /// The a a' term lies in H^{dim+1}(X) = 0.
  [[nodiscard]] std::int64_t cup_eval(const CohClass& x, const CohClass& y) const {
    if (x.degree + y.degree != dimension())
      throw Error(ErrorCode::degree_mismatch, "cup_eval: degrees must sum to the dimension");
    if (x.modulus != y.modulus)
      throw Error(ErrorCode::ring_mismatch, "cup_eval: coefficient rings differ");
    const auto px = split(x);
    const auto py = split(y);
    std::int64_t value = 0;
    if (!px.ds_part.coefficients.empty() && !py.base_part.coefficients.empty())
      value += base_.cup_eval(px.ds_part, py.base_part);
    if (!px.base_part.coefficients.empty() && !py.ds_part.coefficients.empty()) {
      const std::int64_t sign = (px.base_part.degree % 2 == 0) ? 1 : -1;
      value += sign * base_.cup_eval(px.base_part, py.ds_part);
    }
    return x.integral() ? value : mod(value, x.modulus);
  }

  /// Restriction of a class to the fiber {pt} x X.
  [[nodiscard]] CohClass restrict_to_fiber(const CohClass& x) const { return split(x).base_part; }

  friend bool operator==(const ProductModel&, const ProductModel&) = default;

 private:
  CohomologyModel base_;
};

inline ProductModel kunneth_model(const CohomologyModel& model) { return ProductModel(model); }

}  // namespace gauge_atlas
