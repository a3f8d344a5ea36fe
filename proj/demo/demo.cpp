// Walk through the library on T^3 and S^1 x T^3 with r = 3.

#include <iostream>

#include "gauge_atlas/bundle_classes.hpp"
#include "gauge_atlas/cohomology_model.hpp"
#include "gauge_atlas/gauge_components.hpp"
#include "gauge_atlas/lattice_chern_weil.hpp"

int main() {
  using namespace gauge_atlas;
  const int r = 3;
  const CohomologyModel t3("T3", 3, IntMatrix::identity(3));

  std::cout << "PU(3)-bundles over T3: " << enumerate_bundles(t3, r).size() << "\n";

  // The bundle with t2 lifting to c = f_3, and the degree-one class from the
  // surface class sigma = e_3 (d = 1).
  const auto c = CohClass::integral_class(2, {0, 0, 1});
  const auto sigma = CohClass::integral_class(1, {0, 0, 1});
  const auto p = make_bundle(t3, r, c);
  const auto u1 = exists_degree_one(t3, c, sigma, r);
  std::cout << "degree-one class: m = " << u1.m << ", eta = (";
  for (std::size_t i = 0; i < u1.gauge.eta.coefficients.size(); ++i)
    std::cout << (i ? "," : "") << u1.gauge.eta.coefficients[i];
  std::cout << "), deg = " << *u1.gauge.deg << "\n";

  const auto q = mapping_torus_class(p, u1.gauge);
  std::cout << "mapping torus over " << base_name(q.base) << ": q4 = " << *q.q4
            << ", congruence " << (woodward_check(q) ? "holds" : "fails") << "\n";

  const lattice::TorusGrid grid(3, 16);
  const auto u = lattice::winding_map(1, grid);
  const double deg = lattice::degree_integral(lattice::ConnectionField::zero(grid, 2), u,
                                              lie::InnerProductScale::frobenius(), 32);
  std::cout << "lattice degree of the winding-1 map at N=16: " << deg << " (continuum value 2)\n";
}
