#pragma once

#include "vcsirreps/kmatrix.hpp"
#include "vcsirreps/su11.hpp"
#include "vcsirreps/u3.hpp"

#include <vector>

namespace vcsirreps::holomorphic {

/// su(1,1) on monomials z^n: S- = d/dz, S+ = z^2 d/dz + lambda z, S0 = z d/dz + lambda/2.
kmatrix::GammaRep<Rational> su11_gamma(const su11::Irrep& irrep);

struct U3Realization {
  kmatrix::GammaRep<double> rep;
  /// Canonical label of each sector (all sectors are one-dimensional).
  std::vector<u3::CanonicalLabel> labels;
};

/// u(3) differential realization on [phi_j x xi_s]_{SM}, truncated at 2j = l1 - l3.
U3Realization u3_gamma(const u3::Weight& hw);

}  // namespace vcsirreps::holomorphic
