#pragma once

#include "vcsirreps/exact.hpp"
#include "vcsirreps/operator.hpp"

#include <string>
#include <vector>

namespace vcsirreps::su11 {

/// Truncated lowest-weight discrete-series irrep; basis n = 0..n_max.
struct Irrep {
  Rational lambda;
  int n_max = 1;

  void validate() const;
  std::size_t dim() const { return static_cast<std::size_t>(n_max) + 1; }
  std::string tag() const;
};

/// Radius of convergence of the kernel (1 - x y*)^{-lambda} in x y*.
inline constexpr double kKernelConvergenceRadius = 1.0;

Radical k_factor(const Irrep& irrep, int n);

/// S0, S+, S- in the orthonormal basis |lambda n>.
OperatorSet generator_matrices(const Irrep& irrep);

/// Coefficient nu of (1 - t)^{-lambda}, nu = 0..order.
std::vector<Rational> s_kernel_coefficients(const Irrep& irrep, int order);

}  // namespace vcsirreps::su11
