#include "vcsirreps/su11.hpp"

#include <stdexcept>

namespace vcsirreps::su11 {

void Irrep::validate() const {
  if (lambda <= 0) throw std::invalid_argument("su(1,1) lowest weight must be positive");
  if (n_max < 1) throw std::invalid_argument("su(1,1) truncation n_max must be at least 1");
}

std::string Irrep::tag() const {
  return "su11[lambda=" + rational_to_string(lambda) + ",nmax=" + std::to_string(n_max) + "]";
}

Radical k_factor(const Irrep& irrep, int n) {
  irrep.validate();
  if (n < 0 || n > irrep.n_max) throw std::out_of_range("k_factor index outside 0..n_max");
  Rational product = 1;
  for (int i = 0; i < n; ++i) product *= (irrep.lambda + i) / Rational(i + 1);
  return Radical::sqrt(product);
}

OperatorSet generator_matrices(const Irrep& irrep) {
  irrep.validate();
  const std::size_t dim = irrep.dim();
  ExactEntries s0, sp, sm;
  for (int n = 0; n <= irrep.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    s0.emplace(Index{i, i}, Radical(irrep.lambda / 2 + n));
    if (n < irrep.n_max) {
      Radical step = Radical::sqrt((irrep.lambda + n) * (n + 1));
      sp.emplace(Index{i + 1, i}, step);
      sm.emplace(Index{i, i + 1}, step);
    }
  }
  const std::string tag = irrep.tag();
  OperatorSet out;
  out.emplace("S0", OperatorMatrix::from_exact("S0", tag, dim, std::move(s0)));
  out.emplace("S+", OperatorMatrix::from_exact("S+", tag, dim, std::move(sp)));
  out.emplace("S-", OperatorMatrix::from_exact("S-", tag, dim, std::move(sm)));
  return out;
}

std::vector<Rational> s_kernel_coefficients(const Irrep& irrep, int order) {
  irrep.validate();
  if (order < 0 || order > irrep.n_max) throw std::out_of_range("kernel order outside 0..n_max");
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  Rational c = 1;
  for (int nu = 0; nu <= order; ++nu) {
    coeffs.push_back(c);
    c = c * (irrep.lambda + nu) / Rational(nu + 1);
  }
  return coeffs;
}

}  // namespace vcsirreps::su11
