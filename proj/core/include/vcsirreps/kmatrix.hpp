#pragma once

#include "vcsirreps/exact.hpp"
#include "vcsirreps/operator.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <nlohmann/json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace vcsirreps::kmatrix {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

class InconsistentGamma : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sector {
  std::string label;
  int grade = 0;
  std::size_t dim = 0;
};

struct Generator {
  std::string name;
  std::string adjoint;
  int grade_shift = 0;
};

/// Non-unitary realization Gamma on a graded raw basis.
template <class T>
struct GammaRep {
  std::vector<Sector> sectors;
  std::vector<Generator> generators;
  /// (generator, target sector, source sector) -> block of shape dim(target) x dim(source)
  std::map<std::tuple<std::string, std::size_t, std::size_t>, Matrix<T>> blocks;
  /// Seed S-blocks; minimal-grade sectors without an entry get the identity.
  std::map<std::size_t, Matrix<T>> seeds;

  std::size_t sector_index(const std::string& label) const;
  const Generator& generator(const std::string& name) const;
  std::size_t offset(std::size_t sector) const;
  std::size_t total_dim() const;
  void validate() const;
};

struct Options {
  double tol = 1e-10;
};

template <class T>
struct SSolution {
  std::vector<Matrix<T>> blocks;
  double residual = 0.0;
};

template <class T>
SSolution<T> solve_s_recursion(const GammaRep<T>& rep, const Options& options = {});

/// max over all generator blocks of ||S Gamma(X)^T - Gamma(X^dagger) S|| / (1 + ||S|| ||Gamma(X)||)
template <class T>
double recursion_residual(const GammaRep<T>& rep, const std::vector<Matrix<T>>& s);

struct SectorBasis {
  Eigen::MatrixXd U;
  Eigen::VectorXd k;
  std::vector<bool> positive;
};

struct Orthonormal {
  std::vector<SectorBasis> sectors;
  std::size_t positive_count = 0;
  std::size_t zero_norm_count = 0;
};

Orthonormal orthonormalize(const std::vector<Eigen::MatrixXd>& s_blocks, const Options& options = {});

struct ExactOrthonormal {
  std::vector<std::vector<Radical>> k;
  std::size_t positive_count = 0;
  std::size_t zero_norm_count = 0;
};

/// Exact path; every S-block must be diagonal.
ExactOrthonormal orthonormalize_exact(const std::vector<Matrix<Rational>>& s_blocks);

struct StateRef {
  std::size_t sector = 0;
  std::size_t alpha = 0;
};

struct Unitarized {
  std::vector<StateRef> states;
  OperatorSet gamma;
  double hermiticity_residual = 0.0;
};

Unitarized unitarize(const GammaRep<double>& rep, const Orthonormal& orth);
Unitarized unitarize_exact(const GammaRep<Rational>& rep, const ExactOrthonormal& orth);

GammaRep<double> to_double(const GammaRep<Rational>& rep);

GammaRep<double> gamma_rep_from_json(const nlohmann::json& doc);
GammaRep<Rational> gamma_rep_exact_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const GammaRep<double>& rep);
nlohmann::json to_json(const GammaRep<Rational>& rep);

}  // namespace vcsirreps::kmatrix
