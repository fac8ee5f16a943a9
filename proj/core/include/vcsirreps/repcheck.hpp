#pragma once

#include "vcsirreps/exact.hpp"
#include "vcsirreps/operator.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vcsirreps::repcheck {

struct Term {
  Radical coeff;
  std::string name;
};

struct CasimirTerm {
  Radical coeff;
  std::string left;
  std::string right;
};

/// Generator names, structure constants [A,B] = sum c C, adjoint table X^dagger = phase * Y, and a quadratic Casimir.
struct AlgebraSpec {
  std::string name;
  std::vector<std::string> generators;
  std::map<std::pair<std::string, std::string>, std::vector<Term>> brackets;
  std::map<std::string, std::pair<int, std::string>> adjoints;
  std::vector<CasimirTerm> casimir;

  /// Bracket lookup; pairs absent from the table commute.
  std::vector<Term> bracket(const std::string& a, const std::string& b) const;

  /// Throws std::invalid_argument on unknown names, broken antisymmetry or a failing Jacobi identity.
  void validate() const;
  bool jacobi_holds() const;

  static AlgebraSpec from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

AlgebraSpec su11_spec();
AlgebraSpec u3_spec();
AlgebraSpec su3_so3_spec();
/// "su11", "u3" or "su3-so3".
AlgebraSpec builtin_spec(const std::string& name);

struct Restriction {
  std::optional<std::size_t> leading_block;
};

double commutator_residual(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r = {});
double hermiticity_residual(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r = {});
Eigen::MatrixXd casimir_matrix(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r = {});

/// Number of generator pairs whose exact commutator differs from the table.
std::size_t exact_commutator_failures(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r = {});
std::size_t exact_hermiticity_failures(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r = {});
SurdMatrix exact_casimir(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r = {});
/// The scalar if the matrix is an exact multiple of the identity.
std::optional<Surd> exact_scalar(const SurdMatrix& m);

struct SchurResult {
  double mean = 0.0;
  double deviation = 0.0;
};
SchurResult schur_constancy(const Eigen::MatrixXd& m);
SchurResult schur_constancy(const Eigen::MatrixXcd& m);

std::vector<double> spectrum_multiset(const Eigen::MatrixXd& m);

}  // namespace vcsirreps::repcheck
