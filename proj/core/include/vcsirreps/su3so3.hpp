#pragma once

#include "vcsirreps/angular.hpp"
#include "vcsirreps/operator.hpp"
#include "vcsirreps/u3.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vcsirreps::su3 {

struct Label {
  int lam = 0;
  int mu = 0;

  void validate() const;
  Spin intrinsic_spin() const { return HalfInt::from_twice(mu); }
  std::size_t dimension() const;
  u3::Weight u3_weight() const { return u3::Weight(lam + mu, mu, 0); }
  std::string tag() const;
};

struct RotorLabel {
  int alpha = 0;
  int L = 0;
  int M = 0;
  friend bool operator==(const RotorLabel&, const RotorLabel&) = default;
  std::string to_string() const;
};

/// Rotor candidates K at angular momentum L (K <= L, K = 0 only for lam + L even).
std::vector<int> k_values(const Label& lm, int L);
int max_candidate_L(const Label& lm);

/// Coefficients of the coupled action [Q x phi_{K L}]_{L'} on the symmetrized rotor functions.
struct MBlock {
  int Lp = 0;
  int L = 0;
  std::vector<int> Kp;  // row labels
  std::vector<int> K;   // column labels
  std::vector<std::vector<Surd>> entries;

  bool empty() const { return Kp.empty() || K.empty(); }
  Eigen::MatrixXd to_double() const;
};

MBlock m_matrix(const Label& lm, int Lp, int L);

struct XEigenbasis {
  int L = 0;
  std::vector<int> K;
  Eigen::MatrixXd U;
  Eigen::VectorXd eigenvalues;
};

XEigenbasis x_eigenbasis(const Label& lm, int L);

class Irrep {
 public:
  explicit Irrep(Label lm);

  const Label& label() const { return lm_; }
  /// (L, alpha) pairs inside the irrep, ordered by L then alpha.
  const std::vector<std::pair<int, int>>& states() const { return states_; }
  const std::vector<RotorLabel>& basis() const { return basis_; }
  std::map<int, int> multiplicities() const;
  /// X-eigenbasis projection U^(L')^T M^(L'L) U^(L) over all candidates.
  const Eigen::MatrixXd& projected_m(int Lp, int L) const;
  bool contains(int alpha, int L) const;

  /// <beta L'||Q||alpha L>, zero for labels outside the irrep.
  double reduced_q(int beta, int Lp, int alpha, int L) const;
  OperatorSet generators() const;

 private:
  Label lm_;
  std::map<int, XEigenbasis> eig_;
  std::map<std::pair<int, int>, Eigen::MatrixXd> projected_;
  std::vector<std::pair<int, int>> states_;
  std::vector<RotorLabel> basis_;
  std::map<std::tuple<int, int, int, int>, double> reduced_;
  double scale_ = 0.0;
};

double reduced_q(const Label& lm, int beta, int Lp, int alpha, int L);
OperatorSet assemble_so3_generators(const Label& lm);

std::map<int, int> rotor_multiplicities(const Label& lm);

/// L multiplicities from diagonalizing L^2 built in the canonical basis of {lam+mu, mu, 0}.
std::map<int, int> branching_oracle(const Label& lm);

/// L0, L+, L-, Q-2..Q2 expressed through canonical C_ij matrices (complex).
std::map<std::string, Eigen::MatrixXcd> canonical_so3_operators(const OperatorSet& c);

/// (Q.Q + 3 L.L)/4, which equals lam^2 + mu^2 + lam mu + 3 lam + 3 mu on the irrep.
Eigen::MatrixXcd casimir(const std::map<std::string, Eigen::MatrixXcd>& ops);
Eigen::MatrixXd casimir(const OperatorSet& ops);

const std::vector<std::string>& generator_names();

}  // namespace vcsirreps::su3
