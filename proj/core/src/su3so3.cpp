#include "vcsirreps/su3so3.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>

namespace vcsirreps::su3 {

namespace {

constexpr double kEdgeTol = 1e-9;
constexpr double kDegeneracyTol = 1e-9;

Radical cg(int j1, int m1, int j2, int m2, int J, int M) {
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J) return Radical();
  return clebsch_gordan(Spin(j1), HalfInt(m1), Spin(j2), HalfInt(m2), Spin(J), HalfInt(M));
}

Eigen::MatrixXcd real_to_complex(const Eigen::MatrixXd& m) {
  return m.cast<std::complex<double>>();
}

template <class Mat>
Mat casimir_impl(const std::map<std::string, Mat>& ops) {
  const Mat& L0 = ops.at("L0");
  const Mat& Lp = ops.at("L+");
  const Mat& Lm = ops.at("L-");
  Mat qq = ops.at("Q0") * ops.at("Q0");
  qq -= ops.at("Q1") * ops.at("Q-1") + ops.at("Q-1") * ops.at("Q1");
  qq += ops.at("Q2") * ops.at("Q-2") + ops.at("Q-2") * ops.at("Q2");
  Mat ll = L0 * L0 + 0.5 * (Lp * Lm + Lm * Lp);
  return 0.25 * qq + 0.75 * ll;
}

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"L0", "L+", "L-", "Q-2", "Q-1", "Q0", "Q1", "Q2"};
  return names;
}

void Label::validate() const {
  if (lam < 0 || mu < 0) throw std::invalid_argument("su(3) label (lam, mu) must be non-negative");
}

std::size_t Label::dimension() const {
  validate();
  return static_cast<std::size_t>((lam + 1) * (mu + 1) * (lam + mu + 2) / 2);
}

std::string Label::tag() const {
  return "su3-so3(" + std::to_string(lam) + "," + std::to_string(mu) + ")";
}

std::string RotorLabel::to_string() const {
  return "alpha=" + std::to_string(alpha) + ",L=" + std::to_string(L) + ",M=" + std::to_string(M);
}

int max_candidate_L(const Label& lm) {
  return lm.lam + lm.mu + 2;
}

std::vector<int> k_values(const Label& lm, int L) {
  lm.validate();
  std::vector<int> ks;
  if (L < 0 || L > max_candidate_L(lm)) return ks;
  for (int K = lm.mu % 2; K <= lm.mu; K += 2) {
    if (K > L) break;
    if (K == 0 && (lm.lam + L) % 2 != 0) continue;
    ks.push_back(K);
  }
  return ks;
}

Eigen::MatrixXd MBlock::to_double() const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(Kp.size()), static_cast<Eigen::Index>(K.size()));
  for (std::size_t r = 0; r < Kp.size(); ++r) {
    for (std::size_t c = 0; c < K.size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entries[r][c].to_double();
    }
  }
  return m;
}

MBlock m_matrix(const Label& lm, int Lp, int L) {
  lm.validate();
  MBlock block;
  block.Lp = Lp;
  block.L = L;
  if (std::abs(Lp - L) > 2) return block;
  block.Kp = k_values(lm, Lp);
  block.K = k_values(lm, L);
  block.entries.assign(block.Kp.size(), std::vector<Surd>(block.K.size()));
  const int lam = lm.lam, mu = lm.mu;
  const Rational diag_coeff = Rational(2 * lam + mu + 3) - Rational(Lp * (Lp + 1), 2) + Rational(L * (L + 1), 2);
  for (std::size_t c = 0; c < block.K.size(); ++c) {
    const int K = block.K[c];
    for (std::size_t r = 0; r < block.Kp.size(); ++r) {
      const int Kp = block.Kp[r];
      Surd v;
      if (Kp == K) {
        v += Surd(Radical(diag_coeff) * cg(L, K, 2, 0, Lp, K));
        if (K == 1) {
          Radical refl = Radical::sqrt(Rational(3, 2)) * Radical(mu + 1) * cg(L, -1, 2, 2, Lp, 1);
          v += Surd((lam + L + 1) % 2 ? -refl : refl);
        }
      }
      for (int sg : {1, -1}) {
        if (Kp != K + 2 * sg) continue;
        Rational f = Rational(3, 2) * (mu - sg * K) * (mu + sg * K + 2);
        if (K == 0) f *= 2;
        if (Kp == 0) f *= 2;
        v += Surd(Radical::sqrt(f) * cg(L, K, 2, 2 * sg, Lp, Kp));
      }
      block.entries[r][c] = v;
    }
  }
  return block;
}

XEigenbasis x_eigenbasis(const Label& lm, int L) {
  MBlock block = m_matrix(lm, L, L);
  if (block.empty()) throw std::invalid_argument("no rotor candidates at L=" + std::to_string(L));
  XEigenbasis out;
  out.L = L;
  out.K = block.K;
  Eigen::MatrixXd m = block.to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()));
  out.eigenvalues = solver.eigenvalues();
  out.U = solver.eigenvectors();
  const Eigen::Index n = out.U.cols();
  double scale = std::max(1.0, out.eigenvalues.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 1; i < n; ++i) {
    if (out.eigenvalues(i) - out.eigenvalues(i - 1) < kDegeneracyTol * scale) {
      throw std::runtime_error("degenerate X eigenvalues at L=" + std::to_string(L) + " in " + lm.tag());
    }
  }
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index arg = 0;
    out.U.col(c).cwiseAbs().maxCoeff(&arg);
    if (out.U(arg, c) < 0) out.U.col(c) *= -1.0;
  }
  return out;
}

Irrep::Irrep(Label lm) : lm_(lm) {
  lm_.validate();
  const int max_L = max_candidate_L(lm_);
  const int top = lm_.lam + lm_.mu;
  for (int L = 0; L <= max_L; ++L) {
    if (!k_values(lm_, L).empty()) eig_.emplace(L, x_eigenbasis(lm_, L));
  }
  for (const auto& [L, eL] : eig_) {
    for (const auto& [Lp, eLp] : eig_) {
      if (std::abs(L - Lp) > 2) continue;
      Eigen::MatrixXd proj = eLp.U.transpose() * m_matrix(lm_, Lp, L).to_double() * eL.U;
      scale_ = std::max(scale_, proj.cwiseAbs().maxCoeff());
      projected_.emplace(std::pair{Lp, L}, std::move(proj));
    }
  }

  // Keep the largest set closed under Q-connections that never reaches L > lam + mu.
  std::set<std::pair<int, int>> bad;
  std::vector<std::pair<int, int>> all;
  for (const auto& [L, eL] : eig_) {
    for (int a = 0; a < static_cast<int>(eL.K.size()); ++a) {
      all.emplace_back(L, a);
      if (L > top) bad.emplace(L, a);
    }
  }
  const double edge = kEdgeTol * std::max(scale_, 1.0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : all) {
      if (bad.count(s)) continue;
      for (const auto& [key, proj] : projected_) {
        if (key.second != s.first) continue;
        for (Eigen::Index b = 0; b < proj.rows(); ++b) {
          if (std::abs(proj(b, s.second)) > edge && bad.count({key.first, static_cast<int>(b)})) {
            bad.insert(s);
            changed = true;
            break;
          }
        }
        if (bad.count(s)) break;
      }
    }
  }
  for (const auto& s : all) {
    if (!bad.count(s)) states_.push_back(s);
  }
  for (const auto& [L, a] : states_) {
    for (int M = -L; M <= L; ++M) basis_.push_back({a, L, M});
  }
  if (basis_.size() != lm_.dimension()) {
    throw std::logic_error("rotor basis size " + std::to_string(basis_.size()) + " differs from dimension of " +
                           lm_.tag());
  }

  for (const auto& [Lp, b] : states_) {
    for (const auto& [L, a] : states_) {
      if (std::abs(L - Lp) > 2) continue;
      const double m1 = projected_.at({Lp, L})(b, a);
      const double m2 = projected_.at({L, Lp})(a, b);
      if (std::abs(m1) <= edge) {
        if (std::abs(m2) > edge) throw std::logic_error("one-sided quadrupole connection in " + lm_.tag());
        continue;
      }
      const double ratio = ((L - Lp) % 2 ? -1.0 : 1.0) * m2 / m1;
      if (ratio <= 0) throw std::logic_error("negative norm ratio in " + lm_.tag());
      reduced_.emplace(std::tuple{b, Lp, a, L},
                       std::pow((2.0 * L + 1) * (2.0 * Lp + 1), 0.25) * m1 * std::sqrt(ratio));
    }
  }
}

std::map<int, int> Irrep::multiplicities() const {
  std::map<int, int> out;
  for (const auto& [L, a] : states_) ++out[L];
  return out;
}

const Eigen::MatrixXd& Irrep::projected_m(int Lp, int L) const {
  auto it = projected_.find({Lp, L});
  if (it == projected_.end()) throw std::out_of_range("no projected M block for requested L pair");
  return it->second;
}

bool Irrep::contains(int alpha, int L) const {
  return std::find(states_.begin(), states_.end(), std::pair{L, alpha}) != states_.end();
}

double Irrep::reduced_q(int beta, int Lp, int alpha, int L) const {
  auto it = reduced_.find({beta, Lp, alpha, L});
  return it == reduced_.end() ? 0.0 : it->second;
}

OperatorSet Irrep::generators() const {
  const auto n = static_cast<Eigen::Index>(basis_.size());
  std::map<std::string, Eigen::MatrixXd> g;
  for (const auto& name : generator_names()) g[name] = Eigen::MatrixXd::Zero(n, n);
  std::map<std::tuple<int, int, int>, Eigen::Index> index;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = basis_[static_cast<std::size_t>(i)];
    index.emplace(std::tuple{s.L, s.alpha, s.M}, i);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& [a, L, M] = basis_[static_cast<std::size_t>(i)];
    g["L0"](i, i) = M;
    if (auto up = index.find({L, a, M + 1}); up != index.end()) {
      g["L+"](up->second, i) = std::sqrt(double((L - M) * (L + M + 1)));
    }
    if (auto down = index.find({L, a, M - 1}); down != index.end()) {
      g["L-"](down->second, i) = std::sqrt(double((L + M) * (L - M + 1)));
    }
  }
  for (const auto& [key, red] : reduced_) {
    const auto& [b, Lp, a, L] = key;
    for (int M = -L; M <= L; ++M) {
      for (int nu = -2; nu <= 2; ++nu) {
        const int Mp = M + nu;
        if (std::abs(Mp) > Lp) continue;
        double c = cg(L, M, 2, nu, Lp, Mp).to_double();
        if (c == 0.0) continue;
        const std::string name = nu == 0 ? "Q0" : "Q" + std::to_string(nu);
        g[name](index.at({Lp, b, Mp}), index.at({L, a, M})) += c * red / std::sqrt(2.0 * Lp + 1);
      }
    }
  }
  OperatorSet out;
  for (auto& [name, m] : g) out.emplace(name, OperatorMatrix::from_dense(name, lm_.tag(), std::move(m)));
  return out;
}

double reduced_q(const Label& lm, int beta, int Lp, int alpha, int L) {
  return Irrep(lm).reduced_q(beta, Lp, alpha, L);
}

OperatorSet assemble_so3_generators(const Label& lm) {
  return Irrep(lm).generators();
}

std::map<int, int> rotor_multiplicities(const Label& lm) {
  return Irrep(lm).multiplicities();
}

std::map<std::string, Eigen::MatrixXcd> canonical_so3_operators(const OperatorSet& c) {
  const std::complex<double> I(0.0, 1.0);
  auto C = [&](int i, int j) { return real_to_complex(c.at(u3::generator_name(i, j)).values); };
  const double r = std::sqrt(1.5);
  Eigen::MatrixXcd h1 = C(1, 1) - C(2, 2);
  Eigen::MatrixXcd h2 = C(2, 2) - C(3, 3);
  std::map<std::string, Eigen::MatrixXcd> ops;
  ops["L0"] = -I * (C(2, 3) - C(3, 2));
  ops["L+"] = I * (C(1, 3) - C(3, 1)) + (C(1, 2) - C(2, 1));
  ops["L-"] = I * (C(1, 3) - C(3, 1)) - (C(1, 2) - C(2, 1));
  ops["Q0"] = 2.0 * h1 + h2;
  ops["Q1"] = -r * (C(1, 2) + C(2, 1) + I * (C(1, 3) + C(3, 1)));
  ops["Q-1"] = r * (C(1, 2) + C(2, 1) - I * (C(1, 3) + C(3, 1)));
  ops["Q2"] = r * (h2 + I * (C(2, 3) + C(3, 2)));
  ops["Q-2"] = r * (h2 - I * (C(2, 3) + C(3, 2)));
  return ops;
}

Eigen::MatrixXcd casimir(const std::map<std::string, Eigen::MatrixXcd>& ops) {
  return casimir_impl(ops);
}

Eigen::MatrixXd casimir(const OperatorSet& ops) {
  std::map<std::string, Eigen::MatrixXd> m;
  for (const auto& name : generator_names()) m.emplace(name, ops.at(name).values);
  return casimir_impl(m);
}

std::map<int, int> branching_oracle(const Label& lm) {
  lm.validate();
  auto ops = canonical_so3_operators(u3::assemble_generators(lm.u3_weight()));
  Eigen::MatrixXcd l2 = ops["L0"] * ops["L0"] + 0.5 * (ops["L+"] * ops["L-"] + ops["L-"] * ops["L+"]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (l2 + l2.adjoint()));
  std::map<int, int> counts;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double e = solver.eigenvalues()(i);
    const double Lf = 0.5 * (std::sqrt(1.0 + 4.0 * std::max(e, 0.0)) - 1.0);
    const int L = static_cast<int>(std::lround(Lf));
    if (std::abs(L * (L + 1.0) - e) > 1e-8 * std::max(1.0, e)) {
      throw std::logic_error("L^2 eigenvalue is not of the form L(L+1) in " + lm.tag());
    }
    ++counts[L];
  }
  std::map<int, int> mult;
  for (const auto& [L, count] : counts) {
    if (count % (2 * L + 1) != 0) throw std::logic_error("L^2 eigenvalue count not a multiple of 2L+1");
    mult[L] = count / (2 * L + 1);
  }
  return mult;
}

}  // namespace vcsirreps::su3
