#include "oracles.hpp"

#include <Eigen/LU>

#include <cmath>
#include <stdexcept>

namespace oracles {

SpinMatrices spin_matrices(int tj) {
  const int n = tj + 1;
  SpinMatrices s{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  const double j = 0.5 * tj;
  for (int i = 0; i < n; ++i) {
    const double m = j - i;
    s.jz(i, i) = m;
    if (i > 0) s.jp(i - 1, i) = std::sqrt((j - m) * (j + m + 1));
  }
  s.jm = s.jp.transpose();
  return s;
}

double cg_bruteforce(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  if (tm1 + tm2 != tM) return 0.0;
  if (tJ > tj1 + tj2 || tJ < std::abs(tj1 - tj2) || (tj1 + tj2 + tJ) % 2) return 0.0;
  const SpinMatrices a = spin_matrices(tj1), b = spin_matrices(tj2);
  const int na = tj1 + 1, nb = tj2 + 1;
  const Eigen::MatrixXd ia = Eigen::MatrixXd::Identity(na, na), ib = Eigen::MatrixXd::Identity(nb, nb);
  auto kron = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j) out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
  };
  const Eigen::MatrixXd jp = kron(a.jp, ib) + kron(ia, b.jp);
  const Eigen::MatrixXd jm = kron(a.jm, ib) + kron(ia, b.jm);
  // product index (i, k) -> m1 = j1 - i, m2 = j2 - k
  std::vector<int> sub;
  for (int i = 0; i < na; ++i)
    for (int k = 0; k < nb; ++k)
      if ((tj1 - 2 * i) + (tj2 - 2 * k) == tJ) sub.push_back(i * nb + k);
  Eigen::MatrixXd restricted(jp.rows(), static_cast<Eigen::Index>(sub.size()));
  for (std::size_t c = 0; c < sub.size(); ++c) restricted.col(static_cast<Eigen::Index>(c)) = jp.col(sub[c]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(restricted);
  Eigen::MatrixXd ker = lu.kernel();
  if (ker.cols() != 1) throw std::logic_error("stretched state not unique");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(na * nb);
  for (std::size_t c = 0; c < sub.size(); ++c) v(sub[c]) = ker(static_cast<Eigen::Index>(c), 0);
  v.normalize();
  // Condon-Shortley: <j1 j1, j2 J-j1 | J J> > 0
  const int k0 = (tj2 - (tJ - tj1)) / 2;
  if (v(k0) < 0) v = -v;
  for (int step = 0; step < (tJ - tM) / 2; ++step) {
    v = jm * v;
    v.normalize();
  }
  const int i = (tj1 - tm1) / 2, k = (tj2 - tm2) / 2;
  return v(i * nb + k);
}

double racah_u_contracted(int ta, int tb, int tc, int td, int te, int tf) {
  auto tri = [](int x, int y, int z) { return z <= x + y && z >= std::abs(x - y) && (x + y + z) % 2 == 0; };
  if (!tri(ta, tb, te) || !tri(te, td, tc) || !tri(tb, td, tf) || !tri(ta, tf, tc)) return 0.0;
  const int tmc = tc;
  double sum = 0.0;
  for (int tma = -ta; tma <= ta; tma += 2)
    for (int tmb = -tb; tmb <= tb; tmb += 2) {
      const int tmd = tmc - tma - tmb;
      if (std::abs(tmd) > td || (td - tmd) % 2) continue;
      const int tme = tma + tmb, tmf = tmb + tmd;
      if (std::abs(tme) > te || std::abs(tmf) > tf) continue;
      sum += cg_bruteforce(ta, tma, tb, tmb, te, tme) * cg_bruteforce(te, tme, td, tmd, tc, tmc) *
             cg_bruteforce(tb, tmb, td, tmd, tf, tmf) * cg_bruteforce(ta, tma, tf, tmf, tc, tmc);
    }
  return sum;
}

std::size_t gt_pattern_count(int l1, int l2, int l3) {
  std::size_t count = 0;
  for (int m12 = l2; m12 <= l1; ++m12)
    for (int m22 = l3; m22 <= l2; ++m22)
      for (int m11 = m22; m11 <= m12; ++m11) ++count;
  return count;
}

Eigen::Matrix3d defining_matrix(int i, int j) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(i - 1, j - 1) = 1.0;
  return m;
}

std::vector<vcsirreps::Rational> geometric_power(int k, int order) {
  std::vector<vcsirreps::Rational> base(static_cast<std::size_t>(order) + 1, vcsirreps::Rational(1));
  std::vector<vcsirreps::Rational> acc = base;
  for (int p = 1; p < k; ++p) {
    std::vector<vcsirreps::Rational> next(acc.size(), vcsirreps::Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; i + j < acc.size(); ++j) next[i + j] += acc[i] * base[j];
    acc = std::move(next);
  }
  return acc;
}

std::vector<vcsirreps::Rational> su11_recursion_squares(const vcsirreps::Rational& lambda, int n_max) {
  std::vector<vcsirreps::Rational> out{vcsirreps::Rational(1)};
  for (int n = 0; n < n_max; ++n) out.push_back(out.back() * (lambda + n) / vcsirreps::Rational(n + 1));
  return out;
}

}  // namespace oracles

namespace oracles {

Eigen::MatrixXd intertwiner(const std::vector<Eigen::MatrixXd>& a, const std::vector<Eigen::MatrixXd>& b) {
  const Eigen::Index n = a.front().rows();
  const Eigen::Index m = b.front().rows();
  Eigen::MatrixXd system(static_cast<Eigen::Index>(a.size()) * n * m, n * m);
  const Eigen::MatrixXd in = Eigen::MatrixXd::Identity(n, n), im = Eigen::MatrixXd::Identity(m, m);
  for (std::size_t k = 0; k < a.size(); ++k) {
    // vec(A V - V B) = (I (x) A - B^T (x) I) vec(V)
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n * m, n * m);
    for (Eigen::Index p = 0; p < m; ++p)
      for (Eigen::Index q = 0; q < m; ++q) {
        block.block(p * n, q * n, n, n) = im(p, q) * a[k] - b[k](q, p) * in;
      }
    system.middleRows(static_cast<Eigen::Index>(k) * n * m, n * m) = block;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv(sv.size() - 1) > 1e-9) return {};
  Eigen::VectorXd v = svd.matrixV().col(n * m - 1);
  Eigen::MatrixXd V = Eigen::Map<Eigen::MatrixXd>(v.data(), n, m);
  const double scale = std::sqrt((V.transpose() * V).trace() / static_cast<double>(m));
  return V / scale;
}

}  // namespace oracles
