// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero if any criterion fails.

#include <vcsirreps/angular.hpp>
#include <vcsirreps/holomorphic.hpp>
#include <vcsirreps/kmatrix.hpp>
#include <vcsirreps/repcheck.hpp>
#include <vcsirreps/serialize.hpp>
#include <vcsirreps/su11.hpp>
#include <vcsirreps/su3so3.hpp>
#include <vcsirreps/u3.hpp>

#include "oracles/oracles.hpp"

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace vcsirreps;

namespace {

// Pinned tolerances.
constexpr double kU3FloatTol = 1e-12;
constexpr double kU3SchurTol = 1e-12;
constexpr double kIntertwinerTol = 1e-12;
constexpr double kSu3Tol = 1e-10;
constexpr double kCrossCasimirTol = 1e-10;
constexpr double kKMatrixTol = 1e-12;
constexpr int kSpinSweepTwiceMax = 8;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

const std::vector<Rational>& su11_lambdas() {
  static const std::vector<Rational> l{Rational(1), Rational(2), Rational(3), Rational(7, 2)};
  return l;
}

const std::vector<u3::Weight>& u3_weights() {
  static const std::vector<u3::Weight> w{{1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {4, 2, 0}, {3, 3, 0}};
  return w;
}

const std::vector<su3::Label>& su3_labels() {
  static const std::vector<su3::Label> l{{2, 0}, {0, 2}, {1, 1}, {2, 2}, {4, 2}};
  return l;
}

double rel(const Eigen::MatrixXcd& m, double scale) { return m.norm() / (1.0 + scale); }

// ---------------------------------------------------------------- criteria

void ac1(Outcome& o) {
  for (const auto& lambda : su11_lambdas()) {
    su11::Irrep irrep{lambda, 20};
    const std::string tag = irrep.tag();
    auto squares = oracles::su11_recursion_squares(lambda, 20);
    auto rep = holomorphic::su11_gamma(irrep);
    auto sol = kmatrix::solve_s_recursion(rep);
    auto orth = kmatrix::orthonormalize_exact(sol.blocks);
    auto kernel = su11::s_kernel_coefficients(irrep, 20);
    for (int n = 0; n <= 20; ++n) {
      const Radical k = su11::k_factor(irrep, n);
      o.require(k.sign() > 0 && k.square() == squares[n], tag + " recursion at n=" + std::to_string(n));
      o.require(sol.blocks[n](0, 0) == kernel[n], tag + " S-diagonal vs kernel at n=" + std::to_string(n));
      o.require(orth.k[n][0] == k, tag + " sqrt(S) vs k_factor at n=" + std::to_string(n));
    }
  }
  o.detail << "lambda in {1,2,3,7/2}, n<=20, exact";
}

void ac2(Outcome& o) {
  const auto spec = repcheck::su11_spec();
  for (const auto& lambda : su11_lambdas()) {
    su11::Irrep irrep{lambda, 20};
    auto ops = su11::generator_matrices(irrep);
    const repcheck::Restriction interior{static_cast<std::size_t>(irrep.n_max)};
    o.require(repcheck::exact_commutator_failures(spec, ops, interior) == 0, irrep.tag() + " interior commutators");
    auto scalar = repcheck::exact_scalar(repcheck::exact_casimir(spec, ops, interior));
    o.require(scalar && *scalar == Surd(lambda * lambda / 4 - lambda / 2), irrep.tag() + " Casimir scalar");
  }
  o.detail << "interior block, exact commutators and Casimir (1/4 lambda^2 - 1/2 lambda), deviation 0";
}

void ac3(Outcome& o) {
  const auto spec = repcheck::u3_spec();
  double worst_float = 0, worst_schur = 0;
  for (const auto& hw : u3_weights()) {
    const std::string tag = hw.tag();
    auto ops = u3::assemble_generators(hw);
    o.require(repcheck::exact_commutator_failures(spec, ops) == 0, tag + " exact commutators");
    o.require(repcheck::exact_hermiticity_failures(spec, ops) == 0, tag + " exact hermiticity");
    auto floats = io::operators_from_json(io::operators_to_json(ops, io::Precision::floating));
    worst_float = std::max({worst_float, repcheck::commutator_residual(spec, floats),
                            repcheck::hermiticity_residual(spec, floats)});
    const auto l1 = hw.l1.convert_to<int>(), l2 = hw.l2.convert_to<int>(), l3 = hw.l3.convert_to<int>();
    const std::size_t dim = static_cast<std::size_t>((l1 - l2 + 1) * (l2 - l3 + 1) * (l1 - l3 + 2) / 2);
    o.require(ops.at("C11").dim == dim && dim == oracles::gt_pattern_count(l1, l2, l3), tag + " dimension");
    worst_schur = std::max(worst_schur, repcheck::schur_constancy(repcheck::casimir_matrix(spec, floats)).deviation);
  }
  o.require(worst_float <= kU3FloatTol, "float residual");
  o.require(worst_schur <= kU3SchurTol, "Casimir Schur deviation");
  o.detail << "81 commutators + hermiticity exact; float residual " << worst_float << "; Schur " << worst_schur;
}

void ac4(Outcome& o) {
  auto ops = u3::assemble_generators({1, 0, 0});
  std::vector<Eigen::MatrixXd> a, b;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      a.push_back(ops.at(u3::generator_name(i, j)).values);
      b.push_back(oracles::defining_matrix(i, j));
    }
  Eigen::MatrixXd v = oracles::intertwiner(a, b);
  o.require(v.rows() == 3 && v.cols() == 3, "no intertwiner");
  if (!o.pass) return;
  double worst = (v.transpose() * v - Eigen::MatrixXd::Identity(3, 3)).norm();
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, (a[k] * v - v * b[k]).norm());
  o.require(worst <= kIntertwinerTol, "intertwiner residual");
  o.detail << "orthogonal intertwiner residual " << worst;
}

void ac5(Outcome& o) {
  const auto spec = repcheck::su3_so3_spec();
  double worst = 0;
  for (const auto& lm : su3_labels()) {
    auto ops = su3::assemble_so3_generators(lm);
    const auto& q2 = ops.at("Q2").values;
    const auto& qm2 = ops.at("Q-2").values;
    const auto& l0 = ops.at("L0").values;
    const double scale = q2.norm() * qm2.norm();
    const double explicit_res =
        std::max({(q2 * qm2 - qm2 * q2 - 6 * l0).norm() / (1 + scale),
                  (l0 * q2 - q2 * l0 - 2 * q2).norm() / (1 + l0.norm() * q2.norm()),
                  (l0 * qm2 - qm2 * l0 + 2 * qm2).norm() / (1 + l0.norm() * qm2.norm())});
    const double c = lm.lam * lm.lam + lm.mu * lm.mu + lm.lam * lm.mu + 3.0 * lm.lam + 3.0 * lm.mu;
    auto schur = repcheck::schur_constancy(repcheck::casimir_matrix(spec, ops));
    const double r = std::max({explicit_res, repcheck::commutator_residual(spec, ops), repcheck::hermiticity_residual(spec, ops),
                               schur.deviation, std::abs(schur.mean - c) / (1 + c)});
    o.require(r <= kSu3Tol, lm.tag());
    o.require(ops.at("L0").dim == lm.dimension(), lm.tag() + " dimension");
    worst = std::max(worst, r);
  }
  o.detail << "worst relative residual " << worst;
}

void ac6(Outcome& o) {
  double worst = 0;
  for (const auto& lm : su3_labels()) {
    o.require(su3::rotor_multiplicities(lm) == su3::branching_oracle(lm), lm.tag() + " L multiplicities");
    Eigen::MatrixXcd canon = su3::casimir(su3::canonical_so3_operators(u3::assemble_generators(lm.u3_weight())));
    Eigen::MatrixXd rotor = su3::casimir(su3::assemble_so3_generators(lm));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ec(canon);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> er(0.5 * (rotor + rotor.transpose()));
    o.require(ec.eigenvalues().size() == er.eigenvalues().size(), lm.tag() + " Casimir sizes");
    if (!o.pass) return;
    const double gap = (ec.eigenvalues() - er.eigenvalues()).cwiseAbs().maxCoeff() / (1 + er.eigenvalues().cwiseAbs().maxCoeff());
    o.require(gap <= kCrossCasimirTol, lm.tag() + " Casimir eigenvalues");
    worst = std::max(worst, gap);
  }
  o.detail << "multiplicities exact; Casimir eigenvalue gap " << worst;
}

void ac7(Outcome& o) {
  const u3::Weight hw(2, 1, 0);
  auto real = holomorphic::u3_gamma(hw);
  auto sol = kmatrix::solve_s_recursion(real.rep);
  auto orth = kmatrix::orthonormalize({sol.blocks.begin(), sol.blocks.end()});
  auto uni = kmatrix::unitarize(real.rep, orth);
  auto canon = u3::assemble_generators(hw);
  auto basis = u3::basis_enumeration(hw);
  o.require(uni.states.size() == basis.size(), "positive-norm count");
  o.require(orth.zero_norm_count == real.rep.total_dim() - basis.size(), "zero-norm count");
  if (!o.pass) return;
  std::vector<std::size_t> perm;
  for (const auto& st : uni.states) {
    auto it = std::find(basis.begin(), basis.end(), real.labels[st.sector]);
    o.require(it != basis.end(), "state label outside canonical basis");
    if (!o.pass) return;
    perm.push_back(static_cast<std::size_t>(it - basis.begin()));
  }
  double worst = 0;
  for (const auto& [name, op] : canon) {
    const Eigen::MatrixXd& g = uni.gamma.at(name).values;
    for (std::size_t r = 0; r < perm.size(); ++r)
      for (std::size_t c = 0; c < perm.size(); ++c)
        worst = std::max(worst, std::abs(g(r, c) - op.values(perm[r], perm[c])));
  }
  o.require(worst <= kKMatrixTol, "entrywise gamma mismatch");
  o.detail << "raw dim " << real.rep.total_dim() << ", zero-norm " << orth.zero_norm_count << ", max entry gap " << worst
           << ", S residual " << sol.residual;
}

void ac8(Outcome& o) {
  std::size_t columns = 0, completeness = 0, racah = 0;
  for (int tj1 = 0; tj1 <= kSpinSweepTwiceMax; ++tj1)
    for (int tj2 = 0; tj2 <= kSpinSweepTwiceMax; ++tj2) {
      // orthonormality of columns (J M), (J' M)
      for (int tM = -(tj1 + tj2); tM <= tj1 + tj2; tM += 2)
        for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2)
          for (int tJp = tJ; tJp <= tj1 + tj2; tJp += 2) {
            if (std::abs(tM) > tJ || std::abs(tM) > tJp) continue;
            Surd sum;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tM - tm1;
              if (std::abs(tm2) > tj2) continue;
              sum += Surd(clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tM)) *
                          clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJp), h(tM)));
            }
            o.require(sum == Surd(tJ == tJp ? 1 : 0), "CG orthonormality");
            ++columns;
          }
      // completeness over (J M) for pairs with equal total projection
      for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2)
          for (int tm1p = -tj1; tm1p <= tj1; tm1p += 2) {
            const int tm2p = tm1 + tm2 - tm1p;
            if (std::abs(tm2p) > tj2) continue;
            Surd sum;
            for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
              if (std::abs(tm1 + tm2) > tJ) continue;
              sum += Surd(clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tm1 + tm2)) *
                          clebsch_gordan(h(tj1), h(tm1p), h(tj2), h(tm2p), h(tJ), h(tm1 + tm2)));
            }
            o.require(sum == Surd(tm1 == tm1p ? 1 : 0), "CG completeness");
            ++completeness;
          }
    }
  // Racah U unitarity: a, b, c, d <= 4; e and f range over every triangle-allowed value
  for (int ta = 0; ta <= kSpinSweepTwiceMax; ++ta)
    for (int tb = 0; tb <= kSpinSweepTwiceMax; ++tb)
      for (int tc = 0; tc <= kSpinSweepTwiceMax; ++tc)
        for (int td = 0; td <= kSpinSweepTwiceMax; ++td) {
          if ((ta + tb + tc + td) % 2) continue;
          std::vector<int> es, fs;
          for (int te = std::abs(ta - tb); te <= ta + tb; te += 2)
            if (triangle(h(te), h(td), h(tc))) es.push_back(te);
          for (int tf = std::abs(tb - td); tf <= tb + td; tf += 2)
            if (triangle(h(ta), h(tf), h(tc))) fs.push_back(tf);
          if (es.size() != fs.size()) {
            o.require(false, "recoupling dimension mismatch");
            continue;
          }
          std::vector<std::vector<Surd>> u(es.size(), std::vector<Surd>(fs.size()));
          for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t k = 0; k < fs.size(); ++k)
              u[i][k] = Surd(racah_U(h(ta), h(tb), h(tc), h(td), h(es[i]), h(fs[k])));
          for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t ip = i; ip < es.size(); ++ip) {
              Surd sum;
              for (std::size_t k = 0; k < fs.size(); ++k) sum += u[i][k] * u[ip][k];
              o.require(sum == Surd(i == ip ? 1 : 0), "Racah unitarity");
              ++racah;
            }
        }
  o.detail << columns << " CG column pairs, " << completeness << " completeness sums, " << racah
           << " Racah row pairs, all exact";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 su(1,1) closed form vs recursion and K-matrix S-diagonal", ac1},
      {"AC2 su(1,1) interior commutators and Casimir", ac2},
      {"AC3 u(3) commutators, hermiticity, dimensions, Schur", ac3},
      {"AC4 u(3) fundamental equals defining matrices", ac4},
      {"AC5 su(3) SO(3)-basis algebra", ac5},
      {"AC6 cross-basis branching and Casimir", ac6},
      {"AC7 K-matrix engine reproduces canonical u(3) {2,1,0}", ac7},
      {"AC8 CG orthonormality/completeness and Racah unitarity, spins <= 4", ac8},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %s  [%s] (%.2fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str(), secs);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
