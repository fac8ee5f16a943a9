#include "vcsirreps/holomorphic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <tuple>

namespace vcsirreps::holomorphic {

kmatrix::GammaRep<Rational> su11_gamma(const su11::Irrep& irrep) {
  irrep.validate();
  kmatrix::GammaRep<Rational> rep;
  for (int n = 0; n <= irrep.n_max; ++n) rep.sectors.push_back({"n=" + std::to_string(n), n, 1});
  rep.generators = {{"S0", "S0", 0}, {"S+", "S-", 1}, {"S-", "S+", -1}};
  auto one = [](const Rational& v) {
    kmatrix::Matrix<Rational> m(1, 1);
    m(0, 0) = v;
    return m;
  };
  for (int n = 0; n <= irrep.n_max; ++n) {
    const auto k = static_cast<std::size_t>(n);
    rep.blocks[{"S0", k, k}] = one(irrep.lambda / 2 + n);
    if (n < irrep.n_max) rep.blocks[{"S+", k + 1, k}] = one(irrep.lambda + n);
    if (n > 0) rep.blocks[{"S-", k - 1, k}] = one(Rational(n));
  }
  return rep;
}

namespace {

// monomial z2^a z3^b times intrinsic xi_nu, nu stored as twice-value
using Mono = std::tuple<int, int, int>;
using Poly = std::map<Mono, double>;

void add(Poly& p, const Mono& m, double c) {
  if (c == 0.0) return;
  p[m] += c;
}

double fact(int n) {
  return std::tgamma(n + 1.0);
}

double inner(const Poly& a, const Poly& b) {
  double s = 0.0;
  for (const auto& [m, c] : a) {
    auto it = b.find(m);
    if (it == b.end()) continue;
    s += c * it->second * fact(std::get<0>(m)) * fact(std::get<1>(m));
  }
  return s;
}

}  // namespace

U3Realization u3_gamma(const u3::Weight& hw) {
  hw.validate();
  const Spin s = hw.intrinsic_spin();
  const double l1 = to_double(hw.l1);
  const double half_shift = to_double(hw.l2 + hw.l3) / 2.0;
  const int top = hw.lambda() + hw.mu();
  const double sv = s.to_double();

  U3Realization out;
  std::vector<Poly> raw;
  for (int tj = 0; tj <= top; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    for (int tS = std::abs(tj - s.twice()); tS <= tj + s.twice(); tS += 2) {
      const HalfInt S = HalfInt::from_twice(tS);
      for (int tM = -tS; tM <= tS; tM += 2) {
        const HalfInt M = HalfInt::from_twice(tM);
        Poly p;
        for (int tnu = -s.twice(); tnu <= s.twice(); tnu += 2) {
          const HalfInt nu = HalfInt::from_twice(tnu);
          const HalfInt m = M - nu;
          if (std::abs(m.twice()) > tj) continue;
          const double c = clebsch_gordan(s, nu, j, m, S, M).to_double();
          const int a = (tj + m.twice()) / 2, b = (tj - m.twice()) / 2;
          add(p, {a, b, tnu}, c / std::sqrt(fact(a) * fact(b)));
        }
        out.labels.push_back({j, S, M});
        raw.push_back(std::move(p));
        out.rep.sectors.push_back({out.labels.back().to_string(), tj, 1});
      }
    }
  }

  auto sigma = [&](int i, int k, const Mono& m, double c, Poly& res, int da, int db) {
    // sigma_ik acting on xi, combined with a monomial shift (da, db)
    const auto [a, b, tnu] = m;
    const double nu = 0.5 * tnu;
    const Mono base{a + da, b + db, tnu};
    if (i == 2 && k == 2) add(res, base, c * (half_shift + nu));
    if (i == 3 && k == 3) add(res, base, c * (half_shift - nu));
    if (i == 2 && k == 3 && tnu < s.twice()) add(res, {a + da, b + db, tnu + 2}, c * std::sqrt((sv - nu) * (sv + nu + 1)));
    if (i == 3 && k == 2 && tnu > -s.twice()) add(res, {a + da, b + db, tnu - 2}, c * std::sqrt((sv + nu) * (sv - nu + 1)));
  };
  auto z_shift = [](int k) { return k == 2 ? std::pair{1, 0} : std::pair{0, 1}; };

  auto apply = [&](int i, int k, const Poly& p) {
    Poly res;
    for (const auto& [m, c] : p) {
      const auto [a, b, tnu] = m;
      const int deg = a + b;
      if (i == 1 && k == 1) {
        add(res, m, c * (l1 - deg));
      } else if (i == 1) {
        // C1k = d/dz_k
        if (k == 2 && a > 0) add(res, {a - 1, b, tnu}, c * a);
        if (k == 3 && b > 0) add(res, {a, b - 1, tnu}, c * b);
      } else if (k == 1) {
        // C_i1 = l1 z_i - sum_k sigma_ik z_k - z_i (z . d)
        auto [da, db] = z_shift(i);
        add(res, {a + da, b + db, tnu}, c * (l1 - deg));
        for (int kk : {2, 3}) {
          auto [ea, eb] = z_shift(kk);
          sigma(i, kk, m, -c, res, ea, eb);
        }
      } else {
        // C_ik = sigma_ik + z_i d/dz_k
        sigma(i, k, m, c, res, 0, 0);
        const int power = k == 2 ? a : b;
        if (power > 0) {
          auto [da, db] = z_shift(i);
          auto [ea, eb] = z_shift(k);
          add(res, {a + da - ea, b + db - eb, tnu}, c * power);
        }
      }
    }
    return res;
  };

  std::map<int, std::vector<std::size_t>> by_grade;
  for (std::size_t i = 0; i < out.labels.size(); ++i) by_grade[out.labels[i].j.twice()].push_back(i);

  for (int i = 1; i <= 3; ++i) {
    for (int k = 1; k <= 3; ++k) {
      const int shift = (i == 1 && k != 1) ? -1 : ((k == 1 && i != 1) ? 1 : 0);
      out.rep.generators.push_back({u3::generator_name(i, k), u3::generator_name(k, i), shift});
      for (std::size_t src = 0; src < raw.size(); ++src) {
        const Poly image = apply(i, k, raw[src]);
        if (image.empty()) continue;
        auto grade = by_grade.find(out.labels[src].j.twice() + shift);
        if (grade == by_grade.end()) continue;
        for (std::size_t dst : grade->second) {
          const double v = inner(raw[dst], image);
          if (std::abs(v) < 1e-14) continue;
          kmatrix::Matrix<double> m(1, 1);
          m(0, 0) = v;
          out.rep.blocks[{u3::generator_name(i, k), dst, src}] = m;
        }
      }
    }
  }
  return out;
}

}  // namespace vcsirreps::holomorphic
