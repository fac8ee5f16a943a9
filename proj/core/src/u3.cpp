#include "vcsirreps/u3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vcsirreps::u3 {

namespace {

int integer_difference(const Rational& a, const Rational& b) {
  Rational d = a - b;
  if (boost::multiprecision::denominator(d) != 1) {
    throw std::invalid_argument("u(3) weight components must differ by integers");
  }
  return boost::multiprecision::numerator(d).convert_to<int>();
}

}  // namespace

void Weight::validate() const {
  if (integer_difference(l1, l2) < 0 || integer_difference(l2, l3) < 0) {
    throw std::invalid_argument("u(3) weight must satisfy l1 >= l2 >= l3");
  }
}

Spin Weight::intrinsic_spin() const {
  return HalfInt::from_twice(mu());
}

int Weight::lambda() const {
  return integer_difference(l1, l2);
}

int Weight::mu() const {
  return integer_difference(l2, l3);
}

std::size_t Weight::dimension() const {
  validate();
  const long a = lambda(), b = mu();
  return static_cast<std::size_t>((a + 1) * (b + 1) * (a + b + 2) / 2);
}

std::string Weight::tag() const {
  return "u3{" + rational_to_string(l1) + "," + rational_to_string(l2) + "," + rational_to_string(l3) + "}";
}

std::string CanonicalLabel::to_string() const {
  return "j=" + j.to_string() + ",S=" + S.to_string() + ",M=" + M.to_string();
}

bool admissible(const Weight& hw, HalfInt j, HalfInt S) {
  // a = m12 - l2, b = l2 - m22:  a + b = 2S,  a - b = 2j - 2s
  const int two_s = hw.mu();
  const int sum = S.twice(), diff = j.twice() - two_s;
  if (j.twice() < 0 || S.twice() < 0) return false;
  if ((sum + diff) % 2 != 0) return false;
  const int a = (sum + diff) / 2, b = (sum - diff) / 2;
  return a >= 0 && b >= 0 && a <= hw.lambda() && b <= hw.mu();
}

std::vector<CanonicalLabel> basis_enumeration(const Weight& hw) {
  hw.validate();
  const int two_s = hw.mu();
  std::vector<CanonicalLabel> basis;
  for (int a = 0; a <= hw.lambda(); ++a) {
    for (int b = 0; b <= hw.mu(); ++b) {
      HalfInt S = HalfInt::from_twice(a + b);
      HalfInt j = HalfInt::from_twice(a - b + two_s);
      for (int tm = -S.twice(); tm <= S.twice(); tm += 2) basis.push_back({j, S, HalfInt::from_twice(tm)});
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

Rational omega(const Weight& hw, HalfInt j, HalfInt S) {
  const Rational jv = j.value(), Sv = S.value(), sv = hw.intrinsic_spin().value();
  return (2 * hw.l1 - hw.l2 - hw.l3) * jv - Sv * (Sv + 1) + sv * (sv + 1) - jv * (jv - 2);
}

Rational k_ratio_sq(const Weight& hw, HalfInt j, HalfInt S, HalfInt Sp) {
  if (std::abs(S.twice() - Sp.twice()) != 1) throw std::invalid_argument("k_ratio_sq needs |S - S'| = 1/2");
  const Rational jv = j.value(), Sv = S.value(), Spv = Sp.value();
  Rational r = (2 * hw.l1 - hw.l2 - hw.l3) / 2 + Sv * (Sv + 1) - Spv * (Spv + 1) - jv + Rational(3, 4);
  if (r <= 0 && admissible(hw, j, S) && admissible(hw, j + kHalf, Sp)) {
    throw std::logic_error("non-positive K ratio for admissible labels in " + hw.tag());
  }
  return r;
}

Radical reduced_me(const Weight& hw, HalfInt j, HalfInt S, HalfInt Sp, Tensor which) {
  hw.validate();
  const HalfInt jp = j + kHalf;
  if (std::abs(S.twice() - Sp.twice()) != 1) return Radical();
  if (!admissible(hw, j, S) || !admissible(hw, jp, Sp)) return Radical();
  const Spin s = hw.intrinsic_spin();
  Radical u = racah_U(s, j, Sp, kHalf, S, jp);
  if (u.is_zero()) return Radical();
  Rational ratio = k_ratio_sq(hw, j, S, Sp);
  Radical red_f = Radical::sqrt(Rational((j.twice() + 1) * (Sp.twice() + 1))) * u * Radical::sqrt(ratio);
  if (which == Tensor::f) return red_f;
  return phase(Sp - S + kHalf) > 0 ? red_f : -red_f;
}

std::string generator_name(int i, int j) {
  return "C" + std::to_string(i) + std::to_string(j);
}

OperatorSet assemble_generators(const Weight& hw) {
  const std::vector<CanonicalLabel> basis = basis_enumeration(hw);
  const std::size_t n = basis.size();
  std::map<CanonicalLabel, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);

  std::array<std::array<ExactEntries, 3>, 3> c;
  const Rational shift = hw.l2 + hw.l3;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [j, S, M] = basis[i];
    c[0][0].emplace(Index{i, i}, Radical(hw.l1 - 2 * j.value()));
    const Rational half_sum = (shift + 2 * j.value()) / 2;
    c[1][1].emplace(Index{i, i}, Radical(half_sum + M.value()));
    c[2][2].emplace(Index{i, i}, Radical(half_sum - M.value()));
    const Rational Sv = S.value(), Mv = M.value();
    if (auto up = index.find({j, S, M + 1}); up != index.end()) {
      c[1][2].emplace(Index{up->second, i}, Radical::sqrt((Sv - Mv) * (Sv + Mv + 1)));
    }
    if (auto down = index.find({j, S, M - 1}); down != index.end()) {
      c[2][1].emplace(Index{down->second, i}, Radical::sqrt((Sv + Mv) * (Sv - Mv + 1)));
    }
  }

  // f_m raises j by 1/2; e_{-m} is its Hermitian partner.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [j, S, M] = basis[i];
    const HalfInt jp = j + kHalf;
    for (int dS : {-1, 1}) {
      const HalfInt Sp = S + HalfInt::from_twice(dS);
      if (Sp.twice() < 0) continue;
      Radical red_f = reduced_me(hw, j, S, Sp, Tensor::f);
      if (red_f.is_zero()) continue;
      Radical red_e = reduced_me(hw, j, S, Sp, Tensor::e);
      for (int dm : {-1, 1}) {
        const HalfInt m = HalfInt::from_twice(dm);
        const HalfInt Mp = M + m;
        auto target = index.find({jp, Sp, Mp});
        if (target == index.end()) continue;
        const std::size_t k = target->second;
        Radical f_me = clebsch_gordan(S, M, kHalf, m, Sp, Mp) * red_f /
                       Radical::sqrt(Rational(Sp.twice() + 1));
        if (!f_me.is_zero()) (dm > 0 ? c[1][0] : c[2][0]).emplace(Index{k, i}, f_me);
        // <j S M| e_{-m} |j' S' M'>
        Radical e_me = clebsch_gordan(Sp, Mp, kHalf, -m, S, M) * red_e /
                       Radical::sqrt(Rational(S.twice() + 1));
        if (e_me.is_zero()) continue;
        if (dm < 0) {
          c[0][2].emplace(Index{i, k}, e_me);
        } else {
          c[0][1].emplace(Index{i, k}, -e_me);
        }
      }
    }
  }

  OperatorSet out;
  const std::string tag = hw.tag();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      std::string name = generator_name(a + 1, b + 1);
      out.emplace(name, OperatorMatrix::from_exact(name, tag, n, std::move(c[a][b])));
    }
  }
  return out;
}

}  // namespace vcsirreps::u3
