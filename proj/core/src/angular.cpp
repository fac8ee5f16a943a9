#include "vcsirreps/angular.hpp"

#include <array>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace vcsirreps {

namespace {

const BigInt& factorial(int n) {
  static std::shared_mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  if (n < 0) throw std::logic_error("factorial of negative argument");
  {
    std::shared_lock lock(mutex);
    if (static_cast<std::size_t>(n) < table.size()) return table[n];
  }
  std::unique_lock lock(mutex);
  table.reserve(std::max<std::size_t>(table.capacity(), 512));
  while (table.size() <= static_cast<std::size_t>(n)) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[n];
}

// half-integer differences that must be integral are passed as twice-values
int half(int twice) {
  if (twice % 2) throw std::logic_error("expected an integral combination of spins");
  return twice / 2;
}

void check_projection(HalfInt j, HalfInt m) {
  if (j.twice() < 0) throw std::invalid_argument("negative spin " + j.to_string());
  if ((j.twice() - m.twice()) % 2 != 0) {
    throw std::invalid_argument("projection " + m.to_string() + " has wrong parity for spin " + j.to_string());
  }
  if (m.twice() > j.twice() || m.twice() < -j.twice()) {
    throw std::invalid_argument("projection " + m.to_string() + " out of range for spin " + j.to_string());
  }
}

// Delta(abc)^2
Rational delta_sq(int ta, int tb, int tc) {
  return Rational(factorial(half(ta + tb - tc)) * factorial(half(ta - tb + tc)) * factorial(half(-ta + tb + tc)),
                  factorial(half(ta + tb + tc) + 1));
}

template <std::size_t N>
struct ArrayHash {
  std::size_t operator()(const std::array<int, N>& a) const noexcept {
    std::size_t h = 0;
    for (int v : a) h = h * 1000003u ^ static_cast<std::size_t>(v + 512);
    return h;
  }
};

template <std::size_t N>
class Memo {
 public:
  template <class F>
  Radical get(const std::array<int, N>& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Radical value = compute();
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
    return value;
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::array<int, N>, Radical, ArrayHash<N>> map_;
};

Memo<6>& cg_memo() {
  static Memo<6> memo;
  return memo;
}

Memo<6>& u_memo() {
  static Memo<6> memo;
  return memo;
}

Radical cg_compute(int j1, int m1, int j2, int m2, int J, int M) {
  // all arguments are twice-values
  Rational pre = Rational(J + 1) * delta_sq(j1, j2, J) * Rational(factorial(half(J + M)) * factorial(half(J - M)) *
                                                                   factorial(half(j1 - m1)) * factorial(half(j1 + m1)) *
                                                                   factorial(half(j2 - m2)) * factorial(half(j2 + m2)));
  // Delta carries 1/(j1+j2+J+1)!, the remaining factorials are in the sum denominators
  int kmin = std::max({0, half(j2 - J - m1), half(j1 - J + m2)});
  int kmax = std::min({half(j1 + j2 - J), half(j1 - m1), half(j2 + m2)});
  Rational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    BigInt den = factorial(k) * factorial(half(j1 + j2 - J) - k) * factorial(half(j1 - m1) - k) *
                 factorial(half(j2 + m2) - k) * factorial(half(J - j2 + m1) + k) * factorial(half(J - j1 - m2) + k);
    Rational term(BigInt(1), den);
    sum += (k % 2 ? Rational(-term) : term);
  }
  if (sum == 0) return Radical();
  return Radical::from_parts(sum > 0 ? 1 : -1, pre * sum * sum);
}

Radical sixj_compute(int a, int b, int c, int d, int e, int f) {
  Rational pre = delta_sq(a, b, c) * delta_sq(a, e, f) * delta_sq(d, b, f) * delta_sq(d, e, c);
  int t1 = half(a + b + c), t2 = half(a + e + f), t3 = half(d + b + f), t4 = half(d + e + c);
  int u1 = half(a + b + d + e), u2 = half(b + c + e + f), u3 = half(c + a + f + d);
  int tmin = std::max({t1, t2, t3, t4});
  int tmax = std::min({u1, u2, u3});
  Rational sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    BigInt den = factorial(t - t1) * factorial(t - t2) * factorial(t - t3) * factorial(t - t4) * factorial(u1 - t) *
                 factorial(u2 - t) * factorial(u3 - t);
    Rational term(factorial(t + 1), den);
    sum += (t % 2 ? Rational(-term) : term);
  }
  if (sum == 0) return Radical();
  return Radical::from_parts(sum > 0 ? 1 : -1, pre * sum * sum);
}

}  // namespace

HalfInt HalfInt::from_rational(const Rational& q) {
  Rational tw = q * 2;
  if (boost::multiprecision::denominator(tw) != 1) {
    throw std::invalid_argument("not a half-integer: " + rational_to_string(q));
  }
  return from_twice(boost::multiprecision::numerator(tw).convert_to<int>());
}

std::string HalfInt::to_string() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

int phase(HalfInt k) {
  if (!k.is_integer()) throw std::logic_error("phase of a half-odd exponent " + k.to_string());
  return (k.twice() / 2) % 2 == 0 ? 1 : -1;
}

bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  int ta = a.twice(), tb = b.twice(), tc = c.twice();
  if (ta < 0 || tb < 0 || tc < 0) return false;
  if ((ta + tb + tc) % 2 != 0) return false;
  return tc <= ta + tb && tc >= std::abs(ta - tb);
}

Radical clebsch_gordan(Spin j1, HalfInt m1, Spin j2, HalfInt m2, Spin J, HalfInt M) {
  check_projection(j1, m1);
  check_projection(j2, m2);
  check_projection(J, M);
  if (m1 + m2 != M || !triangle(j1, j2, J)) return Radical();

  // canonical key: M >= 0 and (j1,m1) <= (j2,m2), tracking the symmetry phases
  int sign = 1;
  int a = j1.twice(), ma = m1.twice(), b = j2.twice(), mb = m2.twice(), c = J.twice(), mc = M.twice();
  const int swap_phase = ((a + b - c) / 2) % 2 ? -1 : 1;
  if (mc < 0 || (mc == 0 && ma < 0)) {
    ma = -ma;
    mb = -mb;
    mc = -mc;
    sign *= swap_phase;
  }
  if (std::make_pair(a, ma) > std::make_pair(b, mb)) {
    std::swap(a, b);
    std::swap(ma, mb);
    sign *= swap_phase;
  }
  std::array<int, 6> key{a, ma, b, mb, c, mc};
  Radical r = cg_memo().get(key, [&] { return cg_compute(a, ma, b, mb, c, mc); });
  return sign > 0 ? r : -r;
}

double clebsch_gordan_d(Spin j1, HalfInt m1, Spin j2, HalfInt m2, Spin J, HalfInt M) {
  return clebsch_gordan(j1, m1, j2, m2, J, M).to_double();
}

Radical wigner_6j(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) {
  for (HalfInt s : {a, b, c, d, e, f}) {
    if (s.twice() < 0) throw std::invalid_argument("negative spin in 6j symbol");
  }
  if (!triangle(a, b, c) || !triangle(a, e, f) || !triangle(d, b, f) || !triangle(d, e, c)) return Radical();
  return sixj_compute(a.twice(), b.twice(), c.twice(), d.twice(), e.twice(), f.twice());
}

Radical racah_U(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) {
  std::array<int, 6> key{a.twice(), b.twice(), c.twice(), d.twice(), e.twice(), f.twice()};
  for (int v : key) {
    if (v < 0) throw std::invalid_argument("negative spin in Racah U");
  }
  if (!triangle(a, b, e) || !triangle(e, d, c) || !triangle(b, d, f) || !triangle(a, f, c)) return Radical();
  return u_memo().get(key, [&] {
    Radical w = wigner_6j(a, b, e, d, c, f);
    Radical norm = Radical::sqrt(Rational((e.twice() + 1) * (f.twice() + 1)));
    Radical u = w * norm;
    return phase(a + b + c + d) > 0 ? u : -u;
  });
}

CoefficientCacheStats coefficient_cache_stats() {
  return {cg_memo().size(), u_memo().size()};
}

}  // namespace vcsirreps
