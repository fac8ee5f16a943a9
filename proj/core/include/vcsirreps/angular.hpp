#pragma once

#include "vcsirreps/exact.hpp"

#include <compare>
#include <string>

namespace vcsirreps {

/// Integer or half-odd-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int value) : twice_(2 * value) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static HalfInt from_rational(const Rational& q);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  Rational value() const { return Rational(twice_, 2); }
  double to_double() const { return 0.5 * twice_; }
  std::string to_string() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  int twice_ = 0;
};

/// Angular momentum quantum number; always non-negative.
using Spin = HalfInt;

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

/// (-1)^k for integer-valued k; throws if k is half-odd.
int phase(HalfInt k);

bool triangle(HalfInt a, HalfInt b, HalfInt c);

/// Condon-Shortley coefficient (j1 m1, j2 m2 | J M).
Radical clebsch_gordan(Spin j1, HalfInt m1, Spin j2, HalfInt m2, Spin J, HalfInt M);

/// Wigner 6j symbol {a b c; d e f}.
Radical wigner_6j(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f);

/// Unitary recoupling coefficient U(abcd; ef) = (-1)^{a+b+c+d} sqrt((2e+1)(2f+1)) {a b e; d c f}.
Radical racah_U(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f);

double clebsch_gordan_d(Spin j1, HalfInt m1, Spin j2, HalfInt m2, Spin J, HalfInt M);

struct CoefficientCacheStats {
  std::size_t cg_entries;
  std::size_t u_entries;
};
CoefficientCacheStats coefficient_cache_stats();

}  // namespace vcsirreps
