#pragma once

#include "vcsirreps/angular.hpp"
#include "vcsirreps/operator.hpp"

#include <array>
#include <string>
#include <vector>

namespace vcsirreps::u3 {

/// Highest weight {l1, l2, l3}; entries may share a common non-integer shift.
struct Weight {
  Rational l1, l2, l3;

  Weight() = default;
  Weight(Rational a, Rational b, Rational c) : l1(std::move(a)), l2(std::move(b)), l3(std::move(c)) {}
  Weight(long a, long b, long c) : l1(a), l2(b), l3(c) {}

  void validate() const;
  Spin intrinsic_spin() const;  // s = (l2 - l3)/2
  int lambda() const;           // l1 - l2
  int mu() const;               // l2 - l3
  std::size_t dimension() const;
  std::string tag() const;
};

struct CanonicalLabel {
  HalfInt j, S, M;
  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
  friend auto operator<=>(const CanonicalLabel& a, const CanonicalLabel& b) {
    return std::tuple(a.j, a.S, a.M) <=> std::tuple(b.j, b.S, b.M);
  }
  std::string to_string() const;
};

enum class Tensor { e, f };

std::vector<CanonicalLabel> basis_enumeration(const Weight& hw);
bool admissible(const Weight& hw, HalfInt j, HalfInt S);

Rational omega(const Weight& hw, HalfInt j, HalfInt S);

/// |K_{j+1/2,S'} / K_{jS}|^2; throws std::logic_error when non-positive for an admissible pair.
Rational k_ratio_sq(const Weight& hw, HalfInt j, HalfInt S, HalfInt Sp);

/// f: <j+1/2,S'||f||j S>;  e: <j S||e||j+1/2,S'>.
Radical reduced_me(const Weight& hw, HalfInt j, HalfInt S, HalfInt Sp, Tensor which);

/// Names "C11" .. "C33".
std::string generator_name(int i, int j);

/// All nine C_ij in the canonical basis ordered by (2j, 2S, 2M).
OperatorSet assemble_generators(const Weight& hw);

}  // namespace vcsirreps::u3
