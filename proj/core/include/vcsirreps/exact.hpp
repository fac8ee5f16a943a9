#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace vcsirreps {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Float50 = boost::multiprecision::number<boost::multiprecision::gmp_float<50>,
                                              boost::multiprecision::et_off>;

// Thrown when a radicand cannot be reduced to square-free form by trial division.
class NonRadicalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);
bool is_perfect_square(const BigInt& n);
bool is_perfect_square(const Rational& q);
BigInt integer_sqrt(const BigInt& n);

struct SquareFreeSplit {
  BigInt root;    // n = root^2 * kernel
  BigInt kernel;  // square-free
};
SquareFreeSplit square_free_split(const BigInt& n);

/// sign * sqrt(radicand), radicand a non-negative rational in lowest terms.
class Radical {
 public:
  Radical() = default;
  Radical(long value);  // NOLINT(google-explicit-constructor)
  explicit Radical(const Rational& value);

  static Radical sqrt(const Rational& radicand);
  static Radical from_parts(int sign, const Rational& radicand);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  Rational square() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }
  std::optional<Rational> rational() const;

  double to_double() const;
  Float50 to_float50() const;
  std::string to_string() const;

  Radical operator-() const { return from_parts(-sign_, radicand_); }
  friend Radical operator*(const Radical& a, const Radical& b);
  friend Radical operator/(const Radical& a, const Radical& b);
  Radical& operator*=(const Radical& o) { return *this = *this * o; }
  friend bool operator==(const Radical& a, const Radical& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }
  friend std::partial_ordering operator<=>(const Radical& a, const Radical& b);

 private:
  int sign_ = 0;
  Rational radicand_ = 0;
};

/// Exact finite sum  sum_d c_d sqrt(d)  over square-free positive integers d.
class Surd {
 public:
  Surd() = default;
  Surd(long value);  // NOLINT(google-explicit-constructor)
  explicit Surd(const Rational& value);
  explicit Surd(const Radical& value);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BigInt, Rational>& terms() const { return terms_; }
  std::optional<Radical> radical() const;
  std::optional<Rational> rational() const;
  double to_double() const;
  Float50 to_float50() const;
  std::string to_string() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator*(const Rational& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const BigInt& kernel, const Rational& coeff);
  std::map<BigInt, Rational> terms_;
};

double to_double(const Rational& q);

}  // namespace vcsirreps
